#pragma once

#include <functional>
#include <vector>

#include "qho/quaternion.hpp"

namespace qho {

// Product measure d(sigma) = d(tau)(r) d(theta) d(Omega),
// d(Omega) = (1/4pi) sin(phi) dphi dpsi.  Two radial reconstructions:
//   CsMeasure:       d(tau) = (1/pi) r dr          (the Gaussian e^{-r^2}
//                    lives in the integrand, e.g. in |gamma_q><gamma_q|)
//   BargmannMeasure: d(tau) = (1/pi) r e^{-r^2} dr (the Gaussian lives in
//                    the measure; makes q̄^n/sqrt(n!) orthonormal)
// Radial rule: Gauss-Laguerre in u = r^2.  theta: uniform periodic rule on
// [0, 2pi) (exact for harmonics up to order n_theta - 1).  phi: Gauss-
// Legendre in cos(phi).  psi: uniform periodic.
enum class RadialKind { CsMeasure, BargmannMeasure };

struct MeasureSpec {
    RadialKind radial_kind = RadialKind::CsMeasure;
    int n_r = 64;
    int n_theta = 32;
    int n_phi = 8;
    int n_psi = 8;
};

struct QuadNode {
    PolarForm p;
    Quaternion q;
    double weight;
};

struct QuadratureGrid {
    MeasureSpec spec;
    std::vector<QuadNode> nodes; // lexicographic in (r, theta, phi, psi)
    std::vector<double> radial_r;
    std::vector<double> radial_w; // includes the (1/pi) r dr Jacobian
    double angular_weight_sum = 0.0; // integral of 1 over the Omega part
};

struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
};

// Nodes/weights for int_{-1}^{1} f(x) dx.
Rule1D gauss_legendre(int n);

// Nodes u_i and SCALED weights w_i * e^{u_i} for the weight e^{-u} on
// [0, inf); scaled weights avoid underflow at large nodes.
Rule1D gauss_laguerre_scaled(int n);

// Builds the grid and runs the radial moment test
//   2*pi * int r^{2m} e^{-r^2} d(tau)(r) = m!   for m <= m_max
// (the Gaussian factor already being part of the Bargmann measure), throwing
// MomentTestFailure on relative error above 1e-10.
QuadratureGrid grid_build(const MeasureSpec& spec, int m_max = 10);

// The tested radial moment, computed from the grid.
double radial_moment(const QuadratureGrid& grid, int m);

// Fixed-order weighted node sum; throws NonFiniteIntegrand with the node
// index if g produces a non-finite value.
Quaternion integrate(const QuadratureGrid& grid,
                     const std::function<Quaternion(const Quaternion&)>& g);

} // namespace qho
