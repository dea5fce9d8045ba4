#include "qho/quadrature.hpp"

#include <cmath>

namespace qho {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Rule1D gauss_legendre(int n) {
    if (n < 1) throw DimTooSmall("gauss_legendre: need n >= 1");
    Rule1D rule;
    rule.x.resize(n);
    rule.w.resize(n);
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // one clean evaluation of P'_n at the converged node
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.x[i] = -x;
        rule.w[i] = w;
        rule.x[n - 1 - i] = x;
        rule.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.x[n / 2] = 0.0;
    return rule;
}

namespace {

// Laguerre values scaled by e^{-x/2}; the linear recurrence tolerates the
// scaling and the values stay representable across the whole node range.
void laguerre_scaled(int n, double x, double& ln, double& lnm1) {
    double l0 = std::exp(-0.5 * x);
    double l1 = (1.0 - x) * l0;
    if (n == 0) {
        ln = l0;
        lnm1 = 0.0;
        return;
    }
    for (int k = 1; k < n; ++k) {
        double l2 = ((2.0 * k + 1.0 - x) * l1 - k * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    ln = l1;
    lnm1 = l0;
}

} // namespace

Rule1D gauss_laguerre_scaled(int n) {
    if (n < 1) throw DimTooSmall("gauss_laguerre_scaled: need n >= 1");
    Rule1D rule;
    rule.x.resize(n);
    rule.w.resize(n);
    double x = 0.0;
    for (int i = 0; i < n; ++i) {
        // Stroud-Secrest style initial guesses.
        if (i == 0) {
            x = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            x += 15.0 / (1.0 + 2.5 * n);
        } else {
            double ai = i - 1;
            x += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (x - rule.x[i - 2]);
        }
        for (int it = 0; it < 200; ++it) {
            double ln, lnm1;
            laguerre_scaled(n, x, ln, lnm1);
            // L'_n(x) = n (L_n(x) - L_{n-1}(x)) / x; the e^{-x/2} scale
            // cancels in the Newton ratio.
            double dx = ln * x / (n * (ln - lnm1));
            x -= dx;
            if (std::abs(dx) < 1e-14 * std::max(1.0, x)) break;
        }
        rule.x[i] = x;
        double lnp1, ln_;
        laguerre_scaled(n + 1, x, lnp1, ln_);
        // w_i e^{x_i} = x_i / ((n+1) L~_{n+1}(x_i))^2 with scaled values.
        double d = (n + 1.0) * lnp1;
        rule.w[i] = x / (d * d);
    }
    return rule;
}

QuadratureGrid grid_build(const MeasureSpec& spec, int m_max) {
    if (spec.n_r < 1 || spec.n_theta < 1 || spec.n_phi < 1 || spec.n_psi < 1)
        throw DimTooSmall("grid_build: all node counts must be >= 1");
    QuadratureGrid grid;
    grid.spec = spec;

    Rule1D lag = gauss_laguerre_scaled(spec.n_r);
    grid.radial_r.resize(spec.n_r);
    grid.radial_w.resize(spec.n_r);
    for (int i = 0; i < spec.n_r; ++i) {
        grid.radial_r[i] = std::sqrt(lag.x[i]);
        // (1/pi) r dr = (1/2pi) du; CsMeasure keeps the scaled weight
        // (integrands carry e^{-r^2}), Bargmann folds the Gaussian back in.
        double w = lag.w[i] / (2.0 * kPi);
        if (spec.radial_kind == RadialKind::BargmannMeasure)
            w *= std::exp(-lag.x[i]);
        grid.radial_w[i] = w;
    }

    Rule1D leg = gauss_legendre(spec.n_phi);
    double theta_w = 2.0 * kPi / spec.n_theta;
    double psi_w = 2.0 * kPi / spec.n_psi;

    double ang = 0.0;
    for (int j = 0; j < spec.n_phi; ++j)
        ang += leg.w[j] / (4.0 * kPi) * psi_w * spec.n_psi;
    grid.angular_weight_sum = ang;

    grid.nodes.reserve(static_cast<size_t>(spec.n_r) * spec.n_theta *
                       spec.n_phi * spec.n_psi);
    for (int ir = 0; ir < spec.n_r; ++ir)
        for (int it = 0; it < spec.n_theta; ++it)
            for (int j = 0; j < spec.n_phi; ++j)
                for (int l = 0; l < spec.n_psi; ++l) {
                    QuadNode node;
                    node.p.r = grid.radial_r[ir];
                    node.p.theta = theta_w * it;
                    node.p.phi = std::acos(leg.x[j]);
                    node.p.psi = psi_w * l;
                    node.q = from_polar(node.p);
                    node.weight = grid.radial_w[ir] * theta_w *
                                  (leg.w[j] / (4.0 * kPi)) * psi_w;
                    grid.nodes.push_back(node);
                }

    // No clamp to the rule's exactness degree: a rule too coarse for the
    // requested moments must fail loudly, not pass a reduced test.
    double fact = 1.0;
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) fact *= m;
        double got = radial_moment(grid, m);
        double err = std::abs(got - fact) / fact;
        if (!(err < 1e-10))
            throw MomentTestFailure("grid_build: radial moment test failed", m,
                                    err);
    }
    return grid;
}

double radial_moment(const QuadratureGrid& grid, int m) {
    double s = 0.0;
    for (size_t i = 0; i < grid.radial_r.size(); ++i) {
        double r2 = grid.radial_r[i] * grid.radial_r[i];
        double f = std::pow(r2, m);
        if (grid.spec.radial_kind == RadialKind::CsMeasure)
            f *= std::exp(-r2);
        s += grid.radial_w[i] * f;
    }
    return 2.0 * kPi * s;
}

Quaternion integrate(const QuadratureGrid& grid,
                     const std::function<Quaternion(const Quaternion&)>& g) {
    Quaternion s;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        Quaternion v = g(grid.nodes[i].q);
        if (!is_finite(v))
            throw NonFiniteIntegrand("integrate: non-finite integrand value",
                                     static_cast<long>(i));
        s += grid.nodes[i].weight * v;
    }
    return s;
}

} // namespace qho
