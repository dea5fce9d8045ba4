#pragma once

#include "qho/fock.hpp"
#include "qho/linalg.hpp"

namespace qho {

// Coherent state gamma_q = e^{-|q|^2/2} sum_m e_m q^m / sqrt(m!), truncated
// to dim components.  tail_bound is the dropped weight
// e^{-|q|^2} sum_{m>=dim} |q|^{2m}/m!.
struct CoherentState {
    Quaternion q;
    int dim = 0;
    QVector vec;
    double tail_bound = 0.0;
};

// e^{-x} sum_{m>=n} x^m/m! for x = |q|^2.
double cs_tail_bound(double qnorm2, int n);

// Smallest dim with cs_tail_bound below eps.
int cs_required_dim(double qnorm2, double eps);

// Throws TruncationTooCoarse (carrying the required dim) if the tail bound
// at dim is not below eps.
CoherentState build_cs(const Quaternion& q, int dim, double eps = 1e-14);

// <psi| A |psi>.  The optional flag is set when | ||psi||^2 - 1 | > 1e-6.
Quaternion expectation(const QMatrix& a, const QVector& psi);
Quaternion expectation(const QMatrix& a, const QVector& psi, bool& unnormalized);

// c_I(q) = e^{-|q|^2} sum_m conj(q)^m I q^m / m!, accumulated with
// compensated (Kahan) summation in the literal term order; the series is
// truncated when the rigorous tail bound drops below tol.
Quaternion c_series(const Quaternion& q, const UnitImaginary& axis,
                    double tol = 1e-16);

struct UncertaintyReport {
    Quaternion q;
    Quaternion meanQ;
    Quaternion meanQ2; // <Q^2>
    Quaternion meanP;
    Quaternion meanP2; // <P^2>
    double varQ = 0.0;
    double varP = 0.0;
    double product = 0.0;        // |varQ * varP|
    double bound_residual = 0.0; // | |varQ*varP| - 1/4 |
    Quaternion commutator_mean;  // <[Q, P]>
    Quaternion c_I;
    double norm_deficit = 0.0; // | ||gamma||^2 - 1 |
    bool slice_degenerate = false;
};

// Q and P_I statistics in the coherent state gamma_q for an arbitrary axis.
UncertaintyReport uncertainty_global(const Quaternion& q,
                                     const UnitImaginary& axis, int dim);

// Same with the axis taken from q's own slice (canonical axis i when q is
// real, with slice_degenerate set); there varP = 1/2 and the product
// saturates 1/4.
UncertaintyReport uncertainty_slice(const Quaternion& q, int dim);

} // namespace qho
