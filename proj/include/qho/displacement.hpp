#pragma once

#include <cstdint>

#include "qho/coherent.hpp"
#include "qho/linalg.hpp"
#include "qho/quadrature.hpp"

namespace qho {

// D(q) = exp(q.a_dag - conj(q).a) on the truncated space.  The generator is
// exactly anti-self-adjoint entrywise, so the exponential is unitary up to
// exp tolerance at every truncation.
struct DisplacementOp {
    Quaternion q;
    int dim = 0;
    QMatrix generator;
    QMatrix matrix;
};

QMatrix displacement_generator(const Quaternion& q, int dim);
DisplacementOp build_D(const Quaternion& q, int dim);

// Ordered forms.  Normal: e^{-|q|^2/2} e^{q.a_dag} e^{-conj(q).a}; the
// internal sum of the lower*upper product terminates below the truncation,
// so its leading block carries no truncation defect.  Anti-normal:
// e^{+|q|^2/2} e^{-conj(q).a} e^{q.a_dag}; its upper*lower sum is cut at the
// truncation and agrees on the leading block only up to a tail.
QMatrix build_D_normal(const Quaternion& q, int dim);
QMatrix build_D_antinormal(const Quaternion& q, int dim);

// D(q) eta through the ordered nilpotent series, O(dim^2) per call.
QVector apply_displacement(const Quaternion& q, const QVector& eta);

// Truncation size with coherent-tail + composition-growth margin for
// exp-based checks at displacement scale s (typically |q| + |p|).
int recommended_dim(double s);

// Wedge phase exp((1/2)[A,B]) with the bracket taken in the slice-decomposed
// Lie algebra of the generators (liealg bracket_H); closed form
// exp(-sum_tau tau (q0 p_tau - q_tau p0)/sqrt(3)).
Quaternion wedge_phase(const Quaternion& q, const Quaternion& p);
Quaternion wedge_phase_closed(const Quaternion& q, const Quaternion& p);

// Central part of the raw generator commutator, exponentiated:
// exp((conj(p)q - conj(q)p)/2).  For q, p sharing one slice this is the
// rigorous BCH phase of D(q)D(p) = phase . D(q+p); the wedge phase above
// differs from it by a factor sqrt(3) in the exponent even on a slice
// (measured and reported, see slice_wedge below).
Quaternion central_phase(const Quaternion& q, const Quaternion& p);

// Which side the scalar phase is applied on.  Left: operator statement
// left_scalar_op(phase, M).  Right: the vector form (M e_k).phase on basis
// vectors, i.e. right_scalar_op(M, phase).  The two coincide on a slice.
enum class PhaseSide { Left, Right };

struct PairCase {
    double composition = 0;
    double projective = 0;
    double covariance = 0;
};

// Residuals of
//   D(q)D(p)        vs  phase   . D(q+p)
//   D(q)D(p)        vs  phase^2 . D(p)D(q)
//   D(q)D(p)D(q)^+  vs  phase^2 . D(p)
// measured as max |entry| over the leading dim/2 block (truncation effects
// live near the boundary).  slice_rigorous: p transplanted into q's slice,
// central_phase -- an exact identity up to truncation, gated.  slice_wedge:
// same pair with wedge_phase (measured; off by the sqrt(3) normalization).
// general_wedge: the literal pair with wedge_phase (measured claim only).
struct PairResiduals {
    PairCase slice_rigorous;
    PairCase slice_wedge;
    PairCase general_wedge;
    Quaternion q_slice, p_slice; // the transplanted pair
};

PairResiduals pair_residuals(const Quaternion& q, const Quaternion& p, int dim,
                             PhaseSide side = PhaseSide::Left);

// Per-relation accessors returning (slice_case, general_case).
struct CaseResidual {
    double slice_case = 0;
    double general_case = 0;
};
CaseResidual composition_residual(const Quaternion& q, const Quaternion& p,
                                  int dim, PhaseSide side = PhaseSide::Left);
CaseResidual projective_residual(const Quaternion& q, const Quaternion& p,
                                 int dim, PhaseSide side = PhaseSide::Left);
CaseResidual covariance_residual(const Quaternion& q, const Quaternion& p,
                                 int dim, PhaseSide side = PhaseSide::Left);

double unitarity_residual(const Quaternion& q, int dim);
double unitarity_residual(const DisplacementOp& d);

// || column 0 of D(q) - gamma_q ||.
double cs_generation_residual(const Quaternion& q, int dim);
double cs_generation_residual(const DisplacementOp& d);

struct OrderingResiduals {
    double normal_vs_exp = 0;
    double antinormal_vs_exp = 0;
    double normal_vs_antinormal = 0;
};
// Mutual deviations on the leading dim/2 block.
OrderingResiduals ordering_residuals(const Quaternion& q, int dim);
OrderingResiduals ordering_residuals(const DisplacementOp& d);

struct ShiftResiduals {
    double pos_a = 0;      // D^+ a D - (a + x.id)
    double pos_adag = 0;   // D^+ a_dag D - (a_dag + conj(x).id)
};
// Max |entry| over the leading dim/2 block.
ShiftResiduals shift_residual(const Quaternion& x, int dim);
ShiftResiduals shift_residual(const DisplacementOp& d);

// || Pi D(x) Pi - D(-x) || over the full matrix (exact identity of the
// truncated generators).
double parity_conjugation_residual(const Quaternion& x, int dim);
double parity_conjugation_residual(const DisplacementOp& d);

struct SliceDerivativeCheck {
    double res_i_h = 0;   // (1/2)(d/dx - I d/dy) D  vs  (a_dag - conj(q)/2) D
    double res_i_h2 = 0;
    double res_ii_h = 0;  // (1/2)(d/dx + I d/dy) D  vs  -(a - q/2) D
    double res_ii_h2 = 0;
    double ratio_i() const { return res_i_h / res_i_h2; }
    double ratio_ii() const { return res_ii_h / res_ii_h2; }
};
// Central differences within the slice of q; halving h must shrink the
// residual by about 4 (second order).
SliceDerivativeCheck slice_derivative_residual(const SlicePoint& q, double h,
                                               int dim);

// I(eta) = sum_nodes w |<D(q)eta|eta>|^2 on a CsMeasure grid; equals
// ||eta||^4 = 1 for the ground state with the normalized measure.
double admissibility_integral(const QVector& eta, const QuadratureGrid& grid);

// Max |entry - delta| over the leading `block` rows/cols of
// sum_nodes w |D(q)e0><D(q)e0|, the displacement-route resolution of the
// identity.
double square_integrability_deviation(int dim, int block,
                                      const QuadratureGrid& grid);

struct RankReport {
    int block = 0;
    int samples = 0;
    int rank = 0;
    double lambda_max = 0;
    double lambda_cut = 0;
};
// Numerical rank of span{ D(q_s) e0 } restricted to the leading `block`
// components, via the chi-embedded Gram spectrum (eigenvalue pairs of the
// complex embedding count once).
RankReport cs_family_rank(int dim, int block, int samples, std::uint64_t seed,
                          double rel_tol = 1e-8);

} // namespace qho
