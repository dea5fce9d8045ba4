#pragma once

#include <complex>
#include <cstdint>

#include "qho/linalg.hpp"
#include "qho/rng.hpp"

namespace qho {

// Real Lie-algebra realizations over the truncated oscillator operators.
// tau indexes the canonical slice axes: 0 -> i, 1 -> j, 2 -> k.
Quaternion tau_quat(int tau);
UnitImaginary tau_axis(int tau);

// Element of span_R{ tau.id (tau = i,j,k), Q, P_tau (tau = i,j,k) }:
// A = sum_tau x[tau] tau.id + y Q + sum_tau z[tau] P_tau.
struct AlgElementA {
    double x[3] = {0, 0, 0};
    double y = 0;
    double z[3] = {0, 0, 0};
};

// Coefficient bracket via the slice decomposition A = sum_tau A_tau with
// A_tau = x_tau tau.id + (y/sqrt(3)) Q + z_tau P_tau:
// [A,B] = sum_tau (1/sqrt(3)) (y t_tau - z_tau s) tau.id.
AlgElementA bracket_sigma(const AlgElementA& a, const AlgElementA& b);

// Element of span_H{ id, a, a_dag }: A = x.id + y.a + z.a_dag with
// quaternionic left coefficients.
struct AlgElementH {
    Quaternion x, y, z;
};

// Slice-decomposed bracket: with A-coefficients y = (y0; y_i, y_j, y_k),
// z, and B-coefficients s, t,
// [A,B] = sum_tau [ (y0/sqrt3 + y_tau tau)(t0/sqrt3 + t_tau tau)
//                 - (z0/sqrt3 + z_tau tau)(s0/sqrt3 + s_tau tau) ] . id.
AlgElementH bracket_H(const AlgElementH& a, const AlgElementH& b);

// Element of span_R{ tau.id, tau.Q, P0 } with P0 = -(a - a_dag)/sqrt(2):
// A = sum_tau x[tau] tau.id + p0 P0 + sum_tau zq[tau] tau.Q.
struct AlgElementHat {
    double x[3] = {0, 0, 0};
    double p0 = 0;
    double zq[3] = {0, 0, 0};
};

// [[A,B]] = -sum_tau (1/sqrt(3)) (p0_A zq_B[tau] - zq_A[tau] p0_B) tau.id.
AlgElementHat bracket_hat(const AlgElementHat& a, const AlgElementHat& b);

// Element of one slice algebra span_R{ tau.id, Q, P_tau } (fixed tau).
// Its bracket equals the raw matrix commutator on the interior block.
struct SliceElement {
    double c1 = 0; // tau.id
    double cq = 0; // Q
    double cp = 0; // P_tau
};

SliceElement bracket_tau(const SliceElement& a, const SliceElement& b);

// Element of span_{C_tau}{ id, a, a_dag }: coefficients x + y*tau stored as
// complex numbers.  [A,B] = (ca.cad' - cad.ca') . id; matches the matrix
// commutator exactly (one commutative slice).
struct AlgElementCSlice {
    int tau = 0;
    std::complex<double> c1, ca, cad;
};

AlgElementCSlice bracket_cslice(const AlgElementCSlice& a,
                                const AlgElementCSlice& b);

// Componentwise triple of slice elements; the target of the embedding.
struct DirectSumElement {
    SliceElement comp[3];
};

DirectSumElement bracket_oplus(const DirectSumElement& a,
                               const DirectSumElement& b);

DirectSumElement embed_sigma(const AlgElementA& a);
// Inverse on the image (the three Q coordinates must agree exactly);
// throws NotInImage otherwise.
AlgElementA unembed(const DirectSumElement& d);

// Restriction of an A-element to quaternionic {id, a, a_dag} coefficients:
// x = sum x_tau tau, y_a = (y - sum z_tau tau)/sqrt2,
// z_adag = (y + sum z_tau tau)/sqrt2.
AlgElementH to_H(const AlgElementA& a);

QMatrix to_matrix(const AlgElementA& a, int dim);
QMatrix to_matrix(const AlgElementH& a, int dim);
QMatrix to_matrix(const AlgElementHat& a, int dim);
QMatrix to_matrix(const SliceElement& a, int tau, int dim);
QMatrix to_matrix(const AlgElementCSlice& a, int dim);

struct AxiomReport {
    double bilinearity = 0;
    double alternativity = 0;
    double jacobi = 0;
    double anticommutativity = 0;

    double max_residual() const {
        double m = bilinearity;
        if (alternativity > m) m = alternativity;
        if (jacobi > m) m = jacobi;
        if (anticommutativity > m) m = anticommutativity;
        return m;
    }
};

enum class BracketKind { Sigma, Hat, H, Tau };

// Max residual of R-bilinearity, alternativity, Jacobi and anticommutativity
// over `samples` random coefficient tuples (components uniform in [-1, 1]).
AxiomReport axiom_suite(BracketKind kind, int samples, std::uint64_t seed);

// Interior-block deviation between the matrix commutator of two slice
// elements and the matrix of their coefficient bracket.
double slice_matrix_consistency(const SliceElement& a, const SliceElement& b,
                                int tau, int dim);

// Max coordinate deviation of embed(bracket_sigma(a,b)) from
// bracket_oplus(embed(a), embed(b)).
double embedding_homomorphism_residual(const AlgElementA& a,
                                       const AlgElementA& b);

} // namespace qho
