#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qho/displacement.hpp"
#include "qho/fock.hpp"
#include "qho/rng.hpp"

using namespace qho;

TEST_CASE("displacement at zero is the identity") {
    DisplacementOp d = build_D(Quaternion::real(0.0), 8);
    CHECK(max_abs(d.matrix - QMatrix::identity(8)) < 1e-15);
    CHECK(max_abs(d.generator) == 0.0);
}

TEST_CASE("generator is anti self adjoint") {
    Rng rng(127);
    for (int t = 0; t < 10; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.5);
        QMatrix g = displacement_generator(q, 12);
        CHECK(max_abs(g + adjoint(g)) == 0.0);
    }
}

TEST_CASE("unitarity and coherent generation") {
    int dim = 32;
    Rng rng(131);
    for (int t = 0; t < 6; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        DisplacementOp d = build_D(q, dim);
        CHECK(unitarity_residual(d) < 1e-9);
        CHECK(cs_generation_residual(d) < 1e-8);
    }
}

TEST_CASE("ordered forms agree on the leading block") {
    // The anti-normal sum is cut at the truncation; its leading-block tail
    // at |q| <= 1 shrinks factorially with dim - dim/2, needing dim 48 for
    // the 1e-8 gate (32 leaves ~1/sqrt(16!) ~ 5e-7).
    int dim = 48;
    Rng rng(137);
    for (int t = 0; t < 4; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        OrderingResiduals r = ordering_residuals(q, dim);
        CHECK(r.normal_vs_exp < 1e-8);
        CHECK(r.antinormal_vs_exp < 1e-8);
        CHECK(r.normal_vs_antinormal < 1e-8);
    }
}

TEST_CASE("series application matches the matrix route") {
    int dim = 32;
    Rng rng(139);
    Quaternion q = rng.quaternion_in_ball(0.8);
    DisplacementOp d = build_D(q, dim);
    QVector eta(dim);
    for (int k = 0; k < dim; ++k)
        eta[k] = rng.quaternion_box(0.3 / (1.0 + k));
    QVector via_series = apply_displacement(q, eta);
    QVector via_matrix = apply(d.matrix, eta);
    double dev = 0.0;
    for (int k = 0; k < dim / 2; ++k)
        dev = std::max(dev, norm(via_series[k] - via_matrix[k]));
    // Both routes truncate differently; the leading block agrees to the
    // common truncation tail.
    CHECK(dev < 1e-7);
}

TEST_CASE("parity conjugation flips the argument") {
    int dim = 32;
    Rng rng(149);
    for (int t = 0; t < 3; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        CHECK(parity_conjugation_residual(q, dim) < 1e-9);
    }
}

TEST_CASE("conjugation shifts the ladder operators") {
    int dim = 32;
    Rng rng(151);
    for (int t = 0; t < 3; ++t) {
        Quaternion x = rng.quaternion_in_ball(0.5);
        ShiftResiduals r = shift_residual(x, dim);
        CHECK(r.pos_a < 1e-7);
        CHECK(r.pos_adag < 1e-7);
    }
}

TEST_CASE("phase helpers") {
    Rng rng(157);
    for (int t = 0; t < 20; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        Quaternion p = rng.quaternion_in_ball(1.0);
        CHECK(norm(wedge_phase(q, p) - wedge_phase_closed(q, p)) < 1e-13);
        CHECK(std::abs(norm(wedge_phase(q, p)) - 1.0) < 1e-13);
        CHECK(std::abs(norm(central_phase(q, p)) - 1.0) < 1e-13);
    }
    // On one slice both phases are exponentials of the same wedge area,
    // the wedge route scaled down by sqrt(3).
    UnitImaginary ax(0.0, 0.6, 0.8);
    Quaternion i = ax.as_quaternion();
    double x1 = 0.3, y1 = 0.7, x2 = -0.4, y2 = 0.2;
    Quaternion q = Quaternion::real(x1) + y1 * i;
    Quaternion p = Quaternion::real(x2) + y2 * i;
    double w = x1 * y2 - x2 * y1;
    double s3 = std::sqrt(3.0);
    CHECK(norm(central_phase(q, p) - exp_quat((-w) * i)) < 1e-14);
    CHECK(norm(wedge_phase_closed(q, p) - exp_quat((-w / s3) * i)) < 1e-14);
}

TEST_CASE("same slice pair relations hold with the central phase") {
    int dim = 24;
    Rng rng(163);
    for (int t = 0; t < 2; ++t) {
        Quaternion q = rng.quaternion_in_ball(0.5);
        Quaternion p = rng.quaternion_in_ball(0.5);
        PairResiduals r = pair_residuals(q, p, dim, PhaseSide::Left);
        CHECK(norm(r.p_slice) == doctest::Approx(norm(p)).epsilon(1e-13));
        CHECK(r.slice_rigorous.composition < 1e-7);
        CHECK(r.slice_rigorous.projective < 1e-7);
        CHECK(r.slice_rigorous.covariance < 1e-7);

        PairResiduals rr = pair_residuals(q, p, dim, PhaseSide::Right);
        CHECK(rr.slice_rigorous.composition < 1e-7);
        CHECK(rr.slice_rigorous.projective < 1e-7);
        CHECK(rr.slice_rigorous.covariance < 1e-7);
    }
    // With a known wedge area the sqrt(3) rescaling of the wedge phase
    // leaves an order-0.1 residual where the central phase is exact.
    UnitImaginary ax(0.0, 0.6, 0.8);
    Quaternion i = ax.as_quaternion();
    Quaternion q = Quaternion::real(0.3) + 0.7 * i;
    Quaternion p = Quaternion::real(-0.4) + 0.2 * i;
    PairResiduals r = pair_residuals(q, p, dim, PhaseSide::Left);
    CHECK(r.slice_rigorous.composition < 1e-7);
    CHECK(r.slice_wedge.composition > 1e-3);
}

TEST_CASE("derivative defect is second order") {
    SlicePoint sp;
    sp.x = 0.2;
    sp.y = 0.35;
    sp.axis = UnitImaginary(0.48, -0.6, 0.64);
    SliceDerivativeCheck chk = slice_derivative_residual(sp, 1e-3, 24);
    CHECK(chk.ratio_i() > 3.5);
    CHECK(chk.ratio_i() < 4.5);
    CHECK(chk.ratio_ii() > 3.5);
    CHECK(chk.ratio_ii() < 4.5);
}

TEST_CASE("ground state admissibility") {
    MeasureSpec spec;
    spec.n_r = 24;
    spec.n_theta = 16;
    spec.n_phi = 4;
    spec.n_psi = 4;
    QuadratureGrid grid = grid_build(spec);
    QVector e0 = QVector::basis(16, 0);
    CHECK(std::abs(admissibility_integral(e0, grid) - 1.0) < 1e-8);

    // Real displacements share a slice with every node, so the invariance
    // argument applies and I stays 1.  A purely imaginary displacement
    // breaks the off-slice exchange relation and I genuinely moves (the
    // deviation is dim-independent, so it is not a truncation artifact).
    QVector etar = apply_displacement(Quaternion::real(0.6), e0);
    CHECK(std::abs(admissibility_integral(etar, grid) - 1.0) < 1e-8);
    QVector etai = apply_displacement({0.0, 0.8, 0.0, 0.0}, e0);
    CHECK(std::abs(admissibility_integral(etai, grid) - 1.0) > 1e-3);
}

TEST_CASE("square integrability resolution") {
    MeasureSpec spec;
    spec.n_r = 32;
    spec.n_theta = 12;
    spec.n_phi = 4;
    spec.n_psi = 4;
    QuadratureGrid grid = grid_build(spec);
    CHECK(square_integrability_deviation(12, 6, grid) < 1e-8);
    CHECK_THROWS_AS(square_integrability_deviation(6, 12, grid), DimMismatch);
}

TEST_CASE("coherent family rank saturates") {
    // Samples live in the ball |q| <= 2, so the state dim must absorb that
    // tail (~30 components at the default eps).
    RankReport rr = cs_family_rank(32, 8, 24, 20260819, 1e-10);
    CHECK(rr.rank == 8);
    CHECK(rr.lambda_max > 0.0);
}

TEST_CASE("recommended dim grows with displacement scale") {
    CHECK(recommended_dim(0.5) >= 16);
    CHECK(recommended_dim(2.0) > recommended_dim(1.0));
}
