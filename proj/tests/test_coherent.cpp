#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qho/coherent.hpp"
#include "qho/rng.hpp"

using namespace qho;

namespace {
const double kInvSqrt2 = 0.7071067811865475244008443621048490393;
}

TEST_CASE("tail bound and required dim") {
    double x = 1.7;
    CHECK(cs_tail_bound(x, 4) > cs_tail_bound(x, 5));
    CHECK(cs_tail_bound(x, 0) == doctest::Approx(1.0).epsilon(1e-14));
    int n = cs_required_dim(x, 1e-12);
    CHECK(cs_tail_bound(x, n) < 1e-12);
    CHECK(cs_tail_bound(x, n - 1) >= 1e-12);
}

TEST_CASE("coherent state construction") {
    Quaternion q{0.3, -0.2, 0.5, 0.1};
    CoherentState cs = build_cs(q, 32);
    double pref = std::exp(-0.5 * norm2(q));
    CHECK(norm(cs.vec[0] - Quaternion::real(pref)) < 1e-15);
    Quaternion qm = Quaternion::real(1.0); // q^{m-1} entering iteration m
    double f = 1.0;
    for (int m = 1; m < 6; ++m) {
        CHECK(norm(cs.vec[m] - (pref / std::sqrt(f * m)) * qm * q) < 1e-14);
        qm = qm * q;
        f *= m;
    }
    double nrm = vnorm(cs.vec);
    CHECK(std::abs(nrm * nrm + cs.tail_bound - 1.0) < 1e-14);
    CHECK_THROWS_AS(build_cs(Quaternion::real(2.0), 8, 1e-14),
                    TruncationTooCoarse);
}

TEST_CASE("right eigenvector relation") {
    int dim = 64;
    OperatorSet ops = OperatorSet::build(dim);
    Rng rng(83);
    for (int t = 0; t < 40; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        CoherentState cs = build_cs(q, dim);
        CHECK(max_abs_diff(apply(ops.a, cs.vec),
                           right_scalar_vec(cs.vec, q)) < 1e-10);
    }
}

TEST_CASE("ladder expectations") {
    int dim = 64;
    OperatorSet ops = OperatorSet::build(dim);
    Rng rng(89);
    for (int t = 0; t < 40; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        CoherentState cs = build_cs(q, dim);
        QVector av = apply(ops.a, cs.vec);
        QVector adv = apply(ops.a_dag, cs.vec);
        double n2 = norm2(q);
        CHECK(norm(inner(cs.vec, av) - q) < 1e-10);
        CHECK(norm(inner(cs.vec, adv) - conj(q)) < 1e-10);
        CHECK(norm(inner(av, av) - Quaternion::real(n2)) < 1e-10);
        CHECK(norm(inner(adv, adv) - Quaternion::real(1.0 + n2)) < 1e-10);
        CHECK(norm(inner(av, adv) - conj(q) * conj(q)) < 1e-10);
        CHECK(norm(inner(adv, av) - q * q) < 1e-10);
    }
}

TEST_CASE("expectation flags unnormalized states") {
    OperatorSet ops = OperatorSet::build(8);
    QVector v = QVector::basis(8, 0);
    bool un = false;
    expectation(ops.number, v, un);
    CHECK(!un);
    v[0] = Quaternion::real(2.0);
    expectation(ops.number, v, un);
    CHECK(un);
}

TEST_CASE("axis deformation series") {
    Rng rng(97);
    for (int t = 0; t < 60; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.2);
        UnitImaginary ax = rng.unit_imaginary();
        Quaternion c = c_series(q, ax);
        CHECK(norm(conj(c) + c) < 1e-12);
        CHECK(norm(c * c + Quaternion::real(norm2(c))) < 1e-12);
        CHECK(norm(c) <= 1.0 + 1e-12);
    }
    // Along the state's own slice axis the series collapses to the axis.
    Quaternion q{0.4, 0.3, -0.2, 0.6};
    UnitImaginary iq = slice_decompose(q).axis;
    CHECK(norm(c_series(q, iq) - iq.as_quaternion()) < 1e-13);
    // At real q every axis is fixed.
    UnitImaginary ax(0.6, 0.0, 0.8);
    CHECK(norm(c_series(Quaternion::real(0.9), ax) - ax.as_quaternion()) <
          1e-13);
}

TEST_CASE("global axis uncertainty") {
    int dim = 64;
    Rng rng(101);
    for (int t = 0; t < 30; ++t) {
        Quaternion q = rng.quaternion_in_ball(0.4);
        UnitImaginary ax = rng.unit_imaginary();
        UncertaintyReport rep = uncertainty_global(q, ax, dim);
        CHECK(std::abs(rep.varQ - 0.5) < 1e-10);
        CHECK(rep.bound_residual <= norm2(q) + 1e-12);
        CHECK(rep.norm_deficit < 1e-13);
        CHECK(norm(rep.c_I - c_series(q, ax)) < 1e-12);
    }
}

TEST_CASE("slice axis saturation") {
    int dim = 64;
    Rng rng(103);
    for (int t = 0; t < 30; ++t) {
        Quaternion q = rng.quaternion_in_ball(1.0);
        while (vec_norm(q) < 1e-3) q = rng.quaternion_in_ball(1.0);
        UncertaintyReport rep = uncertainty_slice(q, dim);
        Quaternion iq = slice_decompose(q).axis.as_quaternion();
        CHECK(std::abs(rep.varQ - 0.5) < 1e-9);
        CHECK(std::abs(rep.varP - 0.5) < 1e-9);
        CHECK(std::abs(rep.product - 0.25) < 1e-9);
        CHECK(norm(rep.commutator_mean - iq) < 1e-9);
        CHECK(!rep.slice_degenerate);

        // <Q> = sqrt2 Re q and <P> = -(I_q/sqrt2)(q - conj q) = sqrt2 y,
        // both real in the slice.
        CHECK(norm(rep.meanQ - Quaternion::real(2.0 * kInvSqrt2 * q.w)) <
              1e-10);
        Quaternion pm = (-kInvSqrt2) * (iq * (q - conj(q)));
        CHECK(norm(rep.meanP - pm) < 1e-10);
        CHECK(std::abs(pm.w - 2.0 * kInvSqrt2 * slice_decompose(q).y) < 1e-12);
        CHECK(vec_norm(pm) < 1e-12);
    }
    UncertaintyReport rep = uncertainty_slice(Quaternion::real(0.5), dim);
    CHECK(rep.slice_degenerate);
    CHECK(std::abs(rep.product - 0.25) < 1e-9);
}
