#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qho/quadrature.hpp"

using namespace qho;

TEST_CASE("gauss legendre exactness") {
    Rule1D r = gauss_legendre(8);
    REQUIRE(r.x.size() == 8);
    for (int k = 0; k <= 15; ++k) {
        double s = 0.0;
        for (size_t i = 0; i < r.x.size(); ++i)
            s += r.w[i] * std::pow(r.x[i], k);
        double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(std::abs(s - exact) < 1e-13);
    }
}

TEST_CASE("gauss laguerre exactness with scaled weights") {
    Rule1D r = gauss_laguerre_scaled(12);
    REQUIRE(r.x.size() == 12);
    double fact = 1.0;
    for (int k = 0; k <= 23; ++k) {
        if (k > 0) fact *= k;
        double s = 0.0;
        for (size_t i = 0; i < r.x.size(); ++i)
            s += r.w[i] * std::exp(-r.x[i]) * std::pow(r.x[i], k);
        CHECK(std::abs(s - fact) < 1e-10 * fact);
    }
}

TEST_CASE("grid moments and normalization") {
    MeasureSpec spec;
    spec.n_r = 24;
    spec.n_theta = 16;
    spec.n_phi = 4;
    spec.n_psi = 4;
    QuadratureGrid grid = grid_build(spec);
    REQUIRE(static_cast<int>(grid.nodes.size()) ==
            spec.n_r * spec.n_theta * spec.n_phi * spec.n_psi);
    CHECK(std::abs(grid.angular_weight_sum - 1.0) < 1e-14);
    double fact = 1.0;
    for (int m = 0; m <= 10; ++m) {
        if (m > 0) fact *= m;
        CHECK(std::abs(radial_moment(grid, m) - fact) < 1e-10 * fact);
    }
}

TEST_CASE("moment test failure on a coarse radial rule") {
    MeasureSpec spec;
    spec.n_r = 4;
    spec.n_theta = 8;
    spec.n_phi = 2;
    spec.n_psi = 2;
    CHECK_THROWS_AS(grid_build(spec, 10), MomentTestFailure);
}

TEST_CASE("odd integrands vanish") {
    MeasureSpec spec;
    spec.n_r = 16;
    spec.n_theta = 12;
    spec.n_phi = 4;
    spec.n_psi = 4;
    QuadratureGrid grid = grid_build(spec);
    Quaternion odd = integrate(grid, [](const Quaternion& q) {
        return std::exp(-norm2(q)) * q;
    });
    CHECK(norm(odd) < 1e-13);
}

TEST_CASE("gaussian total mass") {
    MeasureSpec spec;
    spec.n_r = 16;
    spec.n_theta = 8;
    spec.n_phi = 2;
    spec.n_psi = 2;
    QuadratureGrid cs = grid_build(spec);
    Quaternion total = integrate(cs, [](const Quaternion& q) {
        return Quaternion::real(std::exp(-norm2(q)));
    });
    CHECK(std::abs(total.w - 1.0) < 1e-12);

    spec.radial_kind = RadialKind::BargmannMeasure;
    QuadratureGrid bm = grid_build(spec);
    Quaternion mass = integrate(bm, [](const Quaternion&) {
        return Quaternion::real(1.0);
    });
    CHECK(std::abs(mass.w - 1.0) < 1e-12);
}

TEST_CASE("slice harmonics integrate exactly") {
    MeasureSpec spec;
    spec.n_r = 16;
    spec.n_theta = 10;
    spec.n_phi = 4;
    spec.n_psi = 4;
    QuadratureGrid grid = grid_build(spec);
    // q^m conj(q)^n with m != n has theta harmonic m-n and integrates to 0;
    // with m == n it reduces to the radial moment.
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            Quaternion val = integrate(grid, [m, n](const Quaternion& q) {
                Quaternion pm = Quaternion::real(1.0);
                for (int t = 0; t < m; ++t) pm = pm * q;
                Quaternion pn = Quaternion::real(1.0);
                for (int t = 0; t < n; ++t) pn = pn * conj(q);
                return std::exp(-norm2(q)) * (pm * pn);
            });
            double fact = 1.0;
            for (int t = 2; t <= m; ++t) fact *= t;
            double exact = (m == n) ? fact : 0.0;
            CHECK(norm(val - Quaternion::real(exact)) < 1e-11 * (exact + 1.0));
        }
    }
}

TEST_CASE("non finite integrands are reported") {
    MeasureSpec spec;
    spec.n_r = 8;
    spec.n_theta = 8;
    spec.n_phi = 2;
    spec.n_psi = 2;
    QuadratureGrid grid = grid_build(spec);
    CHECK_THROWS_AS(integrate(grid, [](const Quaternion& q) {
                        return Quaternion::real(1.0 / (norm2(q) - norm2(q)));
                    }),
                    NonFiniteIntegrand);
}
