#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qho/fock.hpp"
#include "qho/quantize.hpp"

using namespace qho;

namespace {
QuadratureGrid small_grid(RadialKind kind = RadialKind::CsMeasure) {
    MeasureSpec spec;
    spec.radial_kind = kind;
    spec.n_r = 24;
    spec.n_theta = 16;
    spec.n_phi = 4;
    spec.n_psi = 4;
    return grid_build(spec);
}
} // namespace

TEST_CASE("basic symbols quantize to the ladder algebra") {
    QuadratureGrid grid = small_grid();
    int dim = 8;
    OperatorSet ops = OperatorSet::build(dim);
    CHECK(max_abs(quantize_symbol(symbol_one(), dim, grid) -
                  QMatrix::identity(dim)) < 1e-8);
    CHECK(max_abs(quantize_symbol(symbol_q(), dim, grid) - ops.a) < 1e-8);
    CHECK(max_abs(quantize_symbol(symbol_qbar(), dim, grid) - ops.a_dag) <
          1e-8);
    QMatrix abs2 = quantize_symbol(symbol_abs2(), dim, grid);
    CHECK(max_abs(abs2 - (ops.number + QMatrix::identity(dim))) < 1e-8);
    CHECK(max_abs(abs2 - adjoint(abs2)) < 1e-12);
}

TEST_CASE("execution policies agree bitwise") {
    QuadratureGrid grid = small_grid();
    int dim = 8;
    QMatrix ser = quantize_symbol(symbol_abs2(), dim, grid, Exec::Serial);
    QMatrix par = quantize_symbol(symbol_abs2(), dim, grid, Exec::Parallel);
    CHECK(max_abs(ser - par) == 0.0);
}

TEST_CASE("resolution of the identity") {
    QuadratureGrid grid = small_grid();
    CHECK(resolution_check(8, grid) < 1e-8);
}

TEST_CASE("bargmann gram matrix") {
    QuadratureGrid grid = small_grid(RadialKind::BargmannMeasure);
    int dim = 8;
    CHECK(max_abs(gram_matrix(dim, grid) - QMatrix::identity(dim)) < 1e-8);
}

TEST_CASE("coordinate maps") {
    Quaternion q{0.3, -0.4, 0.2, 0.7};
    double s2 = std::sqrt(2.0);
    CHECK(std::abs(position_coord(q) - s2 * q.w) < 1e-15);
    UnitImaginary ax(0.0, 1.0, 0.0);
    Quaternion p = momentum_coord(q, ax);
    // -(I/sqrt2)(q - conj q) with I = j.
    Quaternion iq = ax.as_quaternion();
    Quaternion expect = (-1.0 / s2) * (iq * (q - conj(q)));
    CHECK(norm(p - expect) < 1e-15);
}

TEST_CASE("position symbol quantizes to Q") {
    QuadratureGrid grid = small_grid();
    int dim = 8;
    SymbolFn pos{"position", [](const Quaternion& q) {
                     return Quaternion::real(position_coord(q));
                 }};
    CHECK(max_abs(quantize_symbol(pos, dim, grid) - build_position(dim)) <
          1e-8);
}

TEST_CASE("momentum symbol deviates from P by the middle factor") {
    QuadratureGrid grid = small_grid();
    int dim = 8;
    UnitImaginary ax(1.0, 0.0, 0.0);
    SymbolFn mom{"momentum_i", [ax](const Quaternion& q) {
                     return momentum_coord(q, ax);
                 }};
    QMatrix am = quantize_symbol(mom, dim, grid);
    // A quaternion-valued symbol is not Hermitian-quantized; the adjoint
    // corresponds to the conjugated symbol (factor order reverses under
    // conj, leaving q^m conj(f) qbar^n).
    SymbolFn momc{"momentum_i_conj", [ax](const Quaternion& q) {
                      return conj(momentum_coord(q, ax));
                  }};
    CHECK(max_abs(adjoint(am) - quantize_symbol(momc, dim, grid)) < 1e-12);
    // The axis quaternion does not commute through the monomials, so this
    // is genuinely different from P_i (measured, not gated small).
    double dev = max_abs(am - build_momentum(dim, ax));
    CHECK(dev > 1e-3);
}
