#pragma once

#include <functional>
#include <string>

#include "qho/linalg.hpp"
#include "qho/quadrature.hpp"

namespace qho {

// Symbol f(q, conj(q)); the callable receives q and must be deterministic
// and finite on the grid.
struct SymbolFn {
    std::string name;
    std::function<Quaternion(const Quaternion&)> fn;
};

enum class Exec { Serial, Parallel, Auto };

// Coherent-state quantization on a CsMeasure grid:
//   (A_f)[m][n] = int q^m f(q, q̄) q̄^n e^{-r^2} / sqrt(m! n!) d(sigma).
// The noncommutative factor order q^m * f * q̄^n is preserved node by node.
// Entries are accumulated in fixed node order (parallelism is across
// entries only), so results are identical for every Exec policy.
QMatrix quantize_symbol(const SymbolFn& f, int dim, const QuadratureGrid& grid,
                        Exec exec = Exec::Auto);

// Gram matrix <phi_m|phi_n> = int q^m q̄^n / sqrt(m! n!) d(sigma) on a
// BargmannMeasure grid (the Gaussian lives in the measure); identity when
// the monomials are orthonormal.
QMatrix gram_matrix(int dim, const QuadratureGrid& grid,
                    Exec exec = Exec::Auto);

// Max |entry - delta| of the quantized unit symbol: deviation of
// int |gamma_q><gamma_q| d(sigma) from the identity on the leading block.
double resolution_check(int dim, const QuadratureGrid& grid,
                        Exec exec = Exec::Auto);

SymbolFn symbol_one();
SymbolFn symbol_q();
SymbolFn symbol_qbar();
SymbolFn symbol_abs2();

// Classical coordinate maps: position (q + q̄)/sqrt(2) and momentum
// -I (q - q̄)/sqrt(2).
double position_coord(const Quaternion& q);
Quaternion momentum_coord(const Quaternion& q, const UnitImaginary& axis);

} // namespace qho
