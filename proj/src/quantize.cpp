#include "qho/quantize.hpp"

#include <cmath>

#include "qho/kernels.hpp"

namespace qho {

namespace {

constexpr int kBlock = 2048;

bool want_parallel(Exec exec) {
    if (exec == Exec::Serial) return false;
    if (exec == Exec::Parallel) return true;
    return kernels::openmp_enabled();
}

// (A)[m][n] = sum_nodes w [e^{-r^2}] q^m f(q) q̄^n / sqrt(m! n!).
// Nodes are processed in fixed-size blocks; per block the powers and symbol
// values are precomputed, then every (m, n) entry accumulates the block in
// node order.  Entry accumulation order is independent of threading.
QMatrix monomial_sandwich(const QuadratureGrid& grid, const SymbolFn& f,
                          int dim, bool gaussian_factor, Exec exec) {
    if (dim < 1) throw DimTooSmall("quantize: need dim >= 1");
    const bool par = want_parallel(exec);
    QMatrix acc(dim);

    std::vector<double> inv_sqrt_fact(dim);
    double fact = 1.0;
    for (int m = 0; m < dim; ++m) {
        if (m > 0) fact *= m;
        inv_sqrt_fact[m] = 1.0 / std::sqrt(fact);
    }

    const long total = static_cast<long>(grid.nodes.size());
    std::vector<Quaternion> pow_q(static_cast<size_t>(kBlock) * dim);
    std::vector<Quaternion> fval(kBlock);
    std::vector<double> wgt(kBlock);

    for (long base = 0; base < total; base += kBlock) {
        const int count = static_cast<int>(std::min<long>(kBlock, total - base));
        for (int b = 0; b < count; ++b) {
            const QuadNode& node = grid.nodes[base + b];
            Quaternion fq = f.fn(node.q);
            if (!is_finite(fq))
                throw NonFiniteIntegrand("quantize: symbol value not finite",
                                         base + b);
            fval[b] = fq;
            double w = node.weight;
            if (gaussian_factor) w *= std::exp(-node.p.r * node.p.r);
            wgt[b] = w;
            Quaternion* p = &pow_q[static_cast<size_t>(b) * dim];
            p[0] = Quaternion::real(1.0);
            for (int j = 1; j < dim; ++j) p[j] = p[j - 1] * node.q;
        }
#pragma omp parallel for schedule(static) collapse(2) if (par)
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n) {
                Quaternion s;
                for (int b = 0; b < count; ++b) {
                    const Quaternion* p = &pow_q[static_cast<size_t>(b) * dim];
                    Quaternion t = (p[m] * fval[b]) * conj(p[n]);
                    s += wgt[b] * t;
                }
                acc.at(m, n) += s;
            }
    }

    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n)
            acc.at(m, n) = (inv_sqrt_fact[m] * inv_sqrt_fact[n]) * acc.at(m, n);
    return acc;
}

} // namespace

QMatrix quantize_symbol(const SymbolFn& f, int dim, const QuadratureGrid& grid,
                        Exec exec) {
    return monomial_sandwich(grid, f, dim, true, exec);
}

QMatrix gram_matrix(int dim, const QuadratureGrid& grid, Exec exec) {
    return monomial_sandwich(grid, symbol_one(), dim, false, exec);
}

double resolution_check(int dim, const QuadratureGrid& grid, Exec exec) {
    QMatrix m = quantize_symbol(symbol_one(), dim, grid, exec);
    return max_abs(m - QMatrix::identity(dim));
}

SymbolFn symbol_one() {
    return {"one", [](const Quaternion&) { return Quaternion::real(1.0); }};
}

SymbolFn symbol_q() {
    return {"q", [](const Quaternion& q) { return q; }};
}

SymbolFn symbol_qbar() {
    return {"qbar", [](const Quaternion& q) { return conj(q); }};
}

SymbolFn symbol_abs2() {
    return {"abs2",
            [](const Quaternion& q) { return Quaternion::real(norm2(q)); }};
}

double position_coord(const Quaternion& q) {
    return (q.w + q.w) * 0.7071067811865475244008443621048490393;
}

Quaternion momentum_coord(const Quaternion& q, const UnitImaginary& axis) {
    Quaternion d = q - conj(q);
    return -0.7071067811865475244008443621048490393 *
           (axis.as_quaternion() * d);
}

} // namespace qho
