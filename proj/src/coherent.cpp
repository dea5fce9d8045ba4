#include "qho/coherent.hpp"

#include <cmath>

namespace qho {

double cs_tail_bound(double qnorm2, int n) {
    // term_n = x^n/n!, computed in log space to survive large n, then the
    // series is summed forward until it stops moving.
    double x = qnorm2;
    if (x == 0.0) return n <= 0 ? 1.0 : 0.0;
    double log_term = n * std::log(x) - std::lgamma(n + 1.0);
    double term = std::exp(log_term - x);
    double sum = 0.0;
    for (int m = n; m < n + 4000; ++m) {
        sum += term;
        term *= x / (m + 1);
        if (term < sum * 1e-18 + 1e-320) break;
    }
    return sum;
}

int cs_required_dim(double qnorm2, double eps) {
    for (int n = 1; n < 100000; ++n)
        if (cs_tail_bound(qnorm2, n) < eps) return n;
    throw TruncationTooCoarse("cs_required_dim: eps unreachable", -1);
}

CoherentState build_cs(const Quaternion& q, int dim, double eps) {
    if (dim < 1) throw DimTooSmall("build_cs: need dim >= 1");
    double x = norm2(q);
    double tail = cs_tail_bound(x, dim);
    if (!(tail < eps))
        throw TruncationTooCoarse("build_cs: tail bound not below eps",
                                  cs_required_dim(x, eps));
    CoherentState cs;
    cs.q = q;
    cs.dim = dim;
    cs.tail_bound = tail;
    cs.vec = QVector(dim);
    Quaternion c = Quaternion::real(std::exp(-0.5 * x));
    cs.vec[0] = c;
    for (int m = 1; m < dim; ++m) {
        c = c * q;
        c = (1.0 / std::sqrt(static_cast<double>(m))) * c;
        cs.vec[m] = c;
    }
    return cs;
}

Quaternion expectation(const QMatrix& a, const QVector& psi) {
    return inner(psi, apply(a, psi));
}

Quaternion expectation(const QMatrix& a, const QVector& psi,
                       bool& unnormalized) {
    double n = vnorm(psi);
    unnormalized = std::abs(n * n - 1.0) > 1e-6;
    return inner(psi, apply(a, psi));
}

Quaternion c_series(const Quaternion& q, const UnitImaginary& axis,
                    double tol) {
    const Quaternion i_ax = axis.as_quaternion();
    const double x = norm2(q);
    Quaternion sum, comp; // Kahan accumulator and compensation
    auto add = [&](const Quaternion& t) {
        Quaternion y = t - comp;
        Quaternion s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    };
    Quaternion p = Quaternion::real(1.0); // q^m
    double fact = 1.0;                    // m!
    add(i_ax);
    for (int m = 1; m < 40000; ++m) {
        p = p * q;
        fact *= m;
        Quaternion term = (1.0 / fact) * (conj(p) * (i_ax * p));
        add(term);
        // Remaining weight e^{-x} sum_{k>m} x^k/k! bounded by the next term
        // times a geometric factor once m + 2 > x.
        if (m + 2 > x) {
            double log_next =
                -x + (m + 1) * std::log(x) - std::lgamma(m + 2.0);
            double geo = 1.0 / (1.0 - x / (m + 2));
            if (std::exp(log_next) * geo < tol) break;
        }
    }
    return std::exp(-x) * sum;
}

namespace {

UncertaintyReport uncertainty_impl(const Quaternion& q,
                                   const UnitImaginary& axis, int dim,
                                   bool degenerate) {
    CoherentState cs = build_cs(q, dim);
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix p = ops.momentum(axis);

    UncertaintyReport r;
    r.q = q;
    r.c_I = c_series(q, axis);
    r.slice_degenerate = degenerate;
    double nrm2 = inner(cs.vec, cs.vec).w;
    r.norm_deficit = std::abs(nrm2 - 1.0);

    // Q and P are exactly self-adjoint, so <A^2> = <A psi|A psi> and
    // <QP> = <Q psi|P psi>; avoids any matrix product.
    QVector qv = apply(ops.position, cs.vec);
    QVector pv = apply(p, cs.vec);

    r.meanQ = inner(cs.vec, qv);
    r.meanQ2 = inner(qv, qv);
    Quaternion var_q = r.meanQ2 - r.meanQ * r.meanQ;
    r.varQ = var_q.w;

    r.meanP = inner(cs.vec, pv);
    r.meanP2 = inner(pv, pv);
    Quaternion var_p = r.meanP2 - r.meanP * r.meanP;
    r.varP = var_p.w;

    r.product = std::abs(r.varQ * r.varP);
    r.bound_residual = std::abs(r.product - 0.25);
    r.commutator_mean = inner(qv, pv) - inner(pv, qv);
    return r;
}

} // namespace

UncertaintyReport uncertainty_global(const Quaternion& q,
                                     const UnitImaginary& axis, int dim) {
    return uncertainty_impl(q, axis, dim, false);
}

UncertaintyReport uncertainty_slice(const Quaternion& q, int dim) {
    SlicePoint s = slice_decompose(q);
    return uncertainty_impl(q, s.axis, dim, s.real_degenerate);
}

} // namespace qho
