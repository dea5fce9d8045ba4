#include "qho/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qho/cmatrix.hpp"
#include "qho/errors.hpp"
#include "qho/fock.hpp"
#include "qho/liealg.hpp"

namespace qho {

namespace {

constexpr double kInvSqrt3 = 0.57735026918962576;

// e^{coef.L} for the nilpotent ladder L = a_dag (lower) or a (upper);
// entry at offset k from the diagonal is coef^k sqrt((c+k)!/c!)/k!.
QMatrix ladder_exp(const Quaternion& coef, int n, bool lower) {
    QMatrix m = QMatrix::zero(n);
    for (int c = 0; c < n; ++c) {
        Quaternion qp = Quaternion::real(1.0);
        double f = 1.0;
        for (int k = 0; c + k < n; ++k) {
            if (k > 0) {
                f *= std::sqrt(static_cast<double>(c + k)) / k;
                qp = qp * coef;
            }
            if (lower)
                m.at(c + k, c) = qp * f;
            else
                m.at(c, c + k) = qp * f;
        }
    }
    return m;
}

// sum_k (coef^k/k!) L^k v with L = a_dag (raising) or a; terminates at the
// truncation since L is nilpotent.
QVector apply_ladder_series(const Quaternion& coef, const QVector& v,
                            bool raising) {
    const int n = v.dim;
    QVector sum = v;
    QVector term = v;
    QVector lt(n);
    for (int k = 1; k < n; ++k) {
        if (raising) {
            for (int m = n - 1; m >= 1; --m)
                lt[m] = term[m - 1] * std::sqrt(static_cast<double>(m));
            lt[0] = Quaternion{};
        } else {
            for (int m = 0; m + 1 < n; ++m)
                lt[m] = term[m + 1] * std::sqrt(static_cast<double>(m + 1));
            lt[n - 1] = Quaternion{};
        }
        const double inv = 1.0 / k;
        for (int m = 0; m < n; ++m) term[m] = (coef * lt[m]) * inv;
        sum = sum + term;
    }
    return sum;
}

QMatrix apply_phase(const Quaternion& w, const QMatrix& m, PhaseSide side) {
    return side == PhaseSide::Left ? left_scalar_op(w, m)
                                   : right_scalar_op(m, w);
}

Quaternion wedge_bracket(const Quaternion& q, const Quaternion& p) {
    AlgElementH a, b;
    a.y = -conj(q);
    a.z = q;
    b.y = -conj(p);
    b.z = p;
    return bracket_H(a, b).x;
}

struct RelMats {
    QMatrix qp;   // D(q)D(p)
    QMatrix pq;   // D(p)D(q)
    QMatrix cov;  // D(q)D(p)D(q)^+
    const QMatrix* d_sum;
    const QMatrix* d_p;
};

RelMats build_rel(const QMatrix& dq, const QMatrix& dp, const QMatrix& dsum) {
    RelMats r;
    r.qp = matmul(dq, dp);
    r.pq = matmul(dp, dq);
    r.cov = matmul(r.qp, adjoint(dq));
    r.d_sum = &dsum;
    r.d_p = &dp;
    return r;
}

PairCase eval_rel(const RelMats& r, const Quaternion& w, const Quaternion& w2,
                  PhaseSide side, int half) {
    PairCase c;
    c.composition =
        block_max_abs(r.qp - apply_phase(w, *r.d_sum, side), half, half);
    c.projective =
        block_max_abs(r.qp - apply_phase(w2, r.pq, side), half, half);
    c.covariance =
        block_max_abs(r.cov - apply_phase(w2, *r.d_p, side), half, half);
    return c;
}

} // namespace

QMatrix displacement_generator(const Quaternion& q, int dim) {
    LadderPair l = build_ladder(dim);
    return left_scalar_op(q, l.a_dag) - left_scalar_op(conj(q), l.a);
}

DisplacementOp build_D(const Quaternion& q, int dim) {
    DisplacementOp d;
    d.q = q;
    d.dim = dim;
    d.generator = displacement_generator(q, dim);
    d.matrix = matrix_exp(d.generator);
    return d;
}

QMatrix build_D_normal(const Quaternion& q, int dim) {
    QMatrix lo = ladder_exp(q, dim, true);
    QMatrix up = ladder_exp(-conj(q), dim, false);
    return scale(matmul(lo, up), std::exp(-0.5 * norm2(q)));
}

QMatrix build_D_antinormal(const Quaternion& q, int dim) {
    QMatrix lo = ladder_exp(q, dim, true);
    QMatrix up = ladder_exp(-conj(q), dim, false);
    return scale(matmul(up, lo), std::exp(0.5 * norm2(q)));
}

QVector apply_displacement(const Quaternion& q, const QVector& eta) {
    QVector u = apply_ladder_series(-conj(q), eta, false);
    QVector v = apply_ladder_series(q, u, true);
    const double s = std::exp(-0.5 * norm2(q));
    for (int m = 0; m < v.dim; ++m) v[m] = v[m] * s;
    return v;
}

int recommended_dim(double s) {
    return static_cast<int>(std::ceil(16.0 * s * s + 32.0));
}

Quaternion wedge_phase(const Quaternion& q, const Quaternion& p) {
    return exp_quat(0.5 * wedge_bracket(q, p));
}

Quaternion wedge_phase_closed(const Quaternion& q, const Quaternion& p) {
    Quaternion v{0, q.w * p.x - q.x * p.w, q.w * p.y - q.y * p.w,
                 q.w * p.z - q.z * p.w};
    return exp_quat(-kInvSqrt3 * v);
}

Quaternion central_phase(const Quaternion& q, const Quaternion& p) {
    return exp_quat(0.5 * (conj(p) * q - conj(q) * p));
}

PairResiduals pair_residuals(const Quaternion& q, const Quaternion& p, int dim,
                             PhaseSide side) {
    PairResiduals out;

    SlicePoint sq = slice_decompose(q);
    out.q_slice = q;
    out.p_slice =
        Quaternion::real(p.w) + vec_norm(p) * sq.axis.as_quaternion();

    const QMatrix dq = build_D(q, dim).matrix;
    const QMatrix dps = build_D(out.p_slice, dim).matrix;
    const QMatrix dqps = build_D(q + out.p_slice, dim).matrix;
    const int half = dim / 2;

    RelMats rel_s = build_rel(dq, dps, dqps);
    Quaternion c = 0.5 * (conj(out.p_slice) * q - conj(q) * out.p_slice);
    out.slice_rigorous =
        eval_rel(rel_s, exp_quat(c), exp_quat(c + c), side, half);
    Quaternion bs = wedge_bracket(q, out.p_slice);
    out.slice_wedge =
        eval_rel(rel_s, exp_quat(0.5 * bs), exp_quat(bs), side, half);

    const QMatrix dp = build_D(p, dim).matrix;
    const QMatrix dqp = build_D(q + p, dim).matrix;
    RelMats rel_g = build_rel(dq, dp, dqp);
    Quaternion bg = wedge_bracket(q, p);
    out.general_wedge =
        eval_rel(rel_g, exp_quat(0.5 * bg), exp_quat(bg), side, half);
    return out;
}

CaseResidual composition_residual(const Quaternion& q, const Quaternion& p,
                                  int dim, PhaseSide side) {
    PairResiduals r = pair_residuals(q, p, dim, side);
    return {r.slice_rigorous.composition, r.general_wedge.composition};
}

CaseResidual projective_residual(const Quaternion& q, const Quaternion& p,
                                 int dim, PhaseSide side) {
    PairResiduals r = pair_residuals(q, p, dim, side);
    return {r.slice_rigorous.projective, r.general_wedge.projective};
}

CaseResidual covariance_residual(const Quaternion& q, const Quaternion& p,
                                 int dim, PhaseSide side) {
    PairResiduals r = pair_residuals(q, p, dim, side);
    return {r.slice_rigorous.covariance, r.general_wedge.covariance};
}

double unitarity_residual(const DisplacementOp& d) {
    return max_abs(matmul(adjoint(d.matrix), d.matrix) -
                   QMatrix::identity(d.dim));
}

double unitarity_residual(const Quaternion& q, int dim) {
    return unitarity_residual(build_D(q, dim));
}

double cs_generation_residual(const DisplacementOp& d) {
    CoherentState cs = build_cs(d.q, d.dim);
    QVector col(d.dim);
    for (int m = 0; m < d.dim; ++m) col[m] = d.matrix.at(m, 0);
    return max_abs_diff(col, cs.vec);
}

double cs_generation_residual(const Quaternion& q, int dim) {
    return cs_generation_residual(build_D(q, dim));
}

OrderingResiduals ordering_residuals(const DisplacementOp& d) {
    const int half = d.dim / 2;
    QMatrix n = build_D_normal(d.q, d.dim);
    QMatrix a = build_D_antinormal(d.q, d.dim);
    OrderingResiduals r;
    r.normal_vs_exp = block_max_abs(n - d.matrix, half, half);
    r.antinormal_vs_exp = block_max_abs(a - d.matrix, half, half);
    r.normal_vs_antinormal = block_max_abs(n - a, half, half);
    return r;
}

OrderingResiduals ordering_residuals(const Quaternion& q, int dim) {
    return ordering_residuals(build_D(q, dim));
}

ShiftResiduals shift_residual(const DisplacementOp& dop) {
    const int dim = dop.dim;
    const Quaternion x = dop.q;
    const int half = dim / 2;
    OperatorSet ops = OperatorSet::build(dim);
    const QMatrix& d = dop.matrix;
    QMatrix da = adjoint(d);
    QMatrix id = QMatrix::identity(dim);
    ShiftResiduals r;
    r.pos_a = block_max_abs(
        matmul(matmul(da, ops.a), d) - (ops.a + left_scalar_op(x, id)), half,
        half);
    r.pos_adag = block_max_abs(matmul(matmul(da, ops.a_dag), d) -
                                   (ops.a_dag + left_scalar_op(conj(x), id)),
                               half, half);
    return r;
}

ShiftResiduals shift_residual(const Quaternion& x, int dim) {
    return shift_residual(build_D(x, dim));
}

double parity_conjugation_residual(const DisplacementOp& d) {
    QMatrix par = build_parity(d.dim);
    QMatrix dmx = build_D(-d.q, d.dim).matrix;
    return max_abs(matmul(matmul(par, d.matrix), par) - dmx);
}

double parity_conjugation_residual(const Quaternion& x, int dim) {
    return parity_conjugation_residual(build_D(x, dim));
}

SliceDerivativeCheck slice_derivative_residual(const SlicePoint& q, double h,
                                               int dim) {
    const int half = dim / 2;
    const Quaternion ax = q.axis.as_quaternion();
    auto dmat = [&](double x, double y) {
        return build_D(Quaternion::real(x) + y * ax, dim).matrix;
    };
    const Quaternion qq = q.recompose();
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix id = QMatrix::identity(dim);
    QMatrix d0 = dmat(q.x, q.y);
    QMatrix rhs_i =
        matmul(ops.a_dag - left_scalar_op(0.5 * conj(qq), id), d0);
    QMatrix rhs_ii =
        scale(matmul(ops.a - left_scalar_op(0.5 * qq, id), d0), -1.0);

    SliceDerivativeCheck out;
    double* res_i[2] = {&out.res_i_h, &out.res_i_h2};
    double* res_ii[2] = {&out.res_ii_h, &out.res_ii_h2};
    for (int step = 0; step < 2; ++step) {
        const double hh = (step == 0) ? h : 0.5 * h;
        QMatrix dx = scale(dmat(q.x + hh, q.y) - dmat(q.x - hh, q.y),
                           1.0 / (2.0 * hh));
        QMatrix dy = scale(dmat(q.x, q.y + hh) - dmat(q.x, q.y - hh),
                           1.0 / (2.0 * hh));
        QMatrix lhs_i = scale(dx - left_scalar_op(ax, dy), 0.5);
        QMatrix lhs_ii = scale(dx + left_scalar_op(ax, dy), 0.5);
        *res_i[step] = block_max_abs(lhs_i - rhs_i, half, half);
        *res_ii[step] = block_max_abs(lhs_ii - rhs_ii, half, half);
    }
    return out;
}

double admissibility_integral(const QVector& eta, const QuadratureGrid& grid) {
    const long total = static_cast<long>(grid.nodes.size());
    constexpr long kBlock = 1024;
    const long nblocks = (total + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<size_t>(nblocks), 0.0);

#pragma omp parallel for schedule(static)
    for (long b = 0; b < nblocks; ++b) {
        const long lo = b * kBlock;
        const long hi = std::min(total, lo + kBlock);
        double s = 0.0;
        for (long i = lo; i < hi; ++i) {
            const QuadNode& node = grid.nodes[static_cast<size_t>(i)];
            QVector v = apply_displacement(node.q, eta);
            s += node.weight * norm2(inner(v, eta));
        }
        partial[static_cast<size_t>(b)] = s;
    }
    double sum = 0.0;
    for (long b = 0; b < nblocks; ++b) sum += partial[static_cast<size_t>(b)];
    return sum;
}

double square_integrability_deviation(int dim, int block,
                                      const QuadratureGrid& grid) {
    if (block > dim) throw DimMismatch("block exceeds dim");
    const long total = static_cast<long>(grid.nodes.size());
    constexpr long kBlock = 1024;
    const long nblocks = (total + kBlock - 1) / kBlock;
    std::vector<QMatrix> partial(static_cast<size_t>(nblocks));
    QVector e0 = QVector::basis(dim, 0);

#pragma omp parallel for schedule(static)
    for (long b = 0; b < nblocks; ++b) {
        const long lo = b * kBlock;
        const long hi = std::min(total, lo + kBlock);
        QMatrix acc = QMatrix::zero(block);
        for (long i = lo; i < hi; ++i) {
            const QuadNode& node = grid.nodes[static_cast<size_t>(i)];
            QVector v = apply_displacement(node.q, e0);
            for (int m = 0; m < block; ++m)
                for (int n = 0; n < block; ++n)
                    acc.at(m, n) += node.weight * (v[m] * conj(v[n]));
        }
        partial[static_cast<size_t>(b)] = acc;
    }
    QMatrix sum = QMatrix::zero(block);
    for (long b = 0; b < nblocks; ++b) sum = sum + partial[static_cast<size_t>(b)];
    return max_abs(sum - QMatrix::identity(block));
}

RankReport cs_family_rank(int dim, int block, int samples, std::uint64_t seed,
                          double rel_tol) {
    RankReport rep;
    rep.block = block;
    rep.samples = samples;
    Rng rng(seed);
    QMatrix s = QMatrix::zero(block);
    for (int k = 0; k < samples; ++k) {
        Quaternion q = rng.quaternion_in_ball(2.0);
        CoherentState cs = build_cs(q, dim);
        for (int m = 0; m < block; ++m)
            for (int n = 0; n < block; ++n)
                s.at(m, n) += cs.vec[m] * conj(cs.vec[n]);
    }
    std::vector<double> ev = hermitian_eigenvalues(chi_embed(s));
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    rep.lambda_max = ev.empty() ? 0.0 : ev.front();
    rep.lambda_cut = rel_tol * rep.lambda_max;
    int count = 0;
    for (double v : ev)
        if (v > rep.lambda_cut) ++count;
    rep.rank = (count + 1) / 2; // chi doubles each quaternionic eigenvalue
    return rep;
}

} // namespace qho
