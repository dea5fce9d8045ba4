#include "qho/liealg.hpp"

#include <array>
#include <cmath>
#include <cstddef>

#include "qho/errors.hpp"
#include "qho/fock.hpp"

namespace qho {

namespace {

constexpr double kInvSqrt3 = 0.57735026918962576;
constexpr double kInvSqrt2 = 0.70710678118654752;

Quaternion slice_embed(int tau, std::complex<double> c) {
    Quaternion axis = tau_quat(tau);
    return Quaternion{c.real(), 0, 0, 0} + c.imag() * axis;
}

} // namespace

Quaternion tau_quat(int tau) {
    switch (tau) {
    case 0: return Quaternion::unit_i();
    case 1: return Quaternion::unit_j();
    case 2: return Quaternion::unit_k();
    default: throw DimMismatch("tau index must be 0, 1 or 2");
    }
}

UnitImaginary tau_axis(int tau) {
    Quaternion q = tau_quat(tau);
    return UnitImaginary(q.x, q.y, q.z);
}

AlgElementA bracket_sigma(const AlgElementA& a, const AlgElementA& b) {
    AlgElementA r;
    for (int t = 0; t < 3; ++t)
        r.x[t] = kInvSqrt3 * (a.y * b.z[t] - a.z[t] * b.y);
    return r;
}

AlgElementH bracket_H(const AlgElementH& a, const AlgElementH& b) {
    auto slice_part = [](const Quaternion& q, int t) {
        double comp = (t == 0) ? q.x : (t == 1) ? q.y : q.z;
        return Quaternion{q.w * kInvSqrt3, 0, 0, 0} + comp * tau_quat(t);
    };
    AlgElementH r;
    for (int t = 0; t < 3; ++t) {
        Quaternion ya = slice_part(a.y, t);
        Quaternion za = slice_part(a.z, t);
        Quaternion yb = slice_part(b.y, t);
        Quaternion zb = slice_part(b.z, t);
        r.x += ya * zb - za * yb;
    }
    return r;
}

AlgElementHat bracket_hat(const AlgElementHat& a, const AlgElementHat& b) {
    AlgElementHat r;
    for (int t = 0; t < 3; ++t)
        r.x[t] = -kInvSqrt3 * (a.p0 * b.zq[t] - a.zq[t] * b.p0);
    return r;
}

SliceElement bracket_tau(const SliceElement& a, const SliceElement& b) {
    SliceElement r;
    r.c1 = a.cq * b.cp - a.cp * b.cq;
    return r;
}

AlgElementCSlice bracket_cslice(const AlgElementCSlice& a,
                                const AlgElementCSlice& b) {
    if (a.tau != b.tau)
        throw DimMismatch("cslice bracket requires matching slice");
    AlgElementCSlice r;
    r.tau = a.tau;
    r.c1 = a.ca * b.cad - a.cad * b.ca;
    return r;
}

DirectSumElement bracket_oplus(const DirectSumElement& a,
                               const DirectSumElement& b) {
    DirectSumElement r;
    for (int t = 0; t < 3; ++t) r.comp[t] = bracket_tau(a.comp[t], b.comp[t]);
    return r;
}

DirectSumElement embed_sigma(const AlgElementA& a) {
    DirectSumElement d;
    for (int t = 0; t < 3; ++t) {
        d.comp[t].c1 = a.x[t];
        d.comp[t].cq = a.y * kInvSqrt3;
        d.comp[t].cp = a.z[t];
    }
    return d;
}

AlgElementA unembed(const DirectSumElement& d) {
    if (d.comp[0].cq != d.comp[1].cq || d.comp[0].cq != d.comp[2].cq)
        throw NotInImage("direct-sum element has unequal Q coordinates");
    AlgElementA a;
    for (int t = 0; t < 3; ++t) {
        a.x[t] = d.comp[t].c1;
        a.z[t] = d.comp[t].cp;
    }
    a.y = d.comp[0].cq * std::sqrt(3.0);
    return a;
}

AlgElementH to_H(const AlgElementA& a) {
    AlgElementH h;
    h.x = Quaternion{0, a.x[0], a.x[1], a.x[2]};
    Quaternion zv{0, a.z[0], a.z[1], a.z[2]};
    h.y = kInvSqrt2 * (Quaternion{a.y, 0, 0, 0} - zv);
    h.z = kInvSqrt2 * (Quaternion{a.y, 0, 0, 0} + zv);
    return h;
}

QMatrix to_matrix(const AlgElementA& a, int dim) {
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix m = QMatrix::zero(dim);
    for (int t = 0; t < 3; ++t) {
        m = m + left_scalar_op(a.x[t] * tau_quat(t), QMatrix::identity(dim));
        m = m + scale(ops.momentum(tau_axis(t)), a.z[t]);
    }
    m = m + scale(ops.position, a.y);
    return m;
}

QMatrix to_matrix(const AlgElementH& a, int dim) {
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix m = left_scalar_op(a.x, QMatrix::identity(dim));
    m = m + left_scalar_op(a.y, ops.a);
    m = m + left_scalar_op(a.z, ops.a_dag);
    return m;
}

QMatrix to_matrix(const AlgElementHat& a, int dim) {
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix p0 = scale(ops.a_dag - ops.a, kInvSqrt2);
    QMatrix m = scale(p0, a.p0);
    for (int t = 0; t < 3; ++t) {
        m = m + left_scalar_op(a.x[t] * tau_quat(t), QMatrix::identity(dim));
        m = m + left_scalar_op(a.zq[t] * tau_quat(t), ops.position);
    }
    return m;
}

QMatrix to_matrix(const SliceElement& a, int tau, int dim) {
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix m = left_scalar_op(a.c1 * tau_quat(tau), QMatrix::identity(dim));
    m = m + scale(ops.position, a.cq);
    m = m + scale(ops.momentum(tau_axis(tau)), a.cp);
    return m;
}

QMatrix to_matrix(const AlgElementCSlice& a, int dim) {
    OperatorSet ops = OperatorSet::build(dim);
    QMatrix m =
        left_scalar_op(slice_embed(a.tau, a.c1), QMatrix::identity(dim));
    m = m + left_scalar_op(slice_embed(a.tau, a.ca), ops.a);
    m = m + left_scalar_op(slice_embed(a.tau, a.cad), ops.a_dag);
    return m;
}

namespace {

// Uniform coordinate view so one routine can exercise every bracket.
template <std::size_t K>
using Coords = std::array<double, K>;

struct SigmaOps {
    static constexpr std::size_t K = 7;
    static AlgElementA make(const Coords<7>& c) {
        AlgElementA a;
        a.x[0] = c[0];
        a.x[1] = c[1];
        a.x[2] = c[2];
        a.y = c[3];
        a.z[0] = c[4];
        a.z[1] = c[5];
        a.z[2] = c[6];
        return a;
    }
    static Coords<7> coords(const AlgElementA& a) {
        return {a.x[0], a.x[1], a.x[2], a.y, a.z[0], a.z[1], a.z[2]};
    }
    static AlgElementA br(const AlgElementA& a, const AlgElementA& b) {
        return bracket_sigma(a, b);
    }
};

struct HatOps {
    static constexpr std::size_t K = 7;
    static AlgElementHat make(const Coords<7>& c) {
        AlgElementHat a;
        a.x[0] = c[0];
        a.x[1] = c[1];
        a.x[2] = c[2];
        a.p0 = c[3];
        a.zq[0] = c[4];
        a.zq[1] = c[5];
        a.zq[2] = c[6];
        return a;
    }
    static Coords<7> coords(const AlgElementHat& a) {
        return {a.x[0], a.x[1], a.x[2], a.p0, a.zq[0], a.zq[1], a.zq[2]};
    }
    static AlgElementHat br(const AlgElementHat& a, const AlgElementHat& b) {
        return bracket_hat(a, b);
    }
};

struct HOps {
    static constexpr std::size_t K = 12;
    static AlgElementH make(const Coords<12>& c) {
        AlgElementH a;
        a.x = Quaternion{c[0], c[1], c[2], c[3]};
        a.y = Quaternion{c[4], c[5], c[6], c[7]};
        a.z = Quaternion{c[8], c[9], c[10], c[11]};
        return a;
    }
    static Coords<12> coords(const AlgElementH& a) {
        return {a.x.w, a.x.x, a.x.y, a.x.z, a.y.w, a.y.x,
                a.y.y, a.y.z, a.z.w, a.z.x, a.z.y, a.z.z};
    }
    static AlgElementH br(const AlgElementH& a, const AlgElementH& b) {
        return bracket_H(a, b);
    }
};

struct TauOps {
    static constexpr std::size_t K = 3;
    static SliceElement make(const Coords<3>& c) {
        return SliceElement{c[0], c[1], c[2]};
    }
    static Coords<3> coords(const SliceElement& a) {
        return {a.c1, a.cq, a.cp};
    }
    static SliceElement br(const SliceElement& a, const SliceElement& b) {
        return bracket_tau(a, b);
    }
};

template <std::size_t K>
Coords<K> lin(double al, const Coords<K>& a, double be, const Coords<K>& b) {
    Coords<K> r;
    for (std::size_t i = 0; i < K; ++i) r[i] = al * a[i] + be * b[i];
    return r;
}

template <std::size_t K>
double max_abs_diff(const Coords<K>& a, const Coords<K>& b) {
    double m = 0;
    for (std::size_t i = 0; i < K; ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

template <class Ops>
AxiomReport run_axioms(int samples, std::uint64_t seed) {
    constexpr std::size_t K = Ops::K;
    Rng rng(seed);
    auto draw = [&rng]() {
        Coords<K> c;
        for (std::size_t i = 0; i < K; ++i) c[i] = rng.uniform(-1.0, 1.0);
        return c;
    };
    auto brc = [](const Coords<K>& a, const Coords<K>& b) {
        return Ops::coords(Ops::br(Ops::make(a), Ops::make(b)));
    };

    AxiomReport rep;
    for (int s = 0; s < samples; ++s) {
        Coords<K> a = draw(), b = draw(), c = draw();
        double al = rng.uniform(-2.0, 2.0), be = rng.uniform(-2.0, 2.0);

        Coords<K> left = brc(lin(al, a, be, b), c);
        Coords<K> right = lin(al, brc(a, c), be, brc(b, c));
        double bil = max_abs_diff(left, right);
        left = brc(c, lin(al, a, be, b));
        right = lin(al, brc(c, a), be, brc(c, b));
        double d = max_abs_diff(left, right);
        if (d > bil) bil = d;
        if (bil > rep.bilinearity) rep.bilinearity = bil;

        Coords<K> zero{};
        d = max_abs_diff(brc(a, a), zero);
        if (d > rep.alternativity) rep.alternativity = d;

        d = max_abs_diff(brc(a, b), lin(-1.0, brc(b, a), 0.0, zero));
        if (d > rep.anticommutativity) rep.anticommutativity = d;

        Coords<K> jac = lin(1.0, brc(a, brc(b, c)), 1.0, brc(b, brc(c, a)));
        jac = lin(1.0, jac, 1.0, brc(c, brc(a, b)));
        d = max_abs_diff(jac, zero);
        if (d > rep.jacobi) rep.jacobi = d;
    }
    return rep;
}

} // namespace

AxiomReport axiom_suite(BracketKind kind, int samples, std::uint64_t seed) {
    switch (kind) {
    case BracketKind::Sigma: return run_axioms<SigmaOps>(samples, seed);
    case BracketKind::Hat: return run_axioms<HatOps>(samples, seed);
    case BracketKind::H: return run_axioms<HOps>(samples, seed);
    case BracketKind::Tau: return run_axioms<TauOps>(samples, seed);
    }
    throw DimMismatch("unknown bracket kind");
}

double slice_matrix_consistency(const SliceElement& a, const SliceElement& b,
                                int tau, int dim) {
    QMatrix ma = to_matrix(a, tau, dim);
    QMatrix mb = to_matrix(b, tau, dim);
    QMatrix comm = commutator(ma, mb);
    QMatrix expect = to_matrix(bracket_tau(a, b), tau, dim);
    return interior_max_abs(comm - expect);
}

double embedding_homomorphism_residual(const AlgElementA& a,
                                       const AlgElementA& b) {
    DirectSumElement lhs = embed_sigma(bracket_sigma(a, b));
    DirectSumElement rhs = bracket_oplus(embed_sigma(a), embed_sigma(b));
    double m = 0;
    for (int t = 0; t < 3; ++t) {
        double d = std::fabs(lhs.comp[t].c1 - rhs.comp[t].c1);
        if (d > m) m = d;
        d = std::fabs(lhs.comp[t].cq - rhs.comp[t].cq);
        if (d > m) m = d;
        d = std::fabs(lhs.comp[t].cp - rhs.comp[t].cp);
        if (d > m) m = d;
    }
    return m;
}

} // namespace qho
