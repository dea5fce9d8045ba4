#include "qho/fock.hpp"

#include <cmath>

namespace qho {

namespace {
const double kInvSqrt2 = 0.7071067811865475244008443621048490393;
}

LadderPair build_ladder(int n) {
    if (n < 2) throw DimTooSmall("build_ladder: need dim >= 2");
    QMatrix a(n);
    for (int m = 0; m + 1 < n; ++m)
        a.at(m, m + 1) = Quaternion::real(std::sqrt(static_cast<double>(m + 1)));
    return {a, adjoint(a)};
}

QMatrix build_number(int n) {
    if (n < 1) throw DimTooSmall("build_number: need dim >= 1");
    QMatrix m(n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Quaternion::real(k);
    return m;
}

QMatrix build_position(int n) {
    LadderPair l = build_ladder(n);
    return scale(l.a + l.a_dag, kInvSqrt2);
}

QMatrix build_momentum(int n, const UnitImaginary& axis) {
    LadderPair l = build_ladder(n);
    Quaternion c = -kInvSqrt2 * axis.as_quaternion();
    return left_scalar_op(c, l.a - l.a_dag);
}

QMatrix build_hamiltonian(int n, const UnitImaginary& axis) {
    QMatrix q = build_position(n);
    QMatrix p = build_momentum(n, axis);
    return scale(matmul(q, q) + matmul(p, p), 0.5);
}

QMatrix build_parity(int n) {
    if (n < 1) throw DimTooSmall("build_parity: need dim >= 1");
    QMatrix m(n);
    for (int k = 0; k < n; ++k)
        m.at(k, k) = Quaternion::real(k % 2 == 0 ? 1.0 : -1.0);
    return m;
}

OperatorSet OperatorSet::build(int n) {
    LadderPair l = build_ladder(n);
    OperatorSet s;
    s.dim = n;
    s.a = l.a;
    s.a_dag = l.a_dag;
    s.number = build_number(n);
    s.position = build_position(n);
    s.parity = build_parity(n);
    return s;
}

} // namespace qho
