#pragma once

#include "qho/linalg.hpp"

namespace qho {

// Truncated oscillator operators on span{e_0..e_{N-1}}.
//
// a[m][m+1] = sqrt(m+1), a_dag = adjoint(a).  The truncation makes
// [a, a_dag] equal the identity on indices 0..N-2 with boundary entry
// -(N-1); identities are asserted on the interior block and the boundary
// defect is asserted at its known value.

struct LadderPair {
    QMatrix a;
    QMatrix a_dag;
};

LadderPair build_ladder(int n); // DimTooSmall if n < 2

QMatrix build_number(int n);   // diag(0..n-1), exact integers; equals a_dag*a
QMatrix build_position(int n); // Q = (a + a_dag)/sqrt(2)
// P_I = (-I/sqrt(2)) . (a - a_dag); exactly self-adjoint entrywise.
QMatrix build_momentum(int n, const UnitImaginary& axis);
// H_I = (Q^2 + P_I^2)/2; equals N + id/2 on the interior block.
QMatrix build_hamiltonian(int n, const UnitImaginary& axis);
QMatrix build_parity(int n); // diag((-1)^m)

struct OperatorSet {
    int dim = 0;
    QMatrix a;
    QMatrix a_dag;
    QMatrix number;
    QMatrix position;
    QMatrix parity;

    static OperatorSet build(int n);

    QMatrix momentum(const UnitImaginary& axis) const {
        return build_momentum(dim, axis);
    }
    QMatrix hamiltonian(const UnitImaginary& axis) const {
        return build_hamiltonian(dim, axis);
    }
};

} // namespace qho
