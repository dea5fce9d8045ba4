#pragma once

#include <vector>

#include "qho/quaternion.hpp"

namespace qho {

// Coefficients of a vector in the truncated right quaternionic Hilbert
// space: |phi> = sum_k |e_k> c[k].
// Scalars act on the right of vectors; matrices act entry-on-the-left:
// (A phi)_k = sum_m A[k][m] * phi_m, which makes A right-linear.
struct QVector {
    int dim = 0;
    std::vector<Quaternion> c;

    QVector() = default;
    explicit QVector(int n) : dim(n), c(static_cast<size_t>(n)) {}

    static QVector basis(int n, int k);

    Quaternion& operator[](int k) { return c[static_cast<size_t>(k)]; }
    const Quaternion& operator[](int k) const { return c[static_cast<size_t>(k)]; }
};

// <phi|psi> = sum_k conj(phi_k) psi_k, summed in index order.
Quaternion inner(const QVector& a, const QVector& b);
double vnorm(const QVector& a);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
// q . phi (coefficients q*phi_k; the basis-dependent left scalar action).
QVector left_scalar_vec(const Quaternion& q, const QVector& v);
// phi . q (coefficients phi_k*q; the native right action).
QVector right_scalar_vec(const QVector& v, const Quaternion& q);
double max_abs_diff(const QVector& a, const QVector& b);

struct QMatrix {
    int dim = 0;
    std::vector<Quaternion> e; // row-major

    QMatrix() = default;
    explicit QMatrix(int n) : dim(n), e(static_cast<size_t>(n) * n) {}

    static QMatrix identity(int n);
    static QMatrix zero(int n) { return QMatrix(n); }

    Quaternion& at(int r, int c) { return e[static_cast<size_t>(r) * dim + c]; }
    const Quaternion& at(int r, int c) const {
        return e[static_cast<size_t>(r) * dim + c];
    }
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix scale(const QMatrix& a, double s);

QVector apply(const QMatrix& a, const QVector& v);

// q . A : entries q*A[k][m]; realizes (q.A)phi = q.(A phi).
QMatrix left_scalar_op(const Quaternion& q, const QMatrix& a);
// A . q : entries A[k][m]*q; realizes (A.q)phi = A(q.phi).
QMatrix right_scalar_op(const QMatrix& a, const Quaternion& q);

QMatrix adjoint(const QMatrix& a);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix commutator(const QMatrix& a, const QMatrix& b); // AB - BA

double max_abs(const QMatrix& a);
// Max |entry| over the leading block rows x cols.
double block_max_abs(const QMatrix& a, int rows, int cols);
// Max |entry| over indices 0..dim-2 (drops the truncation boundary).
double interior_max_abs(const QMatrix& a);
double frobenius(const QMatrix& a);

} // namespace qho
