#include "qho/linalg.hpp"

#include <cmath>

#include "qho/kernels.hpp"

namespace qho {

namespace {
void check_same_dim(int a, int b, const char* what) {
    if (a != b) throw DimMismatch(std::string(what) + ": dimension mismatch");
}
} // namespace

QVector QVector::basis(int n, int k) {
    QVector v(n);
    v[k] = Quaternion::real(1.0);
    return v;
}

Quaternion inner(const QVector& a, const QVector& b) {
    check_same_dim(a.dim, b.dim, "inner");
    Quaternion s;
    for (int k = 0; k < a.dim; ++k) s += conj(a[k]) * b[k];
    return s;
}

double vnorm(const QVector& a) {
    double s = 0.0;
    for (int k = 0; k < a.dim; ++k) s += norm2(a[k]);
    return std::sqrt(s);
}

QVector operator+(const QVector& a, const QVector& b) {
    check_same_dim(a.dim, b.dim, "vector add");
    QVector r(a.dim);
    for (int k = 0; k < a.dim; ++k) r[k] = a[k] + b[k];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    check_same_dim(a.dim, b.dim, "vector sub");
    QVector r(a.dim);
    for (int k = 0; k < a.dim; ++k) r[k] = a[k] - b[k];
    return r;
}

QVector left_scalar_vec(const Quaternion& q, const QVector& v) {
    QVector r(v.dim);
    for (int k = 0; k < v.dim; ++k) r[k] = q * v[k];
    return r;
}

QVector right_scalar_vec(const QVector& v, const Quaternion& q) {
    QVector r(v.dim);
    for (int k = 0; k < v.dim; ++k) r[k] = v[k] * q;
    return r;
}

double max_abs_diff(const QVector& a, const QVector& b) {
    check_same_dim(a.dim, b.dim, "max_abs_diff");
    double m = 0.0;
    for (int k = 0; k < a.dim; ++k)
        m = std::max(m, max_abs_component(a[k] - b[k]));
    return m;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Quaternion::real(1.0);
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    check_same_dim(a.dim, b.dim, "matrix add");
    QMatrix r(a.dim);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    check_same_dim(a.dim, b.dim, "matrix sub");
    QMatrix r(a.dim);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
}

QMatrix scale(const QMatrix& a, double s) {
    QMatrix r(a.dim);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = s * a.e[k];
    return r;
}

QVector apply(const QMatrix& a, const QVector& v) {
    check_same_dim(a.dim, v.dim, "apply");
    QVector r(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        Quaternion s;
        for (int m = 0; m < a.dim; ++m) s += a.at(i, m) * v[m];
        r[i] = s;
    }
    return r;
}

QMatrix left_scalar_op(const Quaternion& q, const QMatrix& a) {
    QMatrix r(a.dim);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = q * a.e[k];
    return r;
}

QMatrix right_scalar_op(const QMatrix& a, const Quaternion& q) {
    QMatrix r(a.dim);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] * q;
    return r;
}

QMatrix adjoint(const QMatrix& a) {
    QMatrix r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) r.at(i, j) = conj(a.at(j, i));
    return r;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    check_same_dim(a.dim, b.dim, "matmul");
    QMatrix r(a.dim);
    if (kernels::openmp_enabled() && a.dim >= 32)
        kernels::qmm_parallel(a, b, r);
    else
        kernels::qmm_serial(a, b, r);
    return r;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
    return matmul(a, b) - matmul(b, a);
}

double max_abs(const QMatrix& a) {
    double m = 0.0;
    for (const auto& q : a.e) m = std::max(m, max_abs_component(q));
    return m;
}

double block_max_abs(const QMatrix& a, int rows, int cols) {
    double m = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m = std::max(m, max_abs_component(a.at(i, j)));
    return m;
}

double interior_max_abs(const QMatrix& a) {
    return block_max_abs(a, a.dim - 1, a.dim - 1);
}

double frobenius(const QMatrix& a) {
    double s = 0.0;
    for (const auto& q : a.e) s += norm2(q);
    return std::sqrt(s);
}

} // namespace qho
