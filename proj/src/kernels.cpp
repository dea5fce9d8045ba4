#include "qho/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qho::kernels {

namespace {

inline void qmm_row(const QMatrix& a, const QMatrix& b, QMatrix& out, int i) {
    const int n = a.dim;
    for (int j = 0; j < n; ++j) {
        Quaternion s;
        for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
        out.at(i, j) = s;
    }
}

inline void cmm_row(const CMatrix& a, const CMatrix& b, CMatrix& out, int i) {
    const int n = a.n;
    for (int j = 0; j < n; ++j) {
        std::complex<double> s = 0.0;
        for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
        out.at(i, j) = s;
    }
}

} // namespace

void qmm_serial(const QMatrix& a, const QMatrix& b, QMatrix& out) {
    for (int i = 0; i < a.dim; ++i) qmm_row(a, b, out, i);
}

void qmm_parallel(const QMatrix& a, const QMatrix& b, QMatrix& out) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.dim; ++i) qmm_row(a, b, out, i);
#else
    qmm_serial(a, b, out);
#endif
}

void cmm_serial(const CMatrix& a, const CMatrix& b, CMatrix& out) {
    for (int i = 0; i < a.n; ++i) cmm_row(a, b, out, i);
}

void cmm_parallel(const CMatrix& a, const CMatrix& b, CMatrix& out) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.n; ++i) cmm_row(a, b, out, i);
#else
    cmm_serial(a, b, out);
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace qho::kernels
