#pragma once

#include <complex>
#include <vector>

#include "qho/linalg.hpp"

namespace qho {

// Dense complex matrix, row-major.  Workhorse for the 2N x 2N embedding of
// quaternion matrices (each quaternion entry becomes a 2x2 complex block).
struct CMatrix {
    int n = 0;
    std::vector<std::complex<double>> e;

    CMatrix() = default;
    explicit CMatrix(int n_) : n(n_), e(static_cast<size_t>(n_) * n_) {}

    static CMatrix identity(int n);

    std::complex<double>& at(int r, int c) {
        return e[static_cast<size_t>(r) * n + c];
    }
    const std::complex<double>& at(int r, int c) const {
        return e[static_cast<size_t>(r) * n + c];
    }
};

CMatrix cmatmul(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix cscale(const CMatrix& a, std::complex<double> s);
double one_norm(const CMatrix& a);
CMatrix cadjoint(const CMatrix& a);

// Solves A X = B by partial-pivot LU; A and B are consumed by copy.
CMatrix lu_solve(CMatrix a, CMatrix b);

// chi: quaternion matrices -> complex matrices, blockwise via to_matrix2.
// Multiplicative and adjoint-preserving; tested as the matmul oracle.
CMatrix chi_embed(const QMatrix& a);

// Inverse of chi_embed by averaging the two redundant copies of each
// component (orthogonal projection onto the image).  If defect is non-null
// it receives the max absolute deviation of the input from the image.
QMatrix chi_pullback(const CMatrix& m, double* defect = nullptr);

// exp(A) by Pade-13 scaling and squaring on the complex matrix.
CMatrix cexpm(const CMatrix& a);

// exp(A) for quaternion matrices: computed in the chi embedding with
// scaling-and-squaring, then pulled back.  Throws ConvergenceFailure if the
// result is non-finite or leaves the embedding image beyond tolerance.
QMatrix matrix_exp(const QMatrix& a);

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi sweeps,
// unsorted.  Throws ConvergenceFailure if the off-diagonal mass does not
// vanish within max_sweeps.
std::vector<double> hermitian_eigenvalues(CMatrix a, int max_sweeps = 60);

} // namespace qho
