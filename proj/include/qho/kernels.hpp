#pragma once

#include "qho/cmatrix.hpp"
#include "qho/linalg.hpp"

// Hot inner loops, each in two variants: a serial reference and an OpenMP
// version.  Parallel variants partition work over independent output
// elements only — the reduction order inside every element is identical to
// the serial code — so results match the reference bit for bit regardless
// of thread count.  matmul()/cmatmul() dispatch to the parallel kernel when
// OpenMP is available and the problem is large enough.

namespace qho::kernels {

void qmm_serial(const QMatrix& a, const QMatrix& b, QMatrix& out);
void qmm_parallel(const QMatrix& a, const QMatrix& b, QMatrix& out);

void cmm_serial(const CMatrix& a, const CMatrix& b, CMatrix& out);
void cmm_parallel(const CMatrix& a, const CMatrix& b, CMatrix& out);

bool openmp_enabled();
int max_threads();

} // namespace qho::kernels
