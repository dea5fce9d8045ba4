#include "qho/cmatrix.hpp"

#include <cmath>

#include "qho/kernels.hpp"

namespace qho {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int k = 0; k < n; ++k) m.at(k, k) = 1.0;
    return m;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
    if (a.n != b.n) throw DimMismatch("cmatmul: dimension mismatch");
    CMatrix r(a.n);
    if (kernels::openmp_enabled() && a.n >= 64)
        kernels::cmm_parallel(a, b, r);
    else
        kernels::cmm_serial(a, b, r);
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
}

CMatrix cscale(const CMatrix& a, std::complex<double> s) {
    CMatrix r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = s * a.e[k];
    return r;
}

double one_norm(const CMatrix& a) {
    double m = 0.0;
    for (int j = 0; j < a.n; ++j) {
        double s = 0.0;
        for (int i = 0; i < a.n; ++i) s += std::abs(a.at(i, j));
        m = std::max(m, s);
    }
    return m;
}

CMatrix cadjoint(const CMatrix& a) {
    CMatrix r(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

CMatrix lu_solve(CMatrix a, CMatrix b) {
    if (a.n != b.n) throw DimMismatch("lu_solve: dimension mismatch");
    const int n = a.n;
    std::vector<int> piv(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(a.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(a.at(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best > 0.0))
            throw ConvergenceFailure("lu_solve: singular matrix");
        piv[k] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
        for (int i = k + 1; i < n; ++i) {
            std::complex<double> f = a.at(i, k) / a.at(k, k);
            a.at(i, k) = f;
            for (int j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    // forward/back substitution on each column of b
    for (int k = 0; k < n; ++k)
        if (piv[k] != k)
            for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(piv[k], j));
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i) {
            std::complex<double> f = a.at(i, k);
            for (int j = 0; j < n; ++j) b.at(i, j) -= f * b.at(k, j);
        }
    for (int k = n - 1; k >= 0; --k) {
        std::complex<double> d = a.at(k, k);
        for (int j = 0; j < n; ++j) b.at(k, j) /= d;
        for (int i = 0; i < k; ++i) {
            std::complex<double> f = a.at(i, k);
            for (int j = 0; j < n; ++j) b.at(i, j) -= f * b.at(k, j);
        }
    }
    return b;
}

CMatrix chi_embed(const QMatrix& a) {
    CMatrix m(2 * a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            ComplexMatrix2 blk = to_matrix2(a.at(i, j));
            m.at(2 * i, 2 * j) = blk.a;
            m.at(2 * i, 2 * j + 1) = blk.b;
            m.at(2 * i + 1, 2 * j) = blk.c;
            m.at(2 * i + 1, 2 * j + 1) = blk.d;
        }
    return m;
}

QMatrix chi_pullback(const CMatrix& m, double* defect) {
    if (m.n % 2 != 0) throw DimMismatch("chi_pullback: odd dimension");
    const int n = m.n / 2;
    QMatrix a(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> ma = m.at(2 * i, 2 * j);
            std::complex<double> mb = m.at(2 * i, 2 * j + 1);
            std::complex<double> mc = m.at(2 * i + 1, 2 * j);
            std::complex<double> md = m.at(2 * i + 1, 2 * j + 1);
            a.at(i, j) = {0.5 * (ma.real() + md.real()),
                          0.5 * (mb.imag() + mc.imag()),
                          0.5 * (mc.real() - mb.real()),
                          0.5 * (ma.imag() - md.imag())};
            worst = std::max(worst, std::abs(md - std::conj(ma)));
            worst = std::max(worst, std::abs(mc + std::conj(mb)));
        }
    if (defect) *defect = worst;
    return a;
}

CMatrix cexpm(const CMatrix& a) {
    static const double b[14] = {64764752532480000.0, 32382376266240000.0,
                                 7771770303897600.0,  1187353796428800.0,
                                 129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,
                                 1323241920.0,        40840800.0,
                                 960960.0,            16380.0,
                                 182.0,               1.0};
    const double theta13 = 5.371920351148152;
    const int n = a.n;

    double nrm = one_norm(a);
    if (!std::isfinite(nrm))
        throw ConvergenceFailure("cexpm: non-finite input");
    int s = 0;
    if (nrm > theta13)
        s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    CMatrix as = cscale(a, std::ldexp(1.0, -s));

    CMatrix a2 = cmatmul(as, as);
    CMatrix a4 = cmatmul(a2, a2);
    CMatrix a6 = cmatmul(a2, a4);
    CMatrix id = CMatrix::identity(n);

    CMatrix u_in = cscale(a6, b[13]) + cscale(a4, b[11]) + cscale(a2, b[9]);
    CMatrix u = cmatmul(a6, u_in) + cscale(a6, b[7]) + cscale(a4, b[5]) +
                cscale(a2, b[3]) + cscale(id, b[1]);
    u = cmatmul(as, u);
    CMatrix v_in = cscale(a6, b[12]) + cscale(a4, b[10]) + cscale(a2, b[8]);
    CMatrix v = cmatmul(a6, v_in) + cscale(a6, b[6]) + cscale(a4, b[4]) +
                cscale(a2, b[2]) + cscale(id, b[0]);

    CMatrix r = lu_solve(v - u, v + u);
    for (int k = 0; k < s; ++k) r = cmatmul(r, r);
    return r;
}

QMatrix matrix_exp(const QMatrix& a) {
    CMatrix em = cexpm(chi_embed(a));
    double defect = 0.0;
    QMatrix r = chi_pullback(em, &defect);
    double scale = 0.0;
    for (const auto& v : em.e) scale = std::max(scale, std::abs(v));
    if (!std::isfinite(scale) || defect > 1e-8 * std::max(1.0, scale))
        throw ConvergenceFailure(
            "matrix_exp: embedding structure defect exceeds tolerance");
    return r;
}

std::vector<double> hermitian_eigenvalues(CMatrix a, int max_sweeps) {
    const int n = a.n;
    double dscale = 0.0;
    for (const auto& v : a.e) dscale = std::max(dscale, std::abs(v));
    if (dscale == 0.0) dscale = 1.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a.at(p, q)));
        if (off <= 1e-14 * dscale) {
            std::vector<double> ev(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = a.at(i, i).real();
            return ev;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                std::complex<double> beta = a.at(p, q);
                double b = std::abs(beta);
                if (b <= 1e-300) continue;
                std::complex<double> u = beta / b;
                double alpha = a.at(p, p).real();
                double gamma = a.at(q, q).real();
                double zeta = (gamma - alpha) / (2.0 * b);
                double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // Unitary J with columns (c, -s*conj(u)) and (s, c*conj(u));
                // J^+ A J zeroes the (p,q) entry.
                for (int k = 0; k < n; ++k) {
                    std::complex<double> akp = a.at(k, p);
                    std::complex<double> akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * std::conj(u) * akq;
                    a.at(k, q) = s * akp + c * std::conj(u) * akq;
                }
                for (int k = 0; k < n; ++k) {
                    std::complex<double> apk = a.at(p, k);
                    std::complex<double> aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * u * aqk;
                    a.at(q, k) = s * apk + c * u * aqk;
                }
                a.at(p, p) = {a.at(p, p).real(), 0.0};
                a.at(q, q) = {a.at(q, q).real(), 0.0};
                a.at(p, q) = {0.0, 0.0};
                a.at(q, p) = {0.0, 0.0};
            }
        }
    }
    throw ConvergenceFailure("hermitian_eigenvalues: Jacobi did not converge");
}

} // namespace qho
