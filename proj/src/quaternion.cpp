#include "qho/quaternion.hpp"

#include <cmath>

#include "qho/rng.hpp"

namespace qho {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559005768;
}

SlicePoint slice_decompose(const Quaternion& q) {
    SlicePoint s;
    s.x = q.w;
    double y = vec_norm(q);
    if (y > 0.0) {
        s.y = y;
        s.axis = UnitImaginary(q.x, q.y, q.z);
        s.real_degenerate = false;
    } else {
        s.y = 0.0;
        s.axis = UnitImaginary(1.0, 0.0, 0.0);
        s.real_degenerate = true;
    }
    return s;
}

PolarForm polar_form(const Quaternion& q) {
    PolarForm p;
    p.r = norm(q);
    if (p.r == 0.0) return p;
    double v = vec_norm(q);
    p.theta = std::atan2(v, q.w); // in [0, pi] since v >= 0
    if (v == 0.0) return p;
    double v12 = std::sqrt(q.x * q.x + q.y * q.y);
    p.phi = std::atan2(v12, q.z); // in [0, pi]
    if (v12 == 0.0) return p;
    p.psi = std::atan2(q.y, q.x);
    if (p.psi < 0.0) p.psi += kTwoPi;
    return p;
}

Quaternion from_polar(const PolarForm& p) {
    double st = std::sin(p.theta);
    double sp = std::sin(p.phi);
    return {p.r * std::cos(p.theta),
            p.r * st * sp * std::cos(p.psi),
            p.r * st * sp * std::sin(p.psi),
            p.r * st * std::cos(p.phi)};
}

ComplexMatrix2 to_matrix2(const Quaternion& q) {
    using C = std::complex<double>;
    return {C(q.w, q.z), C(-q.y, q.x), C(q.y, q.x), C(q.w, -q.z)};
}

Quaternion from_matrix2(const ComplexMatrix2& m, double rel_tol) {
    double scale = std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
    double defect = std::max(std::abs(m.d - std::conj(m.a)),
                             std::abs(m.c + std::conj(m.b)));
    if (defect > rel_tol * std::max(1.0, scale))
        throw MalformedMatrix("from_matrix2: matrix is not in the image of the "
                              "quaternion representation");
    return {0.5 * (m.a.real() + m.d.real()), 0.5 * (m.b.imag() + m.c.imag()),
            0.5 * (m.c.real() - m.b.real()), 0.5 * (m.a.imag() - m.d.imag())};
}

ComplexMatrix2 mul2(const ComplexMatrix2& p, const ComplexMatrix2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
            p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

ComplexMatrix2 adjoint2(const ComplexMatrix2& m) {
    return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

Quaternion exp_quat(const Quaternion& q) {
    double ew = std::exp(q.w);
    double v = vec_norm(q);
    if (v == 0.0) return {ew, 0.0, 0.0, 0.0};
    double c = std::cos(v);
    double s = std::sin(v) / v;
    return {ew * c, ew * s * q.x, ew * s * q.y, ew * s * q.z};
}

UnitImaginary sample_sphere(unsigned long long seed) {
    Rng rng(seed);
    return rng.unit_imaginary();
}

} // namespace qho
