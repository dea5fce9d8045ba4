#pragma once

#include <cmath>
#include <complex>

#include "qho/errors.hpp"

namespace qho {

// Quaternion q = w + x*i + y*j + z*k with Hamilton products
// i*j = -j*i = k, j*k = -k*j = i, k*i = -i*k = j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
}

// Hamilton product; component sums are evaluated in a fixed order so results
// are reproducible bit for bit.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

constexpr Quaternion& operator+=(Quaternion& a, const Quaternion& b) {
    a.w += b.w;
    a.x += b.x;
    a.y += b.y;
    a.z += b.z;
    return a;
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm2(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

constexpr double vec_norm2(const Quaternion& q) {
    return q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double vec_norm(const Quaternion& q) { return std::sqrt(vec_norm2(q)); }

inline Quaternion inverse(const Quaternion& q) {
    double n2 = norm2(q);
    return {q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2};
}

constexpr double max_abs_component(const Quaternion& q) {
    double m = q.w < 0 ? -q.w : q.w;
    double ax = q.x < 0 ? -q.x : q.x;
    double ay = q.y < 0 ? -q.y : q.y;
    double az = q.z < 0 ? -q.z : q.z;
    if (ax > m) m = ax;
    if (ay > m) m = ay;
    if (az > m) m = az;
    return m;
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) &&
           std::isfinite(q.z);
}

// Point on the unit sphere of imaginary quaternions (axis of a slice).
// Normalized on construction; a zero vector is rejected.
struct UnitImaginary {
    double x = 1.0;
    double y = 0.0;
    double z = 0.0;

    UnitImaginary() = default;
    UnitImaginary(double x_, double y_, double z_) {
        double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
        if (!(n > 0.0) || !std::isfinite(n))
            throw MalformedMatrix("UnitImaginary: zero or non-finite direction");
        x = x_ / n;
        y = y_ / n;
        z = z_ / n;
    }

    Quaternion as_quaternion() const { return {0.0, x, y, z}; }
};

// Slice coordinates q = x + axis*y with y >= 0.  For real q the axis is
// genuinely arbitrary; the canonical choice is i and real_degenerate is set.
struct SlicePoint {
    double x = 0.0;
    double y = 0.0;
    UnitImaginary axis;
    bool real_degenerate = false;

    Quaternion recompose() const {
        return {x, axis.x * y, axis.y * y, axis.z * y};
    }
};

SlicePoint slice_decompose(const Quaternion& q);

// Polar coordinates:
//   q0 = r cos(theta), q1 = r sin(theta) sin(phi) cos(psi),
//   q2 = r sin(theta) sin(phi) sin(psi), q3 = r sin(theta) cos(phi).
// The inversion used here takes theta, phi in [0, pi] and psi in [0, 2*pi);
// coordinates at chart degeneracies (r = 0, sin(theta) = 0, sin(phi) = 0)
// default to 0.
struct PolarForm {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double psi = 0.0;
};

PolarForm polar_form(const Quaternion& q);
Quaternion from_polar(const PolarForm& p);

// 2x2 complex representation [[w + i z, -y + i x], [y + i x, w - i z]].
// It is a ring homomorphism; the matrix adjoint realizes conjugation.
struct ComplexMatrix2 {
    std::complex<double> a, b, c, d; // row-major [a b; c d]
};

ComplexMatrix2 to_matrix2(const Quaternion& q);

// Inverse of to_matrix2. Verifies the representation structure
// (d == conj(a), c == -conj(b)) within rel_tol and throws MalformedMatrix
// otherwise.
Quaternion from_matrix2(const ComplexMatrix2& m, double rel_tol = 1e-10);

ComplexMatrix2 mul2(const ComplexMatrix2& p, const ComplexMatrix2& q);
ComplexMatrix2 adjoint2(const ComplexMatrix2& m);

// exp(q) = e^w (cos|v| + (v/|v|) sin|v|) where v is the imaginary part.
Quaternion exp_quat(const Quaternion& q);

// Uniform point on the unit sphere of imaginary quaternions from a single
// seed; wraps the Rng-based sampler (rng.hpp) for one-shot use.
UnitImaginary sample_sphere(unsigned long long seed);

} // namespace qho
