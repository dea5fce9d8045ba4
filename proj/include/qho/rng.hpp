#pragma once

#include <cstdint>
#include <random>

#include "qho/quaternion.hpp"

namespace qho {

// Deterministic random source.  Doubles are derived from raw mt19937_64
// output with fixed bit manipulation (never std::*_distribution, whose
// sequences are implementation-defined), so streams are reproducible across
// standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Uniform on the unit sphere (area measure) via the cylinder map.
    UnitImaginary unit_imaginary() {
        double z = 1.0 - 2.0 * uniform();
        double ang = 2.0 * 3.141592653589793238462643383279502884 * uniform();
        double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return UnitImaginary(s * std::cos(ang), s * std::sin(ang), z);
    }

    // Uniform in the closed ball |q| <= radius (rejection from the 4-cube).
    Quaternion quaternion_in_ball(double radius) {
        for (;;) {
            Quaternion q{uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                         uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (norm2(q) <= 1.0) return radius * q;
        }
    }

    // Uniform components in [-half, half].
    Quaternion quaternion_box(double half) {
        return {uniform(-half, half), uniform(-half, half),
                uniform(-half, half), uniform(-half, half)};
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

} // namespace qho
