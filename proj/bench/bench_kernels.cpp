// Times the serial reference kernels against the OpenMP ones on square
// matrix products.  On a single hardware thread the two land within noise
// of each other; the point of the table is the cross-check and the scaling
// once more cores are available.

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "qho/cmatrix.hpp"
#include "qho/kernels.hpp"
#include "qho/linalg.hpp"
#include "qho/rng.hpp"

using namespace qho;
using namespace qho::kernels;
using Clock = std::chrono::steady_clock;

namespace {

double cmax_abs_diff(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (size_t k = 0; k < a.e.size(); ++k)
        m = std::max(m, std::abs(a.e[k] - b.e[k]));
    return m;
}

QMatrix random_qmatrix(int n, Rng& rng) {
    QMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng.quaternion_box(1.0);
    return m;
}

CMatrix random_cmatrix(int n, Rng& rng) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return m;
}

template <typename F> double time_best_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        f();
        auto t1 = Clock::now();
        double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main() {
    std::printf("threads available: %d (openmp %s)\n", max_threads(),
                openmp_enabled() ? "on" : "off");
    std::printf("%-12s %6s %12s %12s %9s %10s\n", "kernel", "n",
                "serial (ms)", "openmp (ms)", "speedup", "max |diff|");

    Rng rng(20260819);
    const int reps = 3;
    for (int n : {48, 96, 160}) {
        QMatrix a = random_qmatrix(n, rng);
        QMatrix b = random_qmatrix(n, rng);
        QMatrix rs(n), rp(n);
        double ts = time_best_ms([&] { qmm_serial(a, b, rs); }, reps);
        double tp = time_best_ms([&] { qmm_parallel(a, b, rp); }, reps);
        std::printf("%-12s %6d %12.3f %12.3f %8.2fx %10.3g\n", "quaternion",
                    n, ts, tp, ts / tp, max_abs(rs - rp));
    }
    for (int n : {96, 192, 320}) {
        CMatrix a = random_cmatrix(n, rng);
        CMatrix b = random_cmatrix(n, rng);
        CMatrix rs(n), rp(n);
        double ts = time_best_ms([&] { cmm_serial(a, b, rs); }, reps);
        double tp = time_best_ms([&] { cmm_parallel(a, b, rp); }, reps);
        std::printf("%-12s %6d %12.3f %12.3f %8.2fx %10.3g\n", "complex", n,
                    ts, tp, ts / tp, cmax_abs_diff(rs, rp));
    }
    return 0;
}
