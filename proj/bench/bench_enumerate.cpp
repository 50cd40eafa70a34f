// Compares the serial reference kernels against the OpenMP prefix-split
// kernels on the heaviest workloads: raw enumeration counting and the
// full theorem verification sweep. Results must agree exactly; the
// point of the run is the wall-clock ratio.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zfseq/enumerate.hpp"

using namespace zfseq;

namespace {

template <typename F>
double timed(const F& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 21;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::printf("\ncount_zero_free, length = floor(n/2) + 1\n");
    std::printf("%4s %14s %12s %12s %8s\n", "n", "count", "serial s", "parallel s",
                "speedup");
    for (int n = max_n - 4; n <= max_n; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        spec.length = n / 2 + 1;
        std::uint64_t serial_count = 0, parallel_count = 0;
        double ts = timed([&] { serial_count = count_zero_free(spec); });
        double tp = timed([&] { parallel_count = count_zero_free_parallel(spec); });
        if (serial_count != parallel_count) {
            std::printf("MISMATCH at n=%d: %llu vs %llu\n", n,
                        static_cast<unsigned long long>(serial_count),
                        static_cast<unsigned long long>(parallel_count));
            return 1;
        }
        std::printf("%4d %14llu %12.3f %12.3f %7.2fx\n", n,
                    static_cast<unsigned long long>(serial_count), ts, tp, ts / tp);
    }

    std::printf("\nverify_theorem_major over [2, n]\n");
    std::printf("%4s %14s %12s %12s %8s\n", "n", "checked", "serial s", "parallel s",
                "speedup");
    for (int n = max_n - 2; n <= max_n; ++n) {
        VerificationReport rs, rp;
        double ts = timed([&] { rs = verify_theorem_major(2, n, false); });
        double tp = timed([&] { rp = verify_theorem_major(2, n, true); });
        if (rs.sequences_checked != rp.sequences_checked || !rs.verified() ||
            !rp.verified()) {
            std::printf("MISMATCH at n=%d\n", n);
            return 1;
        }
        std::printf("%4d %14llu %12.3f %12.3f %7.2fx\n", n,
                    static_cast<unsigned long long>(rs.sequences_checked), ts, tp,
                    ts / tp);
    }
    return 0;
}
