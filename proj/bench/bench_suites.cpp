// Times the verification suites with the serial reference loop and the OpenMP
// runner, and checks both produce the same verdicts and residuals.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "horo/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace horo;

namespace {

double time_suite(const std::string& id, bool parallel, std::uint64_t seed, SuiteResult& out) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    out = run_suite(id, opt);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial loop\n");
#endif
    std::printf("%-24s %10s %10s %8s  %s\n", "suite", "serial[s]", "openmp[s]", "speedup",
                "match");
    for (const std::string& id : suite_ids()) {
        SuiteResult rs, rp;
        double ts = time_suite(id, false, seed, rs);
        double tp = time_suite(id, true, seed, rp);
        bool match = rs.pass == rp.pass && rs.worst == rp.worst && rs.samples == rp.samples;
        std::printf("%-24s %10.4f %10.4f %8.2fx  %s\n", id.c_str(), ts, tp,
                    tp > 0.0 ? ts / tp : 0.0, match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}
