#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace horo {

// One verification suite = one numbered acceptance check. Each suite evaluates
// a fixed number of seeded samples; sample i is seeded from (seed, suite, i),
// so the serial and OpenMP runners produce bit-identical residual tables.
struct SuiteResult {
    std::string id;
    std::string name;
    bool pass = false;
    double worst = 0.0;      // worst residual across samples (suite-specific meaning)
    double tolerance = 0.0;  // the bound `worst` is held against
    long samples = 0;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0 = no runtime budget
    std::string note;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    bool parallel = true;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    bool parallel = false;
    std::vector<SuiteResult> suites;
    bool all_pass = false;
    double total_seconds = 0.0;
};

const std::vector<std::string>& suite_ids();
SuiteResult run_suite(const std::string& id, const VerifyOptions& opt);
VerifyReport run_all_suites(const VerifyOptions& opt);

std::string format_suite_line(const SuiteResult& r);

}  // namespace horo
