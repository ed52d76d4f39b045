// The verification suite: every bundled reference value and pinned integer
// checked against a fresh computation, reported one record per check.
#pragma once

#include <pi26/prime_table.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pi26 {

struct CheckRecord {
    std::string group;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyConfig {
    std::string data_dir;                       // empty -> build-time default
    std::string table_path;                     // empty -> bundled table
    std::uint64_t oracle_limit = 100000000ULL;  // caps the sieve group
    unsigned precision_digits = 60;
    unsigned j_max = 1000;
};

// Runs the ten check groups in order: sieve, polynomials, reconstruction,
// corrective-fit, delta-prime, residual-trend, extrapolation, conjecture,
// analytic, range-membership. Returns one record per comparison.
std::vector<CheckRecord> run_verify(const VerifyConfig& config);

// Convenience: true iff every record passes.
bool all_pass(const std::vector<CheckRecord>& records);

// Golden-file readers (shared with tests). Rows of non-comment,
// tab-separated fields.
std::vector<std::vector<std::string>> read_tsv(const std::string& path);

}  // namespace pi26
