// The 25 known values of pi(10^n) plus a sieve oracle that independently
// validates the small entries.
#pragma once

#include <pi26/numbers.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pi26 {

// Immutable after load. Invariants: entries for every n in 1..25 with no gaps,
// strictly increasing, and the two reference anchors
// entry(24) = 18435599767349200867866, entry(25) = 176846309399143769411680.
class PrimeCountTable {
public:
    static PrimeCountTable load(const std::string& path);
    // The bundled data file (data_dir defaults to the build-time data path).
    static PrimeCountTable builtin(const std::string& data_dir = "");

    const BigInt& entry(int n) const;  // domain_error outside 1..25
    const std::string& source() const { return source_; }
    static constexpr int max_exponent = 25;

private:
    PrimeCountTable() = default;
    std::vector<BigInt> values_;  // index 0 -> n=1
    std::string source_;
};

// Exact count of primes <= x by segmented sieve of Eratosthenes.
// Refuses (domain_error) when x > oracle_limit; never approximates.
std::uint64_t sieve_pi(std::uint64_t x, std::uint64_t oracle_limit = 100000000ULL);

struct TableCheck {
    int n;
    BigInt expected;  // table entry
    BigInt actual;    // sieve count
    bool pass;
};

// Compares sieve_pi(10^n) with entry(n) for every n <= max_n.
// Requires 10^max_n <= oracle_limit.
std::vector<TableCheck> verify_table(const PrimeCountTable& table, int max_n,
                                     std::uint64_t oracle_limit = 100000000ULL);

// Directory containing the bundled data files (build-time default, used when
// no explicit path is given).
std::string default_data_dir();

}  // namespace pi26
