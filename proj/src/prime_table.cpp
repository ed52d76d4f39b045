#include <pi26/prime_table.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

namespace pi26 {

namespace {

// The two values the reference text prints explicitly; every loaded table is
// anchored against them.
const char* const anchor_24 = "18435599767349200867866";
const char* const anchor_25 = "176846309399143769411680";

bool digits_only(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string default_data_dir() { return PI26_DATA_DIR; }

PrimeCountTable PrimeCountTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw load_error("cannot open table file: " + path);
    }
    PrimeCountTable table;
    table.source_ = path;
    table.values_.reserve(max_exponent);
    std::string line;
    int line_no = 0;
    int last_n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto where = [&] { return path + ":" + std::to_string(line_no); };
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw load_error("malformed line (expected n<TAB>value) at " + where());
        }
        const std::string n_text = line.substr(0, tab);
        const std::string v_text = line.substr(tab + 1);
        if (!digits_only(n_text) || !digits_only(v_text)) {
            throw load_error("malformed line (non-numeric field) at " + where());
        }
        const int n = std::stoi(n_text);
        if (n < 1 || n > max_exponent) {
            throw load_error("exponent " + n_text + " out of range 1..25 at " + where());
        }
        if (n <= last_n) {
            throw load_error("exponents out of increasing order at " + where());
        }
        if (n != last_n + 1) {
            throw load_error("missing exponent " + std::to_string(last_n + 1) +
                             " (found " + n_text + " at " + where() + ")");
        }
        last_n = n;
        table.values_.emplace_back(v_text);
        if (table.values_.size() >= 2 &&
            table.values_[table.values_.size() - 1] <= table.values_[table.values_.size() - 2]) {
            throw load_error("non-monotone value at n=" + n_text + ", " + where());
        }
    }
    if (last_n != max_exponent) {
        throw load_error("missing exponent " + std::to_string(last_n + 1) + " in " + path);
    }
    if (table.values_[23] != BigInt(anchor_24) || table.values_[24] != BigInt(anchor_25)) {
        throw load_error("table anchors for n=24/25 do not match the reference values in " +
                         path);
    }
    return table;
}

PrimeCountTable PrimeCountTable::builtin(const std::string& data_dir) {
    const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    return load(dir + "/pi_powers_of_ten.tsv");
}

const BigInt& PrimeCountTable::entry(int n) const {
    if (n < 1 || n > max_exponent) {
        throw domain_error("table entry " + std::to_string(n) + " out of range 1..25");
    }
    return values_[static_cast<std::size_t>(n - 1)];
}

std::uint64_t sieve_pi(std::uint64_t x, std::uint64_t oracle_limit) {
    if (x > oracle_limit) {
        throw domain_error("sieve_pi(" + std::to_string(x) + ") exceeds the oracle limit " +
                           std::to_string(oracle_limit) + "; raise --oracle-limit to allow");
    }
    if (x < 2) {
        return 0;
    }
    std::uint64_t count = 1;  // the prime 2; everything below is odd-only
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (root * root > x) {
        --root;
    }
    while ((root + 1) * (root + 1) <= x) {
        ++root;
    }
    std::vector<std::uint64_t> base_primes;
    if (root >= 3) {
        std::vector<bool> small(root / 2 + 1, true);  // index i -> odd 2i+1
        for (std::uint64_t m = 3; m <= root; m += 2) {
            if (!small[m / 2]) {
                continue;
            }
            base_primes.push_back(m);
            for (std::uint64_t q = m * m; q <= root; q += 2 * m) {
                small[q / 2] = false;
            }
        }
    }
    constexpr std::uint64_t odds_per_segment = 1u << 20;
    std::vector<bool> segment;
    for (std::uint64_t lo = 3; lo <= x; lo += 2 * odds_per_segment) {
        std::uint64_t hi = lo + 2 * odds_per_segment - 2;
        if (hi > x) {
            hi = x;
        }
        if ((hi & 1) == 0) {
            --hi;
        }
        const std::uint64_t slots = (hi - lo) / 2 + 1;
        segment.assign(slots, true);
        for (std::uint64_t p : base_primes) {
            std::uint64_t start = p * p;
            if (start > hi) {
                break;
            }
            if (start < lo) {
                const std::uint64_t steps = (lo - start + 2 * p - 1) / (2 * p);
                start += steps * 2 * p;
            }
            for (std::uint64_t q = start; q <= hi; q += 2 * p) {
                segment[(q - lo) / 2] = false;
            }
        }
        for (std::uint64_t i = 0; i < slots; ++i) {
            count += segment[i];
        }
    }
    return count;
}

std::vector<TableCheck> verify_table(const PrimeCountTable& table, int max_n,
                                     std::uint64_t oracle_limit) {
    if (max_n < 1) {
        throw domain_error("verify_table requires max_n >= 1");
    }
    std::uint64_t power = 1;
    for (int i = 0; i < max_n; ++i) {
        if (power > oracle_limit / 10) {
            throw domain_error("verify_table: 10^" + std::to_string(max_n) +
                               " exceeds the oracle limit");
        }
        power *= 10;
    }
    std::vector<TableCheck> checks;
    checks.reserve(static_cast<std::size_t>(max_n));
    std::uint64_t p = 1;
    for (int n = 1; n <= max_n; ++n) {
        p *= 10;
        TableCheck c;
        c.n = n;
        c.expected = table.entry(n);
        c.actual = BigInt(sieve_pi(p, oracle_limit));
        c.pass = c.expected == c.actual;
        checks.push_back(std::move(c));
    }
    return checks;
}

}  // namespace pi26
