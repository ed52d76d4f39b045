#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pi26/prime_table.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace pi26;
using doctest::Contains;

namespace {

// Writes a scratch table file in the test's working directory.
class TempFile {
public:
    TempFile(const std::string& name, const std::string& content) : path_(name) {
        std::ofstream out(path_);
        out << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// The bundled table rewritten as file content, with one optional override.
std::string table_text(int override_n = 0, const std::string& override_value = "") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    std::string text = "# scratch copy\n";
    for (int n = 1; n <= PrimeCountTable::max_exponent; ++n) {
        const std::string value =
            n == override_n ? override_value : table.entry(n).str();
        text += std::to_string(n) + "\t" + value + "\n";
    }
    return text;
}

}  // namespace

TEST_CASE("bundled table has the expected entries") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    CHECK(table.entry(1) == 4);
    CHECK(table.entry(2) == 25);
    CHECK(table.entry(6) == 78498);
    CHECK(table.entry(24) == BigInt("18435599767349200867866"));
    CHECK(table.entry(25) == BigInt("176846309399143769411680"));
    CHECK(table.source().find("pi_powers_of_ten.tsv") != std::string::npos);
    CHECK_THROWS_AS(table.entry(0), domain_error);
    CHECK_THROWS_AS(table.entry(26), domain_error);
}

TEST_CASE("loader accepts a clean copy and reports each corruption") {
    {
        TempFile f("tmp_table_ok.tsv", table_text());
        const PrimeCountTable table = PrimeCountTable::load(f.path());
        CHECK(table.entry(25) == BigInt("176846309399143769411680"));
        CHECK(table.source() == f.path());
    }
    CHECK_THROWS_WITH_AS(PrimeCountTable::load("no_such_file.tsv"),
                         Contains("cannot open"), load_error);
    {
        // drop the n=13 row
        std::string text;
        const PrimeCountTable table = PrimeCountTable::builtin();
        for (int n = 1; n <= 25; ++n) {
            if (n == 13) continue;
            text += std::to_string(n) + "\t" + table.entry(n).str() + "\n";
        }
        TempFile f("tmp_table_gap.tsv", text);
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("missing exponent 13"), load_error);
    }
    {
        TempFile f("tmp_table_short.tsv", "1\t4\n2\t25\n");
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("missing exponent 3"), load_error);
    }
    {
        TempFile f("tmp_table_space.tsv", "1 4\n");
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("malformed line"), load_error);
    }
    {
        TempFile f("tmp_table_alpha.tsv", "1\tfour\n");
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("malformed line"), load_error);
    }
    {
        TempFile f("tmp_table_range.tsv", "0\t1\n" + table_text());
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("out of range"), load_error);
    }
    {
        TempFile f("tmp_table_dup.tsv", "1\t4\n1\t4\n");
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("increasing order"), load_error);
    }
    {
        // monotonicity: pi(10^3) may not be below pi(10^2)
        TempFile f("tmp_table_mono.tsv", table_text(3, "20"));
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("non-monotone value at n=3"), load_error);
    }
    {
        TempFile f("tmp_table_anchor.tsv",
                   table_text(25, "176846309399143769411681"));
        CHECK_THROWS_WITH_AS(PrimeCountTable::load(f.path()),
                             Contains("anchors"), load_error);
    }
}

TEST_CASE("sieve counts primes exactly") {
    CHECK(sieve_pi(0) == 0);
    CHECK(sieve_pi(1) == 0);
    CHECK(sieve_pi(2) == 1);
    CHECK(sieve_pi(3) == 2);
    CHECK(sieve_pi(10) == 4);
    CHECK(sieve_pi(100) == 25);
    CHECK(sieve_pi(97) == 25);
    CHECK(sieve_pi(96) == 24);
    CHECK(sieve_pi(1000) == 168);
    CHECK(sieve_pi(1000000) == 78498);
}

TEST_CASE("sieve refuses beyond its oracle limit rather than approximating") {
    CHECK(sieve_pi(100, 100) == 25);
    CHECK_THROWS_WITH_AS(sieve_pi(101, 100), Contains("oracle limit"), domain_error);
}

TEST_CASE("verify_table cross-checks small entries against the sieve") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const auto checks = verify_table(table, 4);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        CHECK(c.pass);
        CHECK(c.expected == c.actual);
    }
    CHECK(checks[0].n == 1);
    CHECK(checks[3].n == 4);

    CHECK_THROWS_AS(verify_table(table, 0), domain_error);
    // 10^9 exceeds the default oracle limit of 10^8
    CHECK_THROWS_AS(verify_table(table, 9), domain_error);
}

TEST_CASE("verify_table flags an entry the sieve disagrees with") {
    // 169 keeps the file monotone but is not pi(10^3)
    TempFile f("tmp_table_bad3.tsv", table_text(3, "169"));
    const PrimeCountTable bad = PrimeCountTable::load(f.path());
    const auto checks = verify_table(bad, 4);
    REQUIRE(checks.size() == 4);
    CHECK(checks[0].pass);
    CHECK(checks[1].pass);
    CHECK_FALSE(checks[2].pass);
    CHECK(checks[2].n == 3);
    CHECK(checks[2].expected == 169);
    CHECK(checks[2].actual == 168);
    CHECK(checks[3].pass);
}
