#include "catch_amalgamated.hpp"

#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "whitney/fseq.hpp"

using whitney::BigInt;
using whitney::FSequence;

TEST_CASE("built-in values", "[fseq]")
{
    CHECK(FSequence::fibonacci().value(6) == 8);
    CHECK(FSequence::naturals().value(1) == 1);
    CHECK(FSequence::even1().value(4) == 6);

    const std::vector<int> even1{1, 2, 4, 6, 8, 10};
    const std::vector<int> div31{1, 3, 6, 9, 12, 15};
    const std::vector<int> odd{1, 3, 5, 7, 9, 11};
    for (int s = 1; s <= 6; ++s) {
        CHECK(FSequence::even1().value(s) == even1[s - 1]);
        CHECK(FSequence::div31().value(s) == div31[s - 1]);
        CHECK(FSequence::odd().value(s) == odd[s - 1]);
    }
}

TEST_CASE("index below one is out of domain", "[fseq]")
{
    for (const auto& seq : {FSequence::naturals(), FSequence::fibonacci(), FSequence::div31()}) {
        CHECK_THROWS_AS(seq.value(0), whitney::index_out_of_domain);
        CHECK_THROWS_AS(seq.value(-3), whitney::index_out_of_domain);
    }
}

TEST_CASE("fast-doubling fibonacci matches iteration", "[fseq]")
{
    const auto fib = FSequence::fibonacci();
    for (int s = 1; s <= 500; ++s) REQUIRE(fib.value(s) == oracle::fibonacci(s));
    CHECK(fib.value(10000) == oracle::fibonacci(10000));
}

TEST_CASE("built-ins are positive and deterministic up to 10^4", "[fseq][property]")
{
    for (const auto& seq : {FSequence::naturals(), FSequence::odd(), FSequence::even1(), FSequence::div31(),
                            FSequence::fibonacci()}) {
        INFO(seq.id());
        for (std::int64_t s = 1; s <= 10000; s += (seq.rule() == FSequence::Rule::fibonacci ? 7 : 1)) {
            const BigInt a = seq.value(s);
            REQUIRE(a >= 1);
            REQUIRE(a == seq.value(s));
        }
    }
}

TEST_CASE("gcd-morphic sequences", "[fseq]")
{
    CHECK(whitney::is_gcd_morphic(FSequence::fibonacci(), 50).holds);
    CHECK(whitney::is_gcd_morphic(FSequence::naturals(), 50).holds);
    CHECK(whitney::is_gcd_morphic(FSequence::fibonacci(), 200).holds);
    CHECK(whitney::is_gcd_morphic(FSequence::naturals(), 200).holds);
    CHECK_THROWS_AS(whitney::is_gcd_morphic(FSequence::naturals(), 1), whitney::invalid_bounds);
}

TEST_CASE("gcd-morphic failure reports the smallest witness", "[fseq]")
{
    const auto even1 = FSequence::even1();
    const auto report = whitney::is_gcd_morphic(even1, 10);
    REQUIRE_FALSE(report.holds);
    REQUIRE(report.witness);
    // (2,3): GCD[2,4] = 2 but F_1 = 1. It precedes (3,4), GCD[4,6] = 2 vs F_1.
    CHECK(report.witness->n == 2);
    CHECK(report.witness->m == 3);
    CHECK(report.witness->gcd_of_values == 2);
    CHECK(report.witness->value_at_gcd == 1);

    const auto& w = *report.witness;
    CHECK(gcd(even1.value(w.n), even1.value(w.m)) == w.gcd_of_values);
    CHECK(even1.value(std::gcd(w.n, w.m)) == w.value_at_gcd);
    CHECK(gcd(even1.value(3), even1.value(4)) != even1.value(1));

    for (const auto& seq : {FSequence::odd(), FSequence::div31()}) {
        const auto r = whitney::is_gcd_morphic(seq, 20);
        REQUIRE_FALSE(r.holds);
        CHECK(gcd(seq.value(r.witness->n), seq.value(r.witness->m)) !=
              seq.value(std::gcd(r.witness->n, r.witness->m)));
    }
}

TEST_CASE("custom sequences from text", "[fseq]")
{
    std::istringstream in("1\n1\n2\n3\r\n5\n\n\n");
    const auto seq = FSequence::parse_text("custom", in);
    CHECK(seq.bound() == 5);
    CHECK(seq.value(5) == 5);
    CHECK_THROWS_AS(seq.value(6), whitney::index_out_of_domain);
    CHECK(whitney::is_gcd_morphic(seq, 5).holds);

    std::istringstream zero("1\n0\n");
    CHECK_THROWS_AS(FSequence::parse_text("z", zero), whitney::sequence_format_error);
    std::istringstream junk("1\n2x\n");
    CHECK_THROWS_AS(FSequence::parse_text("j", junk), whitney::sequence_format_error);
    std::istringstream gap("1\n\n2\n");
    CHECK_THROWS_AS(FSequence::parse_text("g", gap), whitney::sequence_format_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(FSequence::parse_text("e", empty), whitney::sequence_format_error);

    CHECK_THROWS_AS(FSequence::by_name("primes"), whitney::sequence_format_error);
    CHECK_THROWS_AS(FSequence::by_name("file:/nonexistent/seq.txt"), whitney::sequence_format_error);
}
