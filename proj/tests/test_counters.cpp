#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bonselab/counters.hpp"
#include "oracle.hpp"

using namespace bonselab;

TEST_CASE("pi_small") {
    CHECK(pi_small(2.079) == 1);
    CHECK(pi_small(1.9) == 0);
    CHECK(pi_small(17.611) == 7);
    CHECK(pi_small(2.0) == 1);
    CHECK(pi_small(97.0) == 25);
    CHECK(pi_small(99.9) == 25);
    CHECK_THROWS_AS(pi_small(100.0), std::domain_error);
}

TEST_CASE("jump thresholds are the certified ceilings of e^P") {
    auto t = pi_log_jump_thresholds();
    REQUIRE(t.size() == 14);
    CHECK(t[0] == 8);
    CHECK(t[1] == 21);
    CHECK(t[2] == 149);
    CHECK(t[3] == 1097);
    CHECK(t[4] == 59875);
    CHECK(t[5] == 442414);
    CHECK(t[6] == 24154953);
    CHECK(t[7] == 178482301);
    CHECK(t[8] == 9744803447ull);
    CHECK(t[13] == 4727839468229346562ull);
}

TEST_CASE("counter examples at small n") {
    auto c = CountingCursor::at(8);
    CHECK(c.pi_n() == 4);
    CHECK(c.pi_log_n() == 1);
    CHECK(c.pi_pi_n() == 2);

    c.advance();  // 9
    c.advance();  // 10
    CHECK(c.n() == 10);
    CHECK(c.pi_n() == 4);
    CHECK(c.pi_log_n() == 1);
    CHECK(c.pi_pi_n() == 2);

    c.advance();  // 11
    CHECK(c.pi_n() == 5);
    CHECK(c.pi_log_n() == 1);
    CHECK(c.pi_pi_n() == 3);
}

TEST_CASE("pi(log n) jumps exactly at the thresholds") {
    auto c = CountingCursor::at(19);
    CHECK(c.pi_log_n() == 1);
    c.advance();  // 20
    CHECK(c.pi_log_n() == 1);
    c.advance();  // 21 = ceil(e^3)
    CHECK(c.pi_log_n() == 2);

    auto d = CountingCursor::at(148);
    CHECK(d.pi_log_n() == 2);
    d.advance();  // 149 = ceil(e^5)
    CHECK(d.pi_log_n() == 3);

    auto e = CountingCursor::at(1096);
    CHECK(e.pi_log_n() == 3);
    e.advance();  // 1097 = ceil(e^7)
    CHECK(e.pi_log_n() == 4);
}

TEST_CASE("incremental counters match a brute-force recount to 1e5") {
    auto c = CountingCursor::at(8);
    const auto& primes = oracle::primes_at_least(11000);  // covers pi(1e5)
    size_t pi = 4;                                        // pi(8)
    size_t pipi = 2;
    for (uint64_t n = 9; n <= 100'000; ++n) {
        c.advance();
        while (pi < primes.size() && primes[pi] <= n) ++pi;
        REQUIRE(c.pi_n() == pi);
        while (pipi < primes.size() && primes[pipi] <= pi) ++pipi;
        REQUIRE(c.pi_pi_n() == pipi);
        if ((n & 1023) == 0) REQUIRE(c.pi_log_n() == oracle::pi_log(n));
    }
    CHECK(c.n() == 100'000);
    CHECK(c.pi_n() == 9592);  // pi(1e5)
}

TEST_CASE("cursor can start mid-range") {
    auto c = CountingCursor::at(59874);
    CHECK(c.pi_log_n() == 4);
    CHECK(c.pi_n() == oracle::pi_of(59874));
    c.advance();
    CHECK(c.pi_log_n() == 5);
    CHECK_THROWS_AS(CountingCursor::at(7), std::domain_error);
}
