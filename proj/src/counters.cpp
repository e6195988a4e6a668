#include "bonselab/counters.hpp"

#include <mpfr.h>

#include <array>
#include <stdexcept>

namespace bonselab {

namespace {

constexpr std::array<int, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                              29, 31, 37, 41, 43, 47, 53, 59, 61,
                                              67, 71, 73, 79, 83, 89, 97};

// primes P with e^P < 2^63
constexpr std::array<int, 14> kJumpExponents = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

std::array<uint64_t, kJumpExponents.size()> compute_thresholds() {
    std::array<uint64_t, kJumpExponents.size()> out{};
    mpfr_t lo, hi;
    mpfr_init2(lo, 256);
    mpfr_init2(hi, 256);
    for (size_t i = 0; i < kJumpExponents.size(); ++i) {
        mpfr_set_ui(lo, kJumpExponents[i], MPFR_RNDD);
        mpfr_exp(lo, lo, MPFR_RNDD);
        mpfr_set_ui(hi, kJumpExponents[i], MPFR_RNDU);
        mpfr_exp(hi, hi, MPFR_RNDU);
        mpfr_ceil(lo, lo);
        mpfr_ceil(hi, hi);
        // e^P is irrational, so both directed roundings must agree on the ceiling
        if (!mpfr_equal_p(lo, hi))
            throw std::logic_error("pi(log n) jump threshold not certified");
        out[i] = mpfr_get_ui(lo, MPFR_RNDN);
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

const std::array<uint64_t, kJumpExponents.size()>& thresholds() {
    static const auto table = compute_thresholds();
    return table;
}

}  // namespace

int pi_small(double t) {
    if (t >= 100.0) throw std::domain_error("pi_small requires t < 100");
    int count = 0;
    for (int p : kSmallPrimes)
        if (p <= t)
            ++count;
        else
            break;
    return count;
}

std::span<const uint64_t> pi_log_jump_thresholds() {
    const auto& t = thresholds();
    return {t.data(), t.size()};
}

CountingCursor::CountingCursor(const SieveConfig& cfg)
    : int_stream_(40000, cfg), pi_stream_(40000, cfg) {}

CountingCursor CountingCursor::at(uint64_t n0, const SieveConfig& cfg) {
    if (n0 < 8) throw std::domain_error("counting cursor starts at n >= 8");
    CountingCursor c(cfg);
    c.n_ = n0;

    c.pi_n_ = 0;
    for (;;) {
        uint64_t p = c.int_stream_.next_prime();
        if (p > n0) {
            c.next_int_prime_ = p;
            break;
        }
        ++c.pi_n_;
    }
    c.pi_pi_n_ = 0;
    for (;;) {
        uint64_t p = c.pi_stream_.next_prime();
        if (p > c.pi_n_) {
            c.next_pi_prime_ = p;
            break;
        }
        ++c.pi_pi_n_;
    }
    const auto& jumps = thresholds();
    c.jump_idx_ = 0;
    while (c.jump_idx_ < jumps.size() && jumps[c.jump_idx_] <= n0) ++c.jump_idx_;
    c.pi_log_n_ = c.jump_idx_;
    return c;
}

void CountingCursor::advance() {
    ++n_;
    if (n_ == next_int_prime_) {
        ++pi_n_;
        next_int_prime_ = int_stream_.next_prime();
        if (pi_n_ == next_pi_prime_) {
            ++pi_pi_n_;
            next_pi_prime_ = pi_stream_.next_prime();
        }
    }
    const auto& jumps = thresholds();
    if (jump_idx_ < jumps.size() && jumps[jump_idx_] <= n_) {
        ++jump_idx_;
        ++pi_log_n_;
    }
}

}  // namespace bonselab
