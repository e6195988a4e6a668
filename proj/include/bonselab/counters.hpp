#pragma once

// Incremental maintenance of pi(n), pi(log n) and pi(pi(n)) as n advances
// by 1. pi(log n) uses the real natural logarithm: it increments exactly at
// n = ceil(e^P) for prime P, and those integer thresholds are certified once
// at startup with directed-rounding high-precision exponentials.

#include <cstdint>
#include <span>

#include "bonselab/sieve.hpp"

namespace bonselab {

struct CountsView {
    uint64_t n = 0;
    uint64_t pi_n = 0;
    uint64_t pi_log_n = 0;
    uint64_t pi_pi_n = 0;
};

// exact count of primes <= t from the fixed table {2, ..., 97}; t < 100
int pi_small(double t);

// ceil(e^P) for primes P with e^P < 2^63, ascending
std::span<const uint64_t> pi_log_jump_thresholds();

class CountingCursor {
public:
    // exact counters at n0 (n0 >= 8), built by walking a prime stream
    static CountingCursor at(uint64_t n0, const SieveConfig& cfg = {});

    void advance();  // n -> n+1

    uint64_t n() const { return n_; }
    uint64_t pi_n() const { return pi_n_; }
    uint64_t pi_log_n() const { return pi_log_n_; }
    uint64_t pi_pi_n() const { return pi_pi_n_; }
    CountsView view() const { return {n_, pi_n_, pi_log_n_, pi_pi_n_}; }

private:
    CountingCursor(const SieveConfig& cfg);

    uint64_t n_ = 0, pi_n_ = 0, pi_log_n_ = 0, pi_pi_n_ = 0;
    PrimeCursor int_stream_;      // supplies the next prime > n
    PrimeCursor pi_stream_;       // supplies the next prime > pi(n)
    uint64_t next_int_prime_ = 0;
    uint64_t next_pi_prime_ = 0;
    size_t jump_idx_ = 0;  // thresholds <= n already crossed
};

}  // namespace bonselab
