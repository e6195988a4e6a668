#pragma once

// Segmented sieve of Eratosthenes with independent restartable cursors.
// Odd-only bitmaps over a fixed window (default 2^20 numbers = 64 KiB of
// flags, sized for L2); base primes up to sqrt(limit) are shared read-only.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace bonselab {

struct SieveConfig {
    uint64_t segment_numbers = uint64_t(1) << 20;        // window span in integers
    uint64_t memory_budget_bytes = uint64_t(512) << 20;  // whole-process sieve budget
};

class ResourceExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BasePrimes {
public:
    static std::shared_ptr<const BasePrimes> up_to(uint64_t limit);
    std::span<const uint32_t> primes() const { return primes_; }
    uint64_t limit() const { return limit_; }

private:
    std::vector<uint32_t> primes_;
    uint64_t limit_ = 0;
};

class PrimeCursor {
public:
    explicit PrimeCursor(uint64_t initial_limit = 40000, SieveConfig cfg = {});

    // returns p_k for k = peek_index(), then advances
    uint64_t next_prime();

    // 1-based index of the prime the next call will emit
    uint64_t peek_index() const { return next_index_; }

    // position the cursor so that next_prime() returns p_index;
    // forward skips count whole windows by popcount
    void skip_to_index(uint64_t index);

    uint64_t current_limit() const { return limit_; }

private:
    void ensure_limit(uint64_t value_needed);
    void load_window(uint64_t base);
    void check_budget(uint64_t new_limit) const;
    void reset_to_start();

    SieveConfig cfg_;
    std::shared_ptr<const BasePrimes> base_;
    std::vector<uint64_t> words_;  // bit j <=> window_base_ + 2j + 1 is unmarked
    uint64_t limit_ = 0;
    uint64_t window_base_ = 0;
    uint64_t window_span_ = 0;
    bool window_loaded_ = false;
    uint64_t next_index_ = 1;
    uint64_t scan_word_ = 0;  // scan position within the window
    uint64_t pending_ = 0;    // remaining bits of words_[scan_word_]
    bool emitted_two_ = false;
};

// L >= p_{n_max + 1}, from the explicit n-th prime upper bound with a 1%
// safety margin; fixed floor of 40000 below the bound's validity range
uint64_t sieve_limit_for(uint64_t n_max);

}  // namespace bonselab
