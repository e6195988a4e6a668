#include "bonselab/sieve.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "bonselab/bounds.hpp"

namespace bonselab {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

std::shared_ptr<const BasePrimes> BasePrimes::up_to(uint64_t limit) {
    auto bp = std::make_shared<BasePrimes>();
    bp->limit_ = limit;
    if (limit < 2) return bp;
    std::vector<uint8_t> mark(limit + 1, 1);
    mark[0] = mark[1] = 0;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (uint64_t i = 2; i <= limit; ++i)
        if (mark[i]) bp->primes_.push_back(static_cast<uint32_t>(i));
    return bp;
}

PrimeCursor::PrimeCursor(uint64_t initial_limit, SieveConfig cfg) : cfg_(cfg) {
    if (cfg_.segment_numbers < 128) cfg_.segment_numbers = 128;
    cfg_.segment_numbers &= ~uint64_t(127);  // whole words of odd flags
    ensure_limit(std::max<uint64_t>(initial_limit, 1000));
}

void PrimeCursor::check_budget(uint64_t new_limit) const {
    uint64_t root = isqrt_u64(new_limit) + 1;
    // pi(root) < 1.3 root/log root for root >= 17
    double approx_base = root < 17 ? 16.0 : 1.3 * double(root) / std::log(double(root));
    uint64_t bytes = static_cast<uint64_t>(approx_base) * sizeof(uint32_t) +
                     cfg_.segment_numbers / 2 / 8 + (root + 1);
    if (bytes > cfg_.memory_budget_bytes)
        throw ResourceExhausted("sieving to " + std::to_string(new_limit) + " needs ~" +
                                std::to_string(bytes) + " bytes, budget is " +
                                std::to_string(cfg_.memory_budget_bytes));
}

void PrimeCursor::ensure_limit(uint64_t value_needed) {
    if (value_needed <= limit_) return;
    uint64_t new_limit = std::max(value_needed, limit_ + limit_ / 2);
    check_budget(new_limit);
    base_ = BasePrimes::up_to(isqrt_u64(new_limit) + 1);
    limit_ = new_limit;
}

void PrimeCursor::load_window(uint64_t base) {
    ensure_limit(base + cfg_.segment_numbers);
    window_base_ = base;
    window_span_ = cfg_.segment_numbers;
    uint64_t bits = window_span_ / 2;
    words_.assign(bits / 64, ~uint64_t(0));

    if (base == 0) words_[0] &= ~uint64_t(1);  // 1 is not prime

    uint64_t top = base + window_span_;
    for (uint32_t p : base_->primes()) {
        if (p == 2) continue;
        uint64_t pp = uint64_t(p) * p;
        if (pp >= top) break;
        uint64_t start = pp;
        if (start < base) {
            uint64_t q = (base + p - 1) / p;
            start = q * p;
            if ((start & 1) == 0) start += p;  // odd multiples only
        }
        for (uint64_t v = start; v < top; v += 2 * uint64_t(p)) {
            uint64_t j = (v - base) >> 1;
            words_[j >> 6] &= ~(uint64_t(1) << (j & 63));
        }
    }
    scan_word_ = 0;
    pending_ = words_.empty() ? 0 : words_[0];
    window_loaded_ = true;
}

uint64_t PrimeCursor::next_prime() {
    if (!emitted_two_) {
        emitted_two_ = true;
        next_index_ = 2;
        return 2;
    }
    if (!window_loaded_) load_window(0);
    for (;;) {
        while (pending_ == 0) {
            ++scan_word_;
            if (scan_word_ >= words_.size()) {
                load_window(window_base_ + window_span_);
                continue;
            }
            pending_ = words_[scan_word_];
        }
        int bit = std::countr_zero(pending_);
        pending_ &= pending_ - 1;
        uint64_t v = window_base_ + 2 * (64 * scan_word_ + uint64_t(bit)) + 1;
        if (v < 3) continue;  // skips the unmarked slot for 1 when base == 0
        ++next_index_;
        return v;
    }
}

void PrimeCursor::reset_to_start() {
    next_index_ = 1;
    emitted_two_ = false;
    window_loaded_ = false;
    scan_word_ = 0;
    pending_ = 0;
}

void PrimeCursor::skip_to_index(uint64_t index) {
    if (index == 0) throw std::domain_error("prime indices are 1-based");
    if (index < next_index_) reset_to_start();
    if (index == 1) return;
    if (!emitted_two_) {
        emitted_two_ = true;
        next_index_ = 2;
        if (index == 2) return;
    }
    if (!window_loaded_) load_window(0);
    // skip whole windows while the remaining bits keep us short of index
    for (;;) {
        uint64_t remaining = std::popcount(pending_);
        for (uint64_t w = scan_word_ + 1; w < words_.size(); ++w)
            remaining += std::popcount(words_[w]);
        if (next_index_ + remaining >= index) break;
        next_index_ += remaining;
        load_window(window_base_ + window_span_);
    }
    while (next_index_ < index) (void)next_prime();
}

uint64_t sieve_limit_for(uint64_t n_max) {
    if (n_max < 3468) return 40000;
    double v = axler_pn_upper(n_max + 1) * 1.01;
    return static_cast<uint64_t>(std::ceil(v));
}

}  // namespace bonselab
