#include "bonselab/highprec.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace bonselab {

struct HpReal::Impl {
    mpfr_t v;
    Impl() { mpfr_init2(v, kPrecision); }
    ~Impl() { mpfr_clear(v); }
};

struct HpRawAccess {
    static mpfr_ptr get(HpReal& r) { return r.impl_->v; }
    static mpfr_srcptr get(const HpReal& r) { return r.impl_->v; }
};

namespace {
mpfr_ptr raw(HpReal& r) { return HpRawAccess::get(r); }
}  // namespace

HpReal::HpReal() : impl_(std::make_unique<Impl>()) { mpfr_set_zero(impl_->v, 1); }
HpReal::HpReal(double v) : HpReal() { mpfr_set_d(impl_->v, v, MPFR_RNDN); }
HpReal::HpReal(uint64_t v) : HpReal() { mpfr_set_ui(impl_->v, v, MPFR_RNDN); }
HpReal::HpReal(int64_t v) : HpReal() { mpfr_set_si(impl_->v, v, MPFR_RNDN); }
HpReal::HpReal(const HpReal& o) : HpReal() { mpfr_set(impl_->v, o.impl_->v, MPFR_RNDN); }
HpReal::HpReal(HpReal&& o) noexcept = default;

HpReal& HpReal::operator=(const HpReal& o) {
    if (this != &o) mpfr_set(impl_->v, o.impl_->v, MPFR_RNDN);
    return *this;
}
HpReal& HpReal::operator=(HpReal&& o) noexcept = default;
HpReal::~HpReal() = default;

HpReal HpReal::from_string(const std::string& digits) {
    HpReal r;
    int rc = mpfr_set_str(r.impl_->v, digits.c_str(), 10, MPFR_RNDN);
    if (rc != 0 && !mpfr_number_p(r.impl_->v))
        throw std::invalid_argument("bad high-precision literal: " + digits);
    return r;
}

HpReal HpReal::log_of(uint64_t v) {
    HpReal r(v);
    mpfr_log(r.impl_->v, r.impl_->v, MPFR_RNDN);
    return r;
}

HpReal& HpReal::operator+=(const HpReal& o) {
    mpfr_add(impl_->v, impl_->v, o.impl_->v, MPFR_RNDN);
    return *this;
}
HpReal& HpReal::operator-=(const HpReal& o) {
    mpfr_sub(impl_->v, impl_->v, o.impl_->v, MPFR_RNDN);
    return *this;
}
HpReal& HpReal::operator*=(const HpReal& o) {
    mpfr_mul(impl_->v, impl_->v, o.impl_->v, MPFR_RNDN);
    return *this;
}
HpReal& HpReal::operator/=(const HpReal& o) {
    mpfr_div(impl_->v, impl_->v, o.impl_->v, MPFR_RNDN);
    return *this;
}
HpReal HpReal::operator-() const {
    HpReal r(*this);
    mpfr_neg(r.impl_->v, r.impl_->v, MPFR_RNDN);
    return r;
}

int HpReal::sign() const { return mpfr_sgn(impl_->v); }
double HpReal::to_double() const { return mpfr_get_d(impl_->v, MPFR_RNDN); }

std::string HpReal::to_string(int significant_digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Re", significant_digits, impl_->v) < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// -- HpTheta ----------------------------------------------------------------

struct HpTheta::Impl {
    HpReal sum;
    mpz_t pending;  // exact product of buffered primes
    size_t pending_bits = 0;
    uint64_t count = 0;
    uint64_t flushes = 0;

    Impl() { mpz_init_set_ui(pending, 1); }
    ~Impl() { mpz_clear(pending); }
    Impl(const Impl& o)
        : sum(o.sum), pending_bits(o.pending_bits), count(o.count), flushes(o.flushes) {
        mpz_init_set(pending, o.pending);
    }
};

namespace {
constexpr size_t kFlushBits = 1900;  // keep the integer product near 2k bits
}

HpTheta::HpTheta() : impl_(std::make_unique<Impl>()) {}
HpTheta::HpTheta(const HpTheta& o) : impl_(std::make_unique<Impl>(*o.impl_)) {}
HpTheta& HpTheta::operator=(const HpTheta& o) {
    if (this != &o) impl_ = std::make_unique<Impl>(*o.impl_);
    return *this;
}
HpTheta::HpTheta(HpTheta&&) noexcept = default;
HpTheta& HpTheta::operator=(HpTheta&&) noexcept = default;
HpTheta::~HpTheta() = default;

void HpTheta::add_prime(uint64_t p) {
    mpz_mul_ui(impl_->pending, impl_->pending, p);
    impl_->pending_bits += 64 - size_t(__builtin_clzll(p | 1));
    ++impl_->count;
    if (impl_->pending_bits >= kFlushBits) flush();
}

void HpTheta::flush() {
    if (mpz_cmp_ui(impl_->pending, 1) == 0) return;
    mpfr_t t;
    mpfr_init2(t, HpReal::kPrecision);
    mpfr_set_z(t, impl_->pending, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_add(raw(impl_->sum), raw(impl_->sum), t, MPFR_RNDN);
    mpfr_clear(t);
    mpz_set_ui(impl_->pending, 1);
    impl_->pending_bits = 0;
    ++impl_->flushes;
}

const HpReal& HpTheta::value() const { return impl_->sum; }
uint64_t HpTheta::count() const { return impl_->count; }

double HpTheta::error_bound() const {
    // every flushed log and every addition is correctly rounded at 192 bits
    double mag = std::fabs(impl_->sum.to_double()) + 1.0;
    double ops = static_cast<double>(2 * impl_->flushes + 16);
    return ops * mag * std::ldexp(1.0, -190);
}

void HpTheta::restore(const std::string& digits, uint64_t count) {
    impl_->sum = HpReal::from_string(digits);
    mpz_set_ui(impl_->pending, 1);
    impl_->pending_bits = 0;
    impl_->count = count;
    // conservative: as if the whole history had been flushed term by term,
    // plus the decimal round-trip
    impl_->flushes = count + 4;
}

std::string HpTheta::digits() const { return impl_->sum.to_string(); }

// -- evaluation --------------------------------------------------------------

HpSignResult hp_e_sign(const HpTheta& theta, const CountsView& counts, const Rational& x,
                       uint64_t p_next) {
    HpReal L = HpReal::log_of(p_next);
    HpReal c = HpReal(counts.n) - HpReal(counts.pi_n) +
               HpReal(counts.pi_n) / HpReal(counts.pi_log_n);
    HpReal k = c - HpReal(x.num) / HpReal(uint64_t(x.den)) * HpReal(counts.pi_pi_n);
    HpReal kl = k * L;
    HpReal e = theta.value() - kl;

    double v = e.to_double();
    double mag = std::fabs(kl.to_double()) + std::fabs(theta.value().to_double()) + 1.0;
    double err = theta.error_bound() + 64.0 * mag * std::ldexp(1.0, -190);

    HpSignResult r;
    r.value = v;
    r.margin = std::fabs(v) - err;
    if (v > 0 && r.margin > 0)
        r.sign = Sign::Positive;
    else if (v < 0 && r.margin > 0)
        r.sign = Sign::Negative;
    else
        r.sign = Sign::Indeterminate;
    return r;
}

HpReal hp_alpha(const HpTheta& theta, const CountsView& counts, uint64_t p_next) {
    HpReal L = HpReal::log_of(p_next);
    HpReal c = HpReal(counts.n) - HpReal(counts.pi_n) +
               HpReal(counts.pi_n) / HpReal(counts.pi_log_n);
    return (c * L - theta.value()) / (HpReal(counts.pi_pi_n) * L);
}

HpTheta hp_theta_up_to(uint64_t n, const SieveConfig& cfg) {
    PrimeCursor cursor(sieve_limit_for(std::max<uint64_t>(n, 8)), cfg);
    HpTheta t;
    for (uint64_t i = 0; i < n; ++i) t.add_prime(cursor.next_prime());
    t.flush();
    return t;
}

}  // namespace bonselab
