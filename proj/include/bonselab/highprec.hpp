#pragma once

// 192-bit software floating point used on the escalation path: when the
// working-precision enclosure of E_n(x) straddles zero, the sign is settled
// here. Prime logs are batched through exact integer products so a theta
// snapshot costs one big log per ~60 primes instead of one per prime.

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "bonselab/certified.hpp"
#include "bonselab/counters.hpp"
#include "bonselab/rational.hpp"

namespace bonselab {

class HpReal {
public:
    static constexpr long kPrecision = 192;

    HpReal();
    explicit HpReal(double v);
    explicit HpReal(uint64_t v);
    explicit HpReal(int64_t v);
    HpReal(const HpReal& o);
    HpReal(HpReal&& o) noexcept;
    HpReal& operator=(const HpReal& o);
    HpReal& operator=(HpReal&& o) noexcept;
    ~HpReal();

    static HpReal from_string(const std::string& digits);
    static HpReal log_of(uint64_t v);

    HpReal& operator+=(const HpReal& o);
    HpReal& operator-=(const HpReal& o);
    HpReal& operator*=(const HpReal& o);
    HpReal& operator/=(const HpReal& o);
    HpReal operator-() const;

    friend HpReal operator+(HpReal a, const HpReal& b) { return a += b; }
    friend HpReal operator-(HpReal a, const HpReal& b) { return a -= b; }
    friend HpReal operator*(HpReal a, const HpReal& b) { return a *= b; }
    friend HpReal operator/(HpReal a, const HpReal& b) { return a /= b; }

    int sign() const;  // -1, 0, +1
    double to_double() const;
    std::string to_string(int significant_digits = 62) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    friend struct HpRawAccess;  // internal: raw mpfr handle for batched updates
};

// Running high-precision theta over a prime stream. add_prime buffers the
// prime into an exact integer product; flush takes its log. error_bound is a
// rigorous bound on |value() - sum of exact logs| (it sits ~40 orders of
// magnitude below anything a sign decision needs).
class HpTheta {
public:
    HpTheta();
    HpTheta(const HpTheta& o);
    HpTheta& operator=(const HpTheta& o);
    HpTheta(HpTheta&&) noexcept;
    HpTheta& operator=(HpTheta&&) noexcept;
    ~HpTheta();

    void add_prime(uint64_t p);
    void flush();
    const HpReal& value() const;  // flush first
    uint64_t count() const;
    double error_bound() const;

    // restore from a serialized snapshot (decimal digits + term count);
    // the error bound is reconstructed conservatively
    void restore(const std::string& digits, uint64_t count);
    std::string digits() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct HpSignResult {
    Sign sign = Sign::Indeterminate;
    double value = 0.0;   // E_n(x) at 192-bit precision
    double margin = 0.0;  // |value| minus the rigorous evaluation error
};

// sign of E_n(x) = theta - (n - pi + pi/pilog - x pipi) * log p_next
HpSignResult hp_e_sign(const HpTheta& theta, const CountsView& counts, const Rational& x,
                       uint64_t p_next);

// alpha_n to high precision from exact inputs (theta must hold theta(p_n))
HpReal hp_alpha(const HpTheta& theta, const CountsView& counts, uint64_t p_next);

// theta(p_n) computed from scratch; meant for small n (tests, tail refinement)
HpTheta hp_theta_up_to(uint64_t n, const SieveConfig& cfg = {});

}  // namespace bonselab
