#include "bonselab/error_term.hpp"

#include <cmath>
#include <stdexcept>

namespace bonselab {

namespace {

// exact rational n - pi + pi/pilog (denominator is pi(log n), at most ~25)
Rational pi_ratio_coeff(const CountsView& c) {
    if (c.pi_log_n == 0) throw std::domain_error("pi(log n) = 0; scan floor is n = 8");
    int64_t whole = static_cast<int64_t>(c.n) - static_cast<int64_t>(c.pi_n);
    return Rational{whole, 1} +
           Rational::of(static_cast<int64_t>(c.pi_n), static_cast<int64_t>(c.pi_log_n));
}

}  // namespace

Rational k_exponent(const CountsView& counts, const Rational& x) {
    Rational c = pi_ratio_coeff(counts);
    return c - x * Rational{static_cast<int64_t>(counts.pi_pi_n), 1};
}

std::pair<CertifiedReal, CertifiedReal> affine_coeffs(const CountsView& counts,
                                                      const ThetaAccumulator& theta,
                                                      const CertifiedReal& log_p_next) {
    CertifiedReal c = to_certified(pi_ratio_coeff(counts));
    CertifiedReal a = cert_sub(theta.to_certified(), cert_mul(c, log_p_next));
    CertifiedReal b = cert_mul_uint(log_p_next, counts.pi_pi_n);
    return {a, b};
}

CertifiedReal e_n(const CertifiedReal& a, const CertifiedReal& b, const Rational& x) {
    return cert_add(a, cert_mul(b, to_certified(x)));
}

CertifiedReal e_n_direct(const CountsView& counts, const ThetaAccumulator& theta,
                         const CertifiedReal& log_p_next, const Rational& x) {
    CertifiedReal k = to_certified(k_exponent(counts, x));
    return cert_sub(theta.to_certified(), cert_mul(k, log_p_next));
}

std::pair<double, double> alpha_n(const CertifiedReal& a, const CertifiedReal& b) {
    if (!(b.value - b.radius > 0.0))
        throw std::domain_error("alpha_n requires b certified positive");
    double num_lo = -a.value - a.radius;
    double num_hi = -a.value + a.radius;
    double den_lo = b.value - b.radius;
    double den_hi = b.value + b.radius;

    if (num_lo == 0.0 && num_hi == 0.0) return {0.0, 0.0};

    double lo = num_lo / (num_lo >= 0.0 ? den_hi : den_lo);
    double hi = num_hi / (num_hi >= 0.0 ? den_lo : den_hi);
    lo = std::nextafter(lo, -HUGE_VAL);
    hi = std::nextafter(hi, HUGE_VAL);
    return {lo, hi};
}

}  // namespace bonselab
