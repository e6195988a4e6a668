#include "bonselab/certified.hpp"

namespace bonselab {

using detail::fast_two_sum;
using detail::radd;
using detail::rmul;
using detail::two_sum;

CertifiedReal cert_log(uint64_t p) {
    double v = std::log(static_cast<double>(p));
    return {v, 2.0 * ulp_of(v)};
}

Sign cert_sign(const CertifiedReal& v) {
    if (v.value - v.radius > 0.0) return Sign::Positive;
    if (v.value + v.radius < 0.0) return Sign::Negative;
    return Sign::Indeterminate;
}

CertifiedReal cert_add(const CertifiedReal& a, const CertifiedReal& b) {
    double v = a.value + b.value;
    double r = radd(radd(a.radius, b.radius), 0.5 * ulp_of(v));
    return {v, r};
}

CertifiedReal cert_sub(const CertifiedReal& a, const CertifiedReal& b) {
    double v = a.value - b.value;
    double r = radd(radd(a.radius, b.radius), 0.5 * ulp_of(v));
    return {v, r};
}

CertifiedReal cert_mul(const CertifiedReal& a, const CertifiedReal& b) {
    double v = a.value * b.value;
    // |A*B - v| <= |a|rb + |b|ra + ra*rb + rounding
    double r = rmul(std::fabs(a.value) + a.radius, b.radius);
    r = radd(r, rmul(std::fabs(b.value), a.radius));
    r = radd(r, 0.5 * ulp_of(v));
    return {v, r};
}

CertifiedReal cert_mul_uint(const CertifiedReal& a, uint64_t k) {
    double kd = static_cast<double>(k);
    double v = a.value * kd;
    double r = rmul(a.radius, kd);
    r = radd(r, 0.5 * ulp_of(v));
    if (k > (uint64_t(1) << 53)) r = radd(r, rmul(std::fabs(a.value) + a.radius, ulp_of(kd)));
    return {v, r};
}

CertifiedReal cert_neg(const CertifiedReal& a) { return {-a.value, a.radius}; }

void ThetaAccumulator::add(const CertifiedReal& term) {
    double e1;
    double t1 = two_sum(hi, term.value, e1);
    double e2 = lo + e1;  // the only rounding in the update
    double norm_err = 0.5 * ulp_of(e2);
    hi = fast_two_sum(t1, e2, lo);
    radius = radd(radius, radd(term.radius, norm_err));
    ++count;
}

CertifiedReal ThetaAccumulator::to_certified() const {
    double v = hi + lo;
    return {v, radd(radius, 0.5 * ulp_of(v))};
}

}  // namespace bonselab
