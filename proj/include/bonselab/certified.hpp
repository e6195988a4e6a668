#pragma once

// Error-radius arithmetic. Every real quantity whose sign matters is carried
// as a double plus a rigorous absolute-error bound. Radius updates are biased
// upward by one ulp so no directed-rounding mode switch is needed.

#include <cmath>
#include <cstdint>

namespace bonselab {

enum class Sign { Positive, Negative, Indeterminate };

struct CertifiedReal {
    double value = 0.0;
    double radius = 0.0;  // exact quantity lies in [value - radius, value + radius]
};

inline double ulp_of(double x) {
    double a = std::fabs(x);
    return std::nextafter(a, HUGE_VAL) - a;
}

namespace detail {

// radius arithmetic: result is >= the exact sum/product
inline double radd(double a, double b) {
    double r = a + b;
    return r + ulp_of(r);
}
inline double rmul(double a, double b) {
    double r = a * b;
    return r + ulp_of(r);
}

// Knuth two-sum: a + b = result + err exactly
inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// exact when |a| >= |b|
inline double fast_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = (a - s) + b;
    return s;
}

}  // namespace detail

inline CertifiedReal cert_exact(double v) { return {v, 0.0}; }

// natural log of an integer >= 2; radius 2 ulp covers a <= 1 ulp libm routine
CertifiedReal cert_log(uint64_t p);

Sign cert_sign(const CertifiedReal& v);

CertifiedReal cert_add(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal cert_sub(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal cert_mul(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal cert_mul_uint(const CertifiedReal& a, uint64_t k);
CertifiedReal cert_neg(const CertifiedReal& a);

// Two-term floating-point expansion so hi + lo carries ~2x working precision.
// Summation error stays negligible; the radius is dominated by the per-term
// log radii, which is what makes a 4.4e7-term theta sum decide signs.
struct ThetaAccumulator {
    double hi = 0.0;
    double lo = 0.0;
    double radius = 0.0;
    uint64_t count = 0;

    void add(const CertifiedReal& term);
    CertifiedReal to_certified() const;
    double approx() const { return hi + lo; }
};

}  // namespace bonselab
