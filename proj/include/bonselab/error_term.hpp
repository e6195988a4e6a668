#pragma once

// k(n,x), the affine decomposition E_n(x) = a_n + b_n x, and the positivity
// threshold alpha_n = -a_n/b_n with certified enclosures. k(n,x) is kept as
// an exact rational until the multiplication by log p_{n+1}, so the only
// error sources are theta and the logs.

#include <cstdint>
#include <utility>

#include "bonselab/certified.hpp"
#include "bonselab/counters.hpp"
#include "bonselab/rational.hpp"

namespace bonselab {

struct AlphaRecord {
    uint64_t n = 0;
    CertifiedReal a;
    CertifiedReal b;
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
};

// n - pi(n) + pi(n)/pi(log n) - x pi(pi(n)), exact
Rational k_exponent(const CountsView& counts, const Rational& x);

// a = theta(p_n) - (n - pi + pi/pilog) log p_{n+1},  b = pi(pi(n)) log p_{n+1}
std::pair<CertifiedReal, CertifiedReal> affine_coeffs(const CountsView& counts,
                                                      const ThetaAccumulator& theta,
                                                      const CertifiedReal& log_p_next);

// E_n(x) = a + b x
CertifiedReal e_n(const CertifiedReal& a, const CertifiedReal& b, const Rational& x);

// direct route theta - k(n,x) log p_{n+1}; used to cross-check the affine one
CertifiedReal e_n_direct(const CountsView& counts, const ThetaAccumulator& theta,
                         const CertifiedReal& log_p_next, const Rational& x);

// enclosure of -a/b by outward-rounded endpoint division; requires b
// certified positive
std::pair<double, double> alpha_n(const CertifiedReal& a, const CertifiedReal& b);

}  // namespace bonselab
