#pragma once

// Closed-form explicit estimates and threshold solvers: the pi/p_n/theta
// sandwich formulas, the effective lower bound for E_n(x), the fixed-point
// solvers for the unconditional and RH scan ceilings, and the closed-form /
// asymptotic Psi bounds.

#include <cstdint>
#include <optional>
#include <vector>

#include "bonselab/rational.hpp"

namespace bonselab {

struct EffectiveConstants {
    double c1 = 8.0;
    double c2 = 14.0;
    uint64_t n_floor = 3468;
    double c_rh = 0.039788735772973833942;  // 1/(8 pi)
};

struct PiBounds {
    std::optional<double> lower;  // t/log t, valid for t >= 17
    double upper;                 // (t/log t)(1 + 1/log t + 2.53816/log^2 t), t >= 2
};

PiBounds dusart_pi_bounds(double t);

// upper bound for p_n, valid for n >= 3468
double axler_pn_upper(uint64_t n);

// strict lower bound for theta(p_n), valid for n >= 2
double axler_theta_lower(uint64_t n);

// (x+2) n/log n - (c1 loglog n + c2) n/log^2 n, rounded downward
double effective_lower_bound(uint64_t n, const Rational& x,
                             const EffectiveConstants& c = {});

// monotone tail bound on alpha_n for n >= n_floor:
// alpha_n <= -2 + (c1 loglog n + c2)/log n, decreasing in n
double alpha_tail_bound(uint64_t n, const EffectiveConstants& c = {});

struct NUpperInfo {
    double y_star = 0.0;   // converged fixed point of y = (c1 log y + c2)/(x+2)
    bool fits = false;     // ceil(exp(y*)) representable in uint64
    uint64_t value = 0;    // valid when fits
};

NUpperInfo n_upper_info(const Rational& x, const EffectiveConstants& c = {});

// certified scan ceiling: E_n(x) > 0 for every n > n_upper(x).
// throws std::overflow_error when the ceiling exceeds uint64.
uint64_t n_upper(const Rational& x, const EffectiveConstants& c = {});

// ((c1+c2)/(x+2)) ^ (2 (c1+c2)/(x+2))
double closed_form_bound(const Rational& x, const EffectiveConstants& c = {});

// (c1/(x+2)) ^ (c1/(x+2))
double asymptotic_psi(const Rational& x, const EffectiveConstants& c = {});

struct RhResult {
    bool solved = false;
    double y_star = 0.0;
    bool fits = false;
    uint64_t n_rh = 0;  // ceil(exp(y_star)) when fits; ceil(exp(5)) when !solved
};

RhResult rh_n_upper(const Rational& x, const EffectiveConstants& c = {});

struct RhErrorRow {
    double n;
    double e_uncond;  // n loglog n / log^2 n
    double e_rh;      // sqrt(n) (log n)^(3/2)
    double ratio;
};

std::vector<RhErrorRow> rh_error_report(const std::vector<double>& n_values);

}  // namespace bonselab
