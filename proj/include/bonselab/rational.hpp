#pragma once

// Exact rational parameter x. Decimal strings parse exactly ("0.1" -> 1/10)
// so that the discontinuous Psi(x) is evaluated at the number the user wrote.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bonselab/certified.hpp"

namespace bonselab {

struct Rational {
    int64_t num = 0;
    int64_t den = 1;  // reduced form, den > 0

    static Rational of(int64_t n, int64_t d);
    // accepts "-2", "0.1", "17/10"; anything else is a parse error
    static Rational parse(std::string_view s);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return {-num, den}; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const;  // "num/den"
};

double to_double(const Rational& r);            // nearest double
CertifiedReal to_certified(const Rational& r);  // rounded with rigorous radius

// nearest rational with denominator a power of two (doubles are rationals)
Rational rational_from_double(double v);

}  // namespace bonselab
