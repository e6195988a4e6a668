#include "bonselab/rational.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

namespace bonselab {

namespace {

using i128 = __int128;

int64_t checked_narrow(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduce(i128 n, i128 d, const char* what) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {checked_narrow(n, what), checked_narrow(d, what)};
}

}  // namespace

Rational Rational::of(int64_t n, int64_t d) { return reduce(n, d, "of"); }

Rational Rational::parse(std::string_view s) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("cannot parse '" + std::string(s) + "' as an exact rational");
    };
    if (s.empty()) throw bad();

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string nstr(s.substr(0, slash)), dstr(s.substr(slash + 1));
        if (nstr.empty() || dstr.empty()) throw bad();
        size_t pos = 0;
        int64_t n, d;
        try {
            n = std::stoll(nstr, &pos);
            if (pos != nstr.size()) throw bad();
            d = std::stoll(dstr, &pos);
            if (pos != dstr.size()) throw bad();
        } catch (const std::invalid_argument&) {
            throw bad();
        } catch (const std::out_of_range&) {
            throw std::overflow_error("rational literal out of range: " + std::string(s));
        }
        if (d == 0) throw std::domain_error("zero denominator in '" + std::string(s) + "'");
        return reduce(n, d, "parse");
    }

    // plain decimal: [+-]digits[.digits]
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    if (i >= s.size()) throw bad();
    i128 num = 0;
    i128 den = 1;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
        if (num > (i128(INT64_MAX)) || den > (i128(INT64_MAX)))
            throw std::overflow_error("rational literal out of range: " + std::string(s));
    }
    if (!seen_digit) throw bad();
    if (neg) num = -num;
    return reduce(num, den, "parse");
}

Rational Rational::operator+(const Rational& o) const {
    return reduce(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den, "add");
}

Rational Rational::operator-(const Rational& o) const {
    return reduce(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den, "sub");
}

Rational Rational::operator*(const Rational& o) const {
    return reduce(i128(num) * o.num, i128(den) * o.den, "mul");
}

bool Rational::operator<(const Rational& o) const {
    return i128(num) * o.den < i128(o.num) * den;
}

bool Rational::operator<=(const Rational& o) const {
    return i128(num) * o.den <= i128(o.num) * den;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

double to_double(const Rational& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

CertifiedReal to_certified(const Rational& r) {
    double v = to_double(r);
    // three roundings at most (num, den, divide)
    return {v, 3.0 * ulp_of(v)};
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite double");
    int exp = 0;
    double m = std::frexp(v, &exp);  // v = m * 2^exp, |m| in [0.5, 1)
    // scale mantissa to an integer (53 bits)
    i128 num = static_cast<i128>(std::ldexp(m, 53));
    int e2 = exp - 53;
    i128 den = 1;
    while (e2 > 0 && num <= i128(INT64_MAX) / 2) {
        num *= 2;
        --e2;
    }
    while (e2 < 0) {
        if (num % 2 == 0) {
            num /= 2;
        } else if (den <= i128(INT64_MAX) / 2) {
            den *= 2;
        } else {
            break;  // out of range; nearest representable
        }
        ++e2;
    }
    if (e2 != 0) throw std::overflow_error("double does not fit in 64-bit rational");
    return reduce(num, den, "from_double");
}

}  // namespace bonselab
