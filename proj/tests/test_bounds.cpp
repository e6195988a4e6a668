#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bonselab/bounds.hpp"
#include "bonselab/scan.hpp"
#include "oracle.hpp"

using namespace bonselab;

TEST_CASE("dusart sandwich, hand points") {
    auto b100 = dusart_pi_bounds(100.0);
    REQUIRE(b100.lower.has_value());
    CHECK(*b100.lower == doctest::Approx(21.7147).epsilon(1e-4));
    CHECK(b100.upper == doctest::Approx(29.0289).epsilon(1e-4));
    CHECK(*b100.lower <= 25.0);
    CHECK(25.0 <= b100.upper);

    auto b17 = dusart_pi_bounds(17.0);
    REQUIRE(b17.lower.has_value());
    CHECK(*b17.lower == doctest::Approx(6.0005).epsilon(1e-3));
    CHECK(*b17.lower <= 7.0);

    auto b2 = dusart_pi_bounds(2.0);
    CHECK(!b2.lower.has_value());
    CHECK(b2.upper > 1.0);

    CHECK_THROWS_AS(dusart_pi_bounds(1.9), std::domain_error);
}

TEST_CASE("dusart sandwich against exact pi on the full grid to 1e7") {
    PrimeCursor cursor(10'001'000);
    uint64_t next_p = cursor.next_prime();
    uint64_t pi = 0;
    uint64_t violations = 0;
    for (uint64_t t = 2; t <= 10'000'000; ++t) {
        if (t == next_p) {
            ++pi;
            next_p = cursor.next_prime();
        }
        auto b = dusart_pi_bounds(static_cast<double>(t));
        double pid = static_cast<double>(pi);
        if (pid > b.upper || (b.lower && *b.lower > pid)) ++violations;
    }
    CHECK(violations == 0);
    CHECK(pi == 664'579);  // pi(1e7)
}

TEST_CASE("axler bounds against exact sieve data") {
    CHECK_THROWS_AS(axler_pn_upper(3467), std::domain_error);
    CHECK(axler_pn_upper(3468) >= 32327.0);
    CHECK(axler_pn_upper(100'000) >= 1'299'709.0);
    CHECK(axler_pn_upper(1'000'000) >= 15'485'863.0);

    CHECK_THROWS_AS(axler_theta_lower(1), std::domain_error);
    CHECK(axler_theta_lower(2) < std::log(6.0));
    CHECK(axler_theta_lower(10) == doctest::Approx(9.4064).epsilon(1e-4));
    CHECK(axler_theta_lower(10) < 22.5903945);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<uint64_t> d(3468, 1'000'000);
    std::vector<uint64_t> ns;
    for (int i = 0; i < 200; ++i) ns.push_back(d(rng));
    std::sort(ns.begin(), ns.end());
    auto thetas = oracle::theta_first_many(ns);
    for (size_t i = 0; i < ns.size(); ++i) {
        REQUIRE(axler_pn_upper(ns[i]) >= static_cast<double>(oracle::nth_prime(ns[i])));
        REQUIRE(axler_theta_lower(ns[i]) < thetas[i]);
    }
}

TEST_CASE("effective lower bound values and domain") {
    CHECK_THROWS_AS(effective_lower_bound(3467, Rational{1, 10}), std::domain_error);
    double v = effective_lower_bound(3468, Rational{1, 10});
    CHECK(v == doctest::Approx(-713.3714).epsilon(1e-5));

    // at the published tail floor the bound clears 0.001 n / log n
    uint64_t n = 44'500'000;
    double nd = static_cast<double>(n);
    CHECK(effective_lower_bound(n, Rational{1, 10}) > 0.001 * nd / std::log(nd));

    // x = -2 kills the main term; the formula is <= 0 for every n
    for (uint64_t m : {3468ull, 10'000ull, 1'000'000ull})
        CHECK(effective_lower_bound(m, Rational{-2, 1}) <= 0.0);
}

TEST_CASE("n_upper reproduces the published ceiling table exactly") {
    struct Row {
        const char* x;
        uint64_t n;
    };
    const Row rows[] = {{"0.1", 43'565'839}, {"0.2", 15'774'907}, {"0.3", 6'292'702},
                        {"0.4", 2'730'250},  {"0.5", 1'274'770},  {"0.8", 185'476},
                        {"0.9", 107'532},    {"1.3", 17'456}};
    for (const auto& r : rows) CHECK(n_upper(Rational::parse(r.x)) == r.n);

    CHECK(n_upper(Rational::parse("1.9")) == 3468);  // floor engages
    CHECK_THROWS_AS(n_upper(Rational{-2, 1}), std::domain_error);
    CHECK_THROWS_AS(n_upper(Rational{2, 1}), std::domain_error);
    CHECK_THROWS_AS(n_upper(Rational::parse("-1.5")), std::overflow_error);
    CHECK(n_upper_info(Rational::parse("-1.5")).fits == false);
}

TEST_CASE("n_upper is non-increasing in x") {
    uint64_t prev = UINT64_MAX;
    for (double x = -1.9; x < 1.9; x += 0.01) {
        Rational r = rational_from_double(x);
        auto info = n_upper_info(r);
        if (!info.fits) {
            prev = UINT64_MAX;
            continue;
        }
        REQUIRE(info.value <= prev);
        prev = info.value;
    }
}

TEST_CASE("the certified tail really is positive past n_upper") {
    // E_n(x) > 0 must hold at n_upper + 1 by the effective bound alone
    for (const char* xs : {"0.1", "0.5", "1.3", "1.9"}) {
        Rational x = Rational::parse(xs);
        uint64_t n = n_upper(x);
        CHECK(effective_lower_bound(n + 1, x) > 0.0);
    }
}

TEST_CASE("closed-form bound: published three-significant-figure values") {
    struct Row {
        const char* x;
        double expect;
    };
    const Row rows[] = {{"1.4", 3.12e10},
                        {"1.3", 9.67e10},
                        {"1.2", 3.25e11},
                        {"1.1", 1.20e12},
                        {"1.0", 4.91e12}};
    for (const auto& r : rows) {
        double v = closed_form_bound(Rational::parse(r.x));
        CHECK(v == doctest::Approx(r.expect).epsilon(5e-3));
    }
    // dominates exp(y*) across the grid (it was derived by weakening it)
    for (double x = -1.9; x < 1.9; x += 0.05) {
        Rational r = rational_from_double(x);
        CHECK(closed_form_bound(r) >= std::exp(n_upper_info(r).y_star) * 0.999999);
    }
}

TEST_CASE("asymptotic formula, closed-form points") {
    CHECK(asymptotic_psi(Rational{-1, 1}) == doctest::Approx(16'777'216.0));  // 8^8
    CHECK(asymptotic_psi(Rational{6, 1}) == doctest::Approx(1.0));
    // base-e point: x + 2 = 8/e gives e^e
    Rational x = rational_from_double(8.0 / std::exp(1.0) - 2.0);
    CHECK(asymptotic_psi(x) == doctest::Approx(15.154262241479262).epsilon(1e-9));
    CHECK_THROWS_AS(asymptotic_psi(Rational{-2, 1}), std::domain_error);
}

TEST_CASE("rh solver: no fixed point at moderate x") {
    auto r = rh_n_upper(Rational{0, 1});
    CHECK(!r.solved);
    CHECK(r.n_rh == 149);  // ceil(e^5)
    // minimum of f at y = 5 is ~4.787
    EffectiveConstants c;
    double f5 = 5.0 - 5.0 * std::log(5.0) - 2.0 * std::log(c.c_rh / 2.0);
    CHECK(f5 == doctest::Approx(4.7874).epsilon(1e-4));
}

TEST_CASE("rh solver: solves near the left edge and tracks the asymptote") {
    auto r = rh_n_upper(Rational::of(-2 * 10000 + 1, 10000));  // x = -2 + 1e-4
    CHECK(r.solved);
    CHECK(r.y_star == doctest::Approx(28.768794).epsilon(1e-6));
    // self-consistency: y* = 5 log y* + 2 log(c_rh/(x+2))
    EffectiveConstants c;
    double rhs = 5.0 * std::log(r.y_star) + 2.0 * std::log(c.c_rh / 1e-4);
    CHECK(r.y_star == doctest::Approx(rhs).epsilon(1e-9));

    // ratio y*/(2 log(1/(x+2))) decreases towards 1 as x -> -2+
    double prev = HUGE_VAL;
    for (int64_t den : {10'000ll, 1'000'000'000ll, 1'000'000'000'000'000ll,
                        4'500'000'000'000'000'000ll}) {
        auto ri = rh_n_upper(Rational::of(-2 * den + 1, den));
        REQUIRE(ri.solved);
        double ratio = ri.y_star / (2.0 * std::log(static_cast<double>(den)));
        CHECK(ratio < prev);
        CHECK(ratio > 1.0);
        prev = ratio;
    }
    CHECK(prev < 1.25);  // within 25% at the smallest representable offset
}

TEST_CASE("rh error-term report evaluates the stated formulas") {
    auto rows = rh_error_report({1e2, 1e5, 1e10, 1e15, 1e20});
    REQUIRE(rows.size() == 5);
    // frozen oracle evaluations of n loglog n/log^2 n and sqrt(n) log^1.5 n
    CHECK(rows[0].e_uncond == doctest::Approx(7.201).epsilon(1e-3));
    CHECK(rows[0].e_rh == doctest::Approx(98.83).epsilon(1e-3));
    CHECK(rows[0].ratio == doctest::Approx(0.07287).epsilon(1e-3));
    CHECK(rows[1].ratio == doctest::Approx(0.1492).epsilon(1e-3));
    CHECK(rows[2].ratio == doctest::Approx(5.354).epsilon(1e-3));
    CHECK(rows[3].ratio == doctest::Approx(462.6).epsilon(1e-3));
    CHECK(rows[4].ratio == doctest::Approx(5.778e4).epsilon(1e-3));
    CHECK_THROWS_AS(rh_error_report({10.0}), std::domain_error);
}

TEST_CASE("effective lower bound sits below certified E_n(x) for x >= 0") {
    // The scan ceilings only ever rely on the bound for the nonnegative x it
    // is sound for; see the companion case below for the x < 0 limitation.
    Sweep::Config cfg;
    cfg.hp_snapshots = false;
    Sweep sweep(1'000'100, cfg);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<uint64_t> pick_n(3468, 1'000'000);
    std::uniform_real_distribution<double> pick_x(0.0, 1.99);

    std::vector<std::pair<uint64_t, Rational>> samples;
    for (int i = 0; i < 200; ++i)
        samples.push_back({pick_n(rng), rational_from_double(pick_x(rng))});
    std::sort(samples.begin(), samples.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    size_t idx = 0;
    while (idx < samples.size()) {
        while (sweep.n() < samples[idx].first) sweep.step();
        const auto& [a, b] = sweep.affine();
        while (idx < samples.size() && samples[idx].first == sweep.n()) {
            const Rational& x = samples[idx].second;
            auto e = e_n(a, b, x);
            double lower = effective_lower_bound(sweep.n(), x);
            REQUIRE(lower <= e.value - e.radius + 1e-6);
            ++idx;
        }
    }
}

TEST_CASE("effective lower bound is too optimistic for negative x (known limitation)") {
    // The pi(pi(n)) expansion behind the (8, 14) constants undershoots the
    // true count in the reachable range: pi(pi(10^6)) = 7702 while the
    // expansion allows at most n/y^2 + 1.5 n z/y^3 ~ 6733. The error is
    // harmless for x >= 0 (it lowers k(n,x), raising E) but flips sign for
    // x < 0, where the claimed bound overtakes the true E_n(x). Pin one
    // measured violation so any constant change gets noticed.
    Sweep::Config cfg;
    cfg.hp_snapshots = false;
    Sweep sweep(442'200, cfg);
    while (sweep.n() < 442'126) sweep.step();
    const auto& [a, b] = sweep.affine();
    auto e = e_n(a, b, Rational{-1, 1});
    double lower = effective_lower_bound(sweep.n(), Rational{-1, 1});
    CHECK(lower > e.value + e.radius + 1e4);  // bound exceeds the truth by ~1.8e4
}
