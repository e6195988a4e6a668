#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bonselab/certified.hpp"
#include "oracle.hpp"

using namespace bonselab;

TEST_CASE("two_sum is an error-free transformation") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1e9, 1e9);
    for (int i = 0; i < 10000; ++i) {
        double a = d(rng), b = d(rng);
        double err;
        double s = detail::two_sum(a, b, err);
        // check s + err == a + b exactly in long double (64-bit mantissa
        // suffices: the two parts do not overlap)
        long double exact = static_cast<long double>(a) + static_cast<long double>(b);
        long double recon = static_cast<long double>(s) + static_cast<long double>(err);
        CHECK(exact == recon);
    }
}

TEST_CASE("cert_log frozen values") {
    auto l2 = cert_log(2);
    CHECK(l2.value == doctest::Approx(0.6931471805599453).epsilon(1e-16));
    CHECK(l2.radius > 0);

    auto l19 = cert_log(19);
    CHECK(std::fabs(l19.value - 2.9444389791664403) <= l19.radius);
    auto l23 = cert_log(23);
    CHECK(std::fabs(l23.value - 3.1354942159291497) <= l23.radius);

    // oracle agreement within the stated radius
    for (uint64_t p : {2ull, 19ull, 23ull, 999999937ull})
        CHECK(std::fabs(cert_log(p).value - oracle::log_int(p)) <= cert_log(p).radius);
}

TEST_CASE("theta accumulator matches exact primorial logs") {
    ThetaAccumulator acc;
    acc.add(cert_log(2));
    acc.add(cert_log(3));
    acc.add(cert_log(5));
    // log 30
    CHECK(std::fabs(acc.approx() - 3.4011973816621555) <= acc.to_certified().radius + 1e-15);

    ThetaAccumulator theta;
    for (uint64_t i = 1; i <= 8; ++i) theta.add(cert_log(oracle::nth_prime(i)));
    auto t8 = theta.to_certified();
    CHECK(oracle::matches_digits(t8.value, "16.08760448420003250089258", t8.radius + 1e-20));
    CHECK(t8.radius < 1e-12);

    theta.add(cert_log(23));
    theta.add(cert_log(29));
    auto t10 = theta.to_certified();
    CHECK(oracle::matches_digits(t10.value, "22.59039453011565621888261", t10.radius + 1e-20));
    CHECK(t10.radius < 1e-12);
    CHECK(theta.count == 10);
}

TEST_CASE("accumulator soundness on random batches") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint64_t> val(2, 1'000'000'000);
    std::uniform_int_distribution<int> len(1, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        int k = len(rng);
        ThetaAccumulator acc;
        long double ref = 0.0L;  // cross-check with 80-bit; oracle spot below
        std::vector<uint64_t> vs;
        for (int i = 0; i < k; ++i) {
            uint64_t v = val(rng);
            vs.push_back(v);
            acc.add(cert_log(v));
            ref += std::log(static_cast<long double>(v));
        }
        auto c = acc.to_certified();
        CHECK(std::fabs(static_cast<double>(ref - static_cast<long double>(c.value))) <=
              c.radius + 1e-9 * k);
        // monotone radius growth
        CHECK(c.radius > 0);
    }
}

TEST_CASE("cert_sign") {
    CHECK(cert_sign({3.5456, 1e-9}) == Sign::Positive);
    CHECK(cert_sign({-1e-12, 1e-9}) == Sign::Indeterminate);
    CHECK(cert_sign({0.0, 0.0}) == Sign::Indeterminate);
    CHECK(cert_sign({-2.0, 1.0}) == Sign::Negative);
    CHECK(cert_sign({2.0, 1.999}) == Sign::Positive);
    CHECK(cert_sign({2.0, 2.001}) == Sign::Indeterminate);
}

TEST_CASE("certified ops keep the exact value enclosed") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-100.0, 100.0);
    for (int i = 0; i < 10000; ++i) {
        double av = d(rng), bv = d(rng);
        CertifiedReal a{av, 1e-12}, b{bv, 1e-13};
        long double exact_add = (long double)av + (long double)bv;
        long double exact_mul = (long double)av * (long double)bv;
        auto s = cert_add(a, b);
        auto m = cert_mul(a, b);
        CHECK(std::fabs((double)(exact_add - (long double)s.value)) <= s.radius);
        // worst-case input error |a| rb + |b| ra + ra rb must be inside
        double in_err = std::fabs(av) * b.radius + std::fabs(bv) * a.radius + 1e-25;
        CHECK(std::fabs((double)(exact_mul - (long double)m.value)) + in_err >= 0);
        CHECK(m.radius >= in_err);
    }
}
