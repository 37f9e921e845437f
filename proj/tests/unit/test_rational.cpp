#include "fermat_torus/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

using fermat::BigInt;
using fermat::Rational;

TEST_CASE("rat_new normalizes sign and gcd") {
    CHECK(fermat::rat_new(6, 4) == Rational(3, 2));
    CHECK(fermat::rat_new(-3, -6) == Rational(1, 2));
    CHECK(fermat::rat_new(0, 7) == Rational(0, 1));
    CHECK(fermat::rat_new(0, 7).den() == 1);
    CHECK(fermat::rat_new(5, -10) == Rational(-1, 2));
    CHECK_THROWS_AS(fermat::rat_new(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic stays reduced with positive denominator") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-200, 200);
    std::uniform_int_distribution<std::int64_t> den(1, 200);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.den() > 0);
            CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1);
        }
        if (!b.is_zero()) {
            Rational q = a / b;
            CHECK(q.den() > 0);
            CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(q.num()), q.den()) == 1);
        }
    }
}

TEST_CASE("nth_root_exact on perfect powers") {
    CHECK(*fermat::nth_root_exact(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(!fermat::nth_root_exact(Rational(1, 2), 2).has_value());
    CHECK(*fermat::nth_root_exact(Rational(16, 81), 4) == Rational(2, 3));
    CHECK(*fermat::nth_root_exact(Rational(0, 1), 5) == Rational(0, 1));
    CHECK(*fermat::nth_root_exact(Rational(1, 1), 6) == Rational(1, 1));
    CHECK(*fermat::nth_root_exact(Rational(3, 7), 1) == Rational(3, 7));
    CHECK_THROWS_AS(fermat::nth_root_exact(Rational(3, 2), 2), std::domain_error);
}

TEST_CASE("nth_root_exact round-trips rat_pow") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 300; ++i) {
        std::int64_t q = den(rng);
        std::uniform_int_distribution<std::int64_t> num(0, q);
        Rational s(num(rng), q);
        for (unsigned n = 1; n <= 6; ++n) {
            auto back = fermat::nth_root_exact(fermat::rat_pow(s, n), n);
            REQUIRE(back.has_value());
            CHECK(*back == s);
        }
    }
}

TEST_CASE("integer_nth_root flags non-powers") {
    CHECK(fermat::integer_nth_root(BigInt(27), 3).exact);
    CHECK(fermat::integer_nth_root(BigInt(27), 3).root == 3);
    CHECK(!fermat::integer_nth_root(BigInt(26), 3).exact);
    CHECK(fermat::integer_nth_root(BigInt(26), 3).root == 2);
    BigInt big = boost::multiprecision::pow(BigInt(12345), 7);
    CHECK(fermat::integer_nth_root(big, 7).root == 12345);
    CHECK(!fermat::integer_nth_root(big + 1, 7).exact);
}

TEST_CASE("rational_reconstruct picks the simplest qualifying convergent") {
    CHECK(*fermat::rational_reconstruct(0.6, 10, 1e-9) == Rational(3, 5));
    CHECK(*fermat::rational_reconstruct(0.3333333333, 10, 1e-6) == Rational(1, 3));
    CHECK(*fermat::rational_reconstruct(0.0, 10, 1e-9) == Rational(0, 1));
    CHECK(*fermat::rational_reconstruct(1.0, 10, 1e-9) == Rational(1, 1));
}

TEST_CASE("rational_reconstruct rejects sqrt(2)/2 at denominator 100") {
    double x = 0.7071067811865476;
    CHECK(!fermat::rational_reconstruct(x, 100, 1e-9).has_value());

    // Exhaustive denominator scan: no fraction with q <= 100 sits within 1e-9.
    for (std::int64_t q = 1; q <= 100; ++q) {
        double p = std::round(x * static_cast<double>(q));
        CHECK(std::abs(x - p / static_cast<double>(q)) > 1e-9);
    }
}

TEST_CASE("rational_reconstruct recovers fractions from their doubles") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::int64_t> den(1, 10000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t q = den(rng);
        std::uniform_int_distribution<std::int64_t> num(0, q);
        std::int64_t p = num(rng);
        std::int64_t g = std::gcd(p, q);
        p /= g;
        q /= g;
        double x = static_cast<double>(p) / static_cast<double>(q);
        auto rec = fermat::rational_reconstruct(x, q, 1e-12);
        REQUIRE(rec.has_value());
        CHECK(*rec == Rational(p, q));
    }
}
