#include <doctest.h>

#include "hartogs/polynomial.hpp"
#include "hartogs/verify.hpp"

using namespace hartogs;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-8") == Rational(-8));
    CHECK(parse_rational("0.75") == Rational(3, 4));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(rational_string(Rational(-8)) == "-8/1");
    CHECK(rational_string(Rational(3, 4)) == "3/4");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("rational powers") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(5), 0) == 1);
    CHECK(rational_pow(Rational(0), 4) == 0);
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("polynomial normalization and degree") {
    RationalPoly p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(RationalPoly{}.is_zero());
    CHECK(RationalPoly{}.degree() == -1);
    CHECK(RationalPoly::constant(Rational(0)).is_zero());
    CHECK(RationalPoly::monomial(Rational(3), 4).degree() == 4);
}

TEST_CASE("polynomial arithmetic") {
    RationalPoly x = RationalPoly::identity();
    RationalPoly p = x * x + RationalPoly::constant(Rational(1));  // x^2 + 1
    RationalPoly q = x - RationalPoly::constant(Rational(2));      // x - 2
    CHECK((p * q).degree() == 3);
    CHECK((p * q)(Rational(3)) == Rational(10));
    CHECK((p + q)(Rational(1, 2)) == Rational(5, 4) - Rational(3, 2));
    CHECK(p - p == RationalPoly{});
    CHECK((-q)(Rational(0)) == 2);
}

TEST_CASE("product degree is additive") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        std::vector<Rational> ca, cb;
        auto da = 1 + static_cast<int>(counter_uniform(7, 3 * trial) * 6);
        auto db = 1 + static_cast<int>(counter_uniform(7, 3 * trial + 1) * 6);
        for (int i = 0; i <= da; ++i)
            ca.push_back(Rational(static_cast<long>(counter_uniform(11, 10 * trial + i) * 9) - 4));
        for (int i = 0; i <= db; ++i)
            cb.push_back(Rational(static_cast<long>(counter_uniform(13, 10 * trial + i) * 9) - 4));
        ca.back() = Rational(1);
        cb.back() = Rational(1);
        RationalPoly a{ca}, b{cb};
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("linear composition") {
    RationalPoly x = RationalPoly::identity();
    RationalPoly p = x * x + RationalPoly::constant(Rational(1));
    // p(2x + 3) = 4x^2 + 12x + 10
    RationalPoly composed = p.compose_linear(Rational(2), Rational(3));
    CHECK(composed == RationalPoly{Rational(10), Rational(12), Rational(4)});
    // evaluation route agrees
    for (long v = -3; v <= 3; ++v)
        CHECK(composed(Rational(v)) == p(Rational(2 * v + 3)));
}

TEST_CASE("string round trip") {
    RationalPoly p{Rational(-8), Rational(3, 2), Rational(1)};
    auto strings = p.to_strings();
    CHECK(strings == std::vector<std::string>{"-8/1", "3/2", "1/1"});
    CHECK(RationalPoly::from_strings(strings) == p);
    CHECK(p.pretty() == "x^2 + 3/2*x - 8");
    CHECK(RationalPoly{}.pretty() == "0");
}

TEST_CASE("double evaluation") {
    RationalPoly p{Rational(1, 4), Rational(0), Rational(1)};
    CHECK(p.eval_double(2.0) == doctest::Approx(4.25));
}
