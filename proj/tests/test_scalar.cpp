#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nsfusion/parse.hpp"
#include "nsfusion/polynomial.hpp"
#include "nsfusion/radical.hpp"

using namespace nsf;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(7).to_string() == "7");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK(Rational::from_string("10/15") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("radical construction normalizes square factors") {
    CHECK(RadicalNumber::sqrt_of(12).to_string() == "2*sqrt(3)");
    CHECK(RadicalNumber::sqrt_of(2) * RadicalNumber::sqrt_of(3) == RadicalNumber::sqrt_of(6));
    CHECK(RadicalNumber::sqrt_of(8) + RadicalNumber::sqrt_of(2) == RadicalNumber::term(Rational(3), 2));
    CHECK(RadicalNumber::sqrt_of(49) == RadicalNumber(7));
    CHECK(RadicalNumber::sqrt_of(Rational(3, 4)).to_string() == "1/2*sqrt(3)");
}

TEST_CASE("conjugate products collapse to rationals") {
    RadicalNumber a = RadicalNumber(1) + RadicalNumber::sqrt_of(5);
    RadicalNumber b = RadicalNumber(1) - RadicalNumber::sqrt_of(5);
    CHECK(a * b == RadicalNumber(-4));
}

TEST_CASE("inversion on quadratic subfields") {
    CHECK(RadicalNumber(2).inverse() == RadicalNumber(Rational(1, 2)));
    RadicalNumber a = RadicalNumber(1) + RadicalNumber::sqrt_of(5);
    RadicalNumber inv = a.inverse();
    CHECK(inv == RadicalNumber(Rational(-1, 4)) + RadicalNumber::term(Rational(1, 4), 5));
    CHECK(a * inv == RadicalNumber(1));
    CHECK(RadicalNumber::sqrt_of(3).inverse() * RadicalNumber::sqrt_of(3) == RadicalNumber(1));
    CHECK_THROWS_AS(RadicalNumber().inverse(), DivisionByZero);
    RadicalNumber wide = RadicalNumber::sqrt_of(2) + RadicalNumber::sqrt_of(3);
    CHECK_THROWS_AS(wide.inverse(), UnsupportedInversion);
}

TEST_CASE("ring axioms hold on random radical triples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4), pick(0, 4);
    const long radicands[] = {1, 2, 3, 5, 6, 10};
    auto random_radical = [&] {
        RadicalNumber v;
        for (int t = 0; t < 3; ++t) v += RadicalNumber::term(Rational(num(rng), den(rng)), radicands[pick(rng)]);
        return v;
    };
    for (int iter = 0; iter < 200; ++iter) {
        RadicalNumber a = random_radical(), b = random_radical(), c = random_radical();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == RadicalNumber());
    }
    // invert(a) * a = 1 on random quadratic elements
    for (int iter = 0; iter < 100; ++iter) {
        RadicalNumber a = RadicalNumber(Rational(num(rng), den(rng))) +
                          RadicalNumber::term(Rational(num(rng), den(rng)), 5);
        if (a.is_zero()) continue;
        CHECK(a.inverse() * a == RadicalNumber(1));
    }
}

TEST_CASE("normalization is idempotent: equal values are structurally equal") {
    RadicalNumber v = RadicalNumber::sqrt_of(45) - RadicalNumber::term(Rational(2), 5);
    CHECK(v == RadicalNumber::sqrt_of(5));
    RadicalNumber rebuilt;
    for (const auto& [n, c] : v.terms()) rebuilt += RadicalNumber::term(c, n);
    CHECK(rebuilt == v);
}

TEST_CASE("radical square roots inside the ring") {
    CHECK(radical_sqrt(RadicalNumber(Rational(9, 4))) == RadicalNumber(Rational(3, 2)));
    CHECK(radical_sqrt(RadicalNumber(8)) == RadicalNumber::term(Rational(2), 2));
    RadicalNumber v = RadicalNumber(7) + RadicalNumber::term(Rational(4), 3);  // (2 + sqrt 3)^2
    CHECK(radical_sqrt(v) == RadicalNumber(2) + RadicalNumber::sqrt_of(3));
    CHECK_THROWS_AS(radical_sqrt(RadicalNumber(-1)), UnrepresentableRoot);
    CHECK_THROWS_AS(radical_sqrt(RadicalNumber::sqrt_of(2)), UnrepresentableRoot);
}

TEST_CASE("polynomial evaluation and rendering") {
    Polynomial p(Var::x, {RadicalNumber(0), RadicalNumber(-1), RadicalNumber(1)});  // x^2 - x
    CHECK(p.eval(RadicalNumber(0)).is_zero());
    CHECK(p.eval(RadicalNumber(Rational(1, 2))) == RadicalNumber(Rational(-1, 4)));
    Polynomial q(Var::x, {RadicalNumber(Rational(-1, 4)), RadicalNumber(0), RadicalNumber(1)});
    CHECK(q.to_string() == "-1/4 + 0*x + 1*x^2");

    RadicalNumber root = RadicalNumber::term(Rational(1, 2), 5) - RadicalNumber(1);  // sqrt5/2 - 1
    Polynomial lin = Polynomial::linear(Var::x, -root, RadicalNumber(1));
    CHECK(lin.eval(root).is_zero());

    Polynomial py(Var::y);
    CHECK_THROWS_AS(p + py, VariableMismatch);
}

TEST_CASE("root multiplicities and proportionality") {
    Polynomial p = Polynomial::linear(Var::x, RadicalNumber(0), RadicalNumber(1));  // x
    Polynomial sq = p * p * Polynomial::linear(Var::x, RadicalNumber(-2), RadicalNumber(1));
    CHECK(sq.root_multiplicity(RadicalNumber(0)) == 2);
    CHECK(sq.root_multiplicity(RadicalNumber(2)) == 1);
    CHECK(sq.root_multiplicity(RadicalNumber(1)) == 0);
    CHECK(sq.proportional_to(sq * RadicalNumber(Rational(-7, 3))));
    CHECK_FALSE(sq.proportional_to(p));
    CHECK(Polynomial(Var::x).proportional_to(Polynomial(Var::x)));
    CHECK(sq.monic().lead() == RadicalNumber(1));
}

TEST_CASE("exact expression parsing") {
    RadicalNumber c = parse::radical("15/2-3*sqrt(5)");
    CHECK(c == RadicalNumber(Rational(15, 2)) - RadicalNumber::term(Rational(3), 5));
    CHECK(parse::radical("3/4*(sqrt(5)/2-1)") ==
          RadicalNumber(Rational(-3, 4)) + RadicalNumber::term(Rational(3, 8), 5));
    CHECK(parse::rational("-7/3") == Rational(-7, 3));
    CHECK(parse::half_int("3/2") == HalfInt(3));
    CHECK(parse::half_int("-2") == HalfInt(-4));
    CHECK(parse::odd_label("9") == 9);
    CHECK_THROWS_AS(parse::odd_label("4"), ParseError);
    CHECK_THROWS_AS(parse::radical("1.5"), ParseError);
    CHECK_THROWS_AS(parse::rational("sqrt(2)"), ParseError);
    CHECK_THROWS_AS(parse::radical("sqrt(sqrt(2))"), ParseError);
    CHECK(parse::radical("sqrt(9/4)") == RadicalNumber(Rational(3, 2)));
}
