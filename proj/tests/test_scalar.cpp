#include "doctest.h"

#include "qosp/errors.hpp"
#include "qosp/numeric.hpp"
#include "qosp/scalar_io.hpp"

#include <cmath>
#include <random>

using namespace qosp;

namespace {

ExactScalar qh(int halves) { return q_half_power(halves); }

double bracket_double(int n, double q)
{
    return (std::pow(q, -n / 2.0) - std::pow(-1.0, n) * std::pow(q, n / 2.0)) / (std::pow(q, -0.5) + std::pow(q, 0.5));
}

ExactScalar random_scalar(std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), comp(0, 3), len(1, 3);
    auto poly = [&] {
        Laurent p;
        int n = len(rng);
        for (int k = 0; k < n; ++k) p += Laurent::monomial(Cyclo::omega_power(comp(rng)) * Cyclo(coef(rng)), expo(rng));
        return p;
    };
    Laurent num = poly(), den = poly();
    if (den.is_zero()) den = Laurent(1);
    return ExactScalar(num, den);
}

}  // namespace

TEST_CASE("cyclotomic units")
{
    Cyclo w = Cyclo::omega_power(1);
    CHECK(w * w * w * w == Cyclo(-1));
    CHECK(Cyclo::omega_power(8) == Cyclo(1));
    CHECK(Cyclo::omega_power(-1) == -Cyclo::omega_power(3));
    CHECK(Cyclo::i().conj() == -Cyclo::i());
    Cyclo z(Rational(1, 2), Rational(-3), Rational(2, 7), Rational(1));
    CHECK(z * z.inverse() == Cyclo(1));
    CHECK_THROWS_AS(Cyclo().inverse(), DivisionByZero);
}

TEST_CASE("kbracket small values")
{
    CHECK(kbracket(0).is_zero());
    CHECK(kbracket(1) == ExactScalar(1));
    CHECK(kbracket(2) == qh(-1) - qh(1));
    CHECK(kbracket(3) == q_power(-1) - ExactScalar(1) + q_power(1));
    CHECK(kfactorial(0) == ExactScalar(1));
    CHECK(kfactorial(1) == ExactScalar(1));
    CHECK(kfactorial(3) == (qh(-1) - qh(1)) * (q_power(-1) - ExactScalar(1) + q_power(1)));
    CHECK_THROWS(kfactorial(-1));
}

TEST_CASE("negative bracket arguments follow the definition")
{
    // [-n] = (q^{n/2} - (-1)^n q^{-n/2}) / (q^{-1/2}+q^{1/2}) = -(-1)^n [n]
    for (int n = 1; n <= 6; ++n) CHECK(kbracket(-n) == sign_power(n + 1) * kbracket(n));
}

TEST_CASE("square bracket relation")
{
    CHECK(sq_bracket(0).is_zero());
    CHECK(sq_bracket(1) == ExactScalar(1));
    for (int n = 0; n <= 12; ++n) CHECK(kbracket(n) == ExactScalar::s_power(2 * (1 - n)) * sq_bracket(n));
    for (int n = 0; n <= 8; ++n) CHECK(angle_bracket(n) == sign_power(n + 1) * kbracket(n));
}

TEST_CASE("angle bracket is the q -> 1/q image of the super-bracket")
{
    // substitute s -> 1/s in [n]
    for (int n = 1; n <= 6; ++n) {
        const Laurent num = kbracket(n).num();
        Laurent flipped;
        for (int e = num.low(); e <= num.high(); ++e) flipped += Laurent::monomial(num.coeff(e), -e);
        CHECK(ExactScalar(flipped) == angle_bracket(n));
    }
}

TEST_CASE("numeric evaluation")
{
    CHECK(std::abs(eval_numeric(kbracket(2), 0.25) - Complex(1.5, 0)) < 1e-12);
    CHECK(std::abs(eval_numeric(ExactScalar(Cyclo::i()), 0.4) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(eval_numeric(kbracket(1), 0.7) - Complex(1, 0)) < 1e-15);
    for (double q : {0.3, 0.55, 0.8})
        for (int n = 1; n <= 12; ++n) {
            Complex v = eval_numeric(kbracket(n), q);
            CHECK(v.real() > 0);
            CHECK(std::abs(v.real() - bracket_double(n, q)) < 1e-9 * bracket_double(n, q));
        }
    CHECK_THROWS(NumericSample(1.5));
    CHECK_THROWS(NumericSample(0.0));
    // 1/(1-q) has a pole at q = 1 only; 1/(s^4 - 1/16) has one at q = 1/16
    ExactScalar pole = (q_power(1) - ExactScalar(Rational(1, 16))).inverse();
    CHECK_THROWS_AS(eval_numeric(pole, 1.0 / 16.0), PoleAtSample);
}

TEST_CASE("conjugation")
{
    CHECK(ExactScalar(Cyclo::i()).conjugate() == ExactScalar(-Cyclo::i()));
    CHECK(qh(1).conjugate() == qh(1));
    CHECK(ExactScalar::omega(1).conjugate() == ExactScalar::omega(-1));
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        ExactScalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        try {
            Complex x = eval_numeric(a.conjugate(), 0.55), y = std::conj(eval_numeric(a, 0.55));
            CHECK(std::abs(x - y) <= 1e-9 * (1 + std::abs(y)));
        } catch (const PoleAtSample&) {
        }
    }
}

TEST_CASE("field axioms on random values")
{
    std::mt19937 rng(12345);
    int inverses = 0;
    for (int t = 0; t < 1000; ++t) {
        ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a - a).is_zero());
        if (!a.is_zero()) {
            REQUIRE(a * a.inverse() == ExactScalar(1));
            ++inverses;
        }
        // cross-multiplication agrees with canonical equality
        REQUIRE((a.num() * b.den() == b.num() * a.den()) == (a == b));
    }
    CHECK(inverses > 500);
    CHECK_THROWS_AS(ExactScalar().inverse(), DivisionByZero);
}

TEST_CASE("canonical form")
{
    ExactScalar v(Laurent::monomial(Cyclo(2), 3) + Laurent::monomial(Cyclo(2), 7), Laurent::monomial(Cyclo(4), 5));
    CHECK(v.den().is_one());
    CHECK(v == ExactScalar(Laurent::monomial(Cyclo(Rational(1, 2)), -2) + Laurent::monomial(Cyclo(Rational(1, 2)), 2)));
    ExactScalar u = kbracket(4) / kbracket(2);
    CHECK(u == q_power(-1) + q_power(1));
}

TEST_CASE("surd arithmetic")
{
    Surd r3(ExactScalar(1), BracketRadical({3}));
    CHECK(r3 * r3 == Surd(kbracket(3)));
    Surd r23(ExactScalar(1), BracketRadical({2, 3}));
    CHECK(r23 * r3 == Surd(kbracket(3), BracketRadical({2})));
    Surd a(ExactScalar(2), BracketRadical({5})), b(ExactScalar(3), BracketRadical({5}));
    CHECK(a + b == Surd(ExactScalar(5), BracketRadical({5})));
    CHECK_THROWS_AS(a + r3, IncompatibleRadicals);
    CHECK((a - a).rad().empty());
    CHECK(a * a.inverse() == Surd(1));
    BracketProduct p;
    p.mul_factorial(4).mul_bracket(2, -3);
    Surd s = Surd::sqrt_of(p);
    CHECK(s * s == Surd(p.value()));
    CHECK(std::abs(eval_numeric(s, 0.3) - std::sqrt(eval_numeric(p.value(), 0.3))) < 1e-12);
}

TEST_CASE("radical scalar field")
{
    RadicalScalar r2(Surd(ExactScalar(1), BracketRadical({2})));
    RadicalScalar r3(Surd(ExactScalar(1), BracketRadical({3})));
    RadicalScalar x = RadicalScalar(ExactScalar(1)) + r2 + ExactScalar(Cyclo::i()) * r3 + r2 * r3;
    RadicalScalar y = x.inverse();
    CHECK(x * y == RadicalScalar(1));
    CHECK(std::abs(eval_numeric(x, 0.55) * eval_numeric(y, 0.55) - Complex(1, 0)) < 1e-12);
    CHECK_THROWS_AS(RadicalScalar().inverse(), DivisionByZero);
}

TEST_CASE("scalar serialization round trip")
{
    CHECK(to_string(kbracket(2)) == "((1/1))*s^-2 + ((-1/1))*s^2");
    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        ExactScalar a = random_scalar(rng);
        CHECK(parse_scalar(to_string(a)) == a);
    }
    CHECK(parse_scalar("((1/2)+(-1/3)*w^3)*s^1") == ExactScalar::monomial(Cyclo(Rational(1, 2), 0, 0, Rational(-1, 3)), 1));
    CHECK_THROWS_AS(parse_scalar("((1/2)"), ParseError);
    CHECK_THROWS_AS(parse_scalar("((1/2))*s^1 junk"), ParseError);
}
