#include "doctest.h"

#include "qosp/errors.hpp"
#include "qosp/qseries.hpp"

using namespace qosp;

namespace {

// Independent oracle: each term built from scratch with explicit products.
ExactScalar naive_qhahn(int M, int x, int a, int b, int N, const ExactScalar& Q)
{
    auto poch = [&](int e, int k) {
        ExactScalar r(1);
        for (int j = 0; j < k; ++j) r *= ExactScalar(1) - Q.pow(e + j);
        return r;
    };
    ExactScalar sum;
    for (int k = 0; k <= M; ++k) {
        sum += poch(-M, k) * poch(a + b + M + 1, k) * poch(-x, k) / (poch(a + 1, k) * poch(-N, k) * poch(1, k)) * Q.pow(k);
    }
    return sum;
}

}  // namespace

TEST_CASE("shifted factorial")
{
    ExactScalar Q = minus_q();
    CHECK(shifted_factorial(ExactScalar(5), Q, 0) == ExactScalar(1));
    CHECK(shifted_factorial(Q, Q, 1) == ExactScalar(1) - Q);
    CHECK(shifted_factorial(ExactScalar(1), Q, 1).is_zero());
    CHECK(shifted_factorial(Q.pow(-2), Q, 3).is_zero());
    CHECK_FALSE(shifted_factorial(Q.pow(-2), Q, 2).is_zero());
}

TEST_CASE("terminating basic hypergeometric series")
{
    ExactScalar Q = minus_q();
    ExactScalar z = q_half_power(3) + ExactScalar(2);
    CHECK(bhs_terminating({Q.pow(-0)}, {}, Q, z, 0) == ExactScalar(1));
    ExactScalar b = q_power(2) + ExactScalar(Rational(1, 3));
    ExactScalar expect = ExactScalar(1) + z * (ExactScalar(1) - Q.inverse()) / (ExactScalar(1) - Q);
    CHECK(bhs_terminating({Q.pow(-1), b}, {b}, Q, z, 1) == expect);
    // denominator (Q^{-1};Q)_k vanishes at k = 2 inside a range of 3
    CHECK_THROWS_AS(bhs_terminating({Q.pow(-3)}, {Q.pow(-1)}, Q, Q, 3), SeriesPole);
}

TEST_CASE("Q-Hahn against direct expansion")
{
    ExactScalar Q = minus_q();
    CHECK(qhahn(0, 3, 1, 1, 4) == ExactScalar(1));
    CHECK(qhahn(2, 0, 1, 1, 4) == ExactScalar(1));
    // Q_1(1;0,0,2) = 1 + (1-Q^{-1})(1-Q^2)(1-Q^{-1}) Q / ((1-Q)(1-Q^{-2})(1-Q))
    ExactScalar one(1);
    ExactScalar manual = one + (one - Q.inverse()) * (one - Q.pow(2)) * (one - Q.inverse()) * Q /
                                   ((one - Q) * (one - Q.pow(-2)) * (one - Q));
    CHECK(qhahn(1, 1, 0, 0, 2) == manual);
    for (int N = 0; N <= 4; ++N)
        for (int M = 0; M <= N; ++M)
            for (int x = 0; x <= N; ++x)
                for (int a = 0; a <= 2; ++a)
                    for (int b = -1; b <= 2; ++b) CHECK(qhahn(M, x, a, b, N) == naive_qhahn(M, x, a, b, N, Q));
}

TEST_CASE("series engine is Q-generic")
{
    ExactScalar Q = q_power(1) * ExactScalar(3);
    CHECK(qhahn(2, 1, 1, 0, 3, Q) == naive_qhahn(2, 1, 1, 0, 3, Q));
}

TEST_CASE("little Q-Jacobi")
{
    ZetaPoly p0 = little_qjacobi(0, 2, 1);
    CHECK(p0.degree() == 0);
    CHECK(p0.coeff(0) == ExactScalar(1));
    ExactScalar Q = minus_q(), one(1);
    ZetaPoly p = little_qjacobi(1, 1, -1);
    // (1-Q^{-1})(1-Q^{2}) Q / ((1-Q^2)(1-Q))
    CHECK(p.coeff(0) == one);
    CHECK(p.coeff(1) == (one - Q.inverse()) * (one - Q.pow(2)) * Q / ((one - Q.pow(2)) * (one - Q)));
    for (int m = 0; m <= 4; ++m)
        for (int a = 0; a <= 3; ++a)
            for (int b = -3; b <= 2; ++b) {
                ZetaPoly j = little_qjacobi(m, a, b);
                CHECK(j.degree() <= m);
                CHECK(j.eval(ExactScalar()) == one);
            }
}

TEST_CASE("factorial conversions")
{
    FactorialConversion zero = factorial_to_shifted(3, 0, Direction::Up);
    CHECK(zero.prefactor == ExactScalar(1));
    CHECK(zero.rhs() == ExactScalar(1));
    CHECK(factorial_to_shifted(2, 1, Direction::Down).rhs() == kbracket(2));
    CHECK(factorial_to_shifted(1, 2, Direction::Up).rhs() == ExactScalar(1) / kfactorial(3));
    for (int A = 0; A <= 6; ++A)
        for (int k = 0; k <= A; ++k) {
            auto up = factorial_to_shifted(A, k, Direction::Up);
            auto down = factorial_to_shifted(A, k, Direction::Down);
            CHECK(up.lhs() == up.rhs());
            CHECK(down.lhs() == down.rhs());
        }
    CHECK_THROWS(factorial_to_shifted(1, 2, Direction::Down));
}
