#include "qosp/qseries.hpp"

#include "qosp/errors.hpp"

#include <stdexcept>

namespace qosp {

ExactScalar minus_q()
{
    return -q_power(1);
}

ExactScalar Q_power(const ExactScalar& Q, int a)
{
    return Q.pow(a);
}

ExactScalar shifted_factorial(const ExactScalar& x, const ExactScalar& Q, int k)
{
    if (k < 0) throw std::invalid_argument("shifted factorial needs k >= 0");
    ExactScalar r(1);
    ExactScalar xq = x;
    for (int j = 0; j < k; ++j) {
        r *= ExactScalar(1) - xq;
        xq *= Q;
    }
    return r;
}

ExactScalar bhs_terminating(const std::vector<ExactScalar>& numerator_params,
                            const std::vector<ExactScalar>& denominator_params,
                            const ExactScalar& Q, const ExactScalar& z, int terminate_at)
{
    if (terminate_at < 0) throw std::invalid_argument("terminate_at must be >= 0");
    ExactScalar sum(1);
    ExactScalar term(1);
    for (int k = 1; k <= terminate_at; ++k) {
        // ratio t_k / t_{k-1}
        ExactScalar num = z;
        ExactScalar den(1);
        ExactScalar qk = Q.pow(k - 1);
        for (const auto& a : numerator_params) num *= ExactScalar(1) - a * qk;
        for (const auto& b : denominator_params) {
            ExactScalar f = ExactScalar(1) - b * qk;
            if (f.is_zero()) throw SeriesPole("denominator shifted factorial vanishes at k = " + std::to_string(k));
            den *= f;
        }
        den *= ExactScalar(1) - Q.pow(k);
        if (den.is_zero()) throw SeriesPole("(Q;Q)_k vanishes");
        term *= num / den;
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

ExactScalar qhahn(int M, int x, int alpha, int beta, int N)
{
    return qhahn(M, x, alpha, beta, N, minus_q());
}

ExactScalar qhahn(int M, int x, int alpha, int beta, int N, const ExactScalar& Q)
{
    if (M < 0 || M > N) throw std::invalid_argument("qhahn needs 0 <= M <= N");
    return bhs_terminating({Q.pow(-M), Q.pow(alpha + beta + M + 1), Q.pow(-x)},
                           {Q.pow(alpha + 1), Q.pow(-N)}, Q, Q, M);
}

ZetaPoly::ZetaPoly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs))
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactScalar ZetaPoly::coeff(int n) const
{
    if (n < 0 || n >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(n)];
}

ExactScalar ZetaPoly::eval(const ExactScalar& z) const
{
    ExactScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ZetaPoly little_qjacobi(int m, int alpha, int beta)
{
    return little_qjacobi(m, alpha, beta, minus_q());
}

ZetaPoly little_qjacobi(int m, int alpha, int beta, const ExactScalar& Q)
{
    if (m < 0) throw std::invalid_argument("little_qjacobi needs m >= 0");
    std::vector<ExactScalar> c;
    ExactScalar a1 = Q.pow(-m), a2 = Q.pow(alpha + beta + m + 1), b1 = Q.pow(alpha + 1);
    for (int n = 0; n <= m; ++n) {
        ExactScalar den = shifted_factorial(b1, Q, n) * shifted_factorial(Q, Q, n);
        if (den.is_zero()) throw SeriesPole("little Q-Jacobi denominator vanishes at n = " + std::to_string(n));
        c.push_back(shifted_factorial(a1, Q, n) * shifted_factorial(a2, Q, n) * Q.pow(n) / den);
    }
    return ZetaPoly(std::move(c));
}

ExactScalar FactorialConversion::lhs() const
{
    int other = (direction == Direction::Up) ? A + k : A - k;
    return kfactorial(A) / kfactorial(other);
}

ExactScalar FactorialConversion::rhs() const
{
    ExactScalar Q = minus_q();
    ExactScalar sf = shifted_factorial(Q.pow(shifted_base_exponent), Q, k);
    return shifted_in_denominator ? prefactor / sf : prefactor * sf;
}

FactorialConversion factorial_to_shifted(int A, int k, Direction direction)
{
    if (A < 0 || k < 0) throw std::invalid_argument("factorial conversion needs A, k >= 0");
    if (direction == Direction::Down && k > A) throw std::invalid_argument("[A-k]! with A-k < 0");
    FactorialConversion fc;
    fc.A = A;
    fc.k = k;
    fc.direction = direction;
    ExactScalar one_plus_q = ExactScalar(1) + q_power(1);
    if (direction == Direction::Up) {
        fc.prefactor = ExactScalar::s_power(k * (2 * A + k - 1)) * one_plus_q.pow(k);
        fc.shifted_base_exponent = A + 1;
        fc.shifted_in_denominator = true;
    } else {
        long e = static_cast<long>(k) * (2 * A + 3 - k);
        fc.prefactor = sign_power(e / 2) * ExactScalar::s_power(static_cast<int>(e)) / one_plus_q.pow(k);
        fc.shifted_base_exponent = -A;
        fc.shifted_in_denominator = false;
    }
    return fc;
}

}  // namespace qosp
