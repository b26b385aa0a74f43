#pragma once

#include "qosp/exact_scalar.hpp"

#include <vector>

namespace qosp {

// Q = -q, the base used by every series in this library.
ExactScalar minus_q();
// Q^a for an integer a.
ExactScalar Q_power(const ExactScalar& Q, int a);

// (x;Q)_k = prod_{j<k} (1 - x Q^j).
ExactScalar shifted_factorial(const ExactScalar& x, const ExactScalar& Q, int k);

// Terminating r+1 phi r summed over k = 0..terminate_at.
// Throws SeriesPole if a denominator shifted factorial vanishes inside the range.
ExactScalar bhs_terminating(const std::vector<ExactScalar>& numerator_params,
                            const std::vector<ExactScalar>& denominator_params,
                            const ExactScalar& Q, const ExactScalar& z, int terminate_at);

// 3phi2(Q^{-M}, Q^{alpha+beta+M+1}, Q^{-x}; Q^{alpha+1}, Q^{-N}; Q, Q).
ExactScalar qhahn(int M, int x, int alpha, int beta, int N);
ExactScalar qhahn(int M, int x, int alpha, int beta, int N, const ExactScalar& Q);

// Polynomial in a formal variable (zeta), trailing zeros stripped.
class ZetaPoly {
public:
    ZetaPoly() = default;
    explicit ZetaPoly(std::vector<ExactScalar> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<ExactScalar>& coeffs() const { return c_; }
    ExactScalar coeff(int n) const;
    ExactScalar eval(const ExactScalar& z) const;

    friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.c_ == b.c_; }

private:
    std::vector<ExactScalar> c_;
};

// p_m^{(alpha,beta)}(z) = 2phi1(Q^{-m}, Q^{alpha+beta+m+1}; Q^{alpha+1}; Q, Q z).
ZetaPoly little_qjacobi(int m, int alpha, int beta);
ZetaPoly little_qjacobi(int m, int alpha, int beta, const ExactScalar& Q);

enum class Direction { Up, Down };

// [A]!/[A+k]! = pre / (Q^{A+1};Q)_k      (Up)
// [A]!/[A-k]! = pre * (Q^{-A};Q)_k       (Down)
struct FactorialConversion {
    int A = 0;
    int k = 0;
    Direction direction = Direction::Up;
    ExactScalar prefactor;
    int shifted_base_exponent = 0;  // the shifted factorial is (Q^{e};Q)_k
    bool shifted_in_denominator = false;

    ExactScalar lhs() const;
    ExactScalar rhs() const;
};

// Throws std::invalid_argument if a bracket argument would go negative.
FactorialConversion factorial_to_shifted(int A, int k, Direction direction);

}  // namespace qosp
