#pragma once

#include "qosp/laurent.hpp"

#include <complex>
#include <string>

namespace qosp {

// Element of Q(w)(s), s = q^{1/4}, kept as a reduced fraction of Laurent polynomials.
// Canonical form: gcd(num, den) = 1, den has lowest exponent 0 with coefficient 1.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : num_(v), den_(1) {}                  // NOLINT(google-explicit-constructor)
    ExactScalar(const Rational& v) : num_(Cyclo(v)), den_(1) {} // NOLINT(google-explicit-constructor)
    ExactScalar(const Cyclo& v) : num_(v), den_(1) {}          // NOLINT(google-explicit-constructor)
    ExactScalar(const Laurent& p) : num_(p), den_(1) {}        // NOLINT(google-explicit-constructor)
    ExactScalar(Laurent num, Laurent den);

    // s^k = q^{k/4}.
    static ExactScalar s_power(int k);
    // q^{k/4} * w^j.
    static ExactScalar monomial(const Cyclo& c, int s_exponent);
    static ExactScalar omega(int k);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    ExactScalar inverse() const;
    ExactScalar pow(int e) const;
    ExactScalar galois(int k) const;
    // w -> w^{-1}; s is real.
    ExactScalar conjugate() const { return galois(7); }

    std::complex<double> eval_at_s(std::complex<double> s) const;

private:
    void canonicalize();

    Laurent num_;
    Laurent den_{1};
};

// Super-bracket [n] = (q^{-n/2} - (-1)^n q^{n/2}) / (q^{-1/2} + q^{1/2}), any integer n.
ExactScalar kbracket(int n);
// [n]!, n >= 0.
ExactScalar kfactorial(int n);
// [[n]] = (1 - (-1)^n q^n) / (1 + q).
ExactScalar sq_bracket(int n);
// [[n]] at q -> q^{-1}.
ExactScalar sq_bracket_inv(int n);
// <n> = [n] at q -> q^{-1} = (-1)^{n+1} [n].
ExactScalar angle_bracket(int n);
ExactScalar sq_factorial(int n);
ExactScalar sq_factorial_inv(int n);
ExactScalar angle_factorial(int n);
// Standard q-number (q^x - q^{-x}) / (q - q^{-1}) at q^x = s^{k} w^{j}.
ExactScalar qnumber_of_power(int s_exponent, int omega_exponent);

// q^{a/2}: convenience for half-integer q exponents given in halves.
inline ExactScalar q_half_power(int halves) { return ExactScalar::s_power(2 * halves); }
inline ExactScalar q_power(int k) { return ExactScalar::s_power(4 * k); }
inline ExactScalar sign_power(long e) { return ExactScalar((e % 2 == 0) ? 1 : -1); }

}  // namespace qosp
