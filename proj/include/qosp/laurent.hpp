#pragma once

#include "qosp/cyclo.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace qosp {

// Laurent polynomial in s with Q(w) coefficients: sum_k c_k s^{low + k}.
// Stored trimmed: first and last coefficients nonzero; the zero polynomial is empty.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Cyclo& c) { *this = monomial(c, 0); }  // NOLINT(google-explicit-constructor)
    Laurent(long v) : Laurent(Cyclo(v)) {}                // NOLINT(google-explicit-constructor)
    Laurent(int low, std::vector<Cyclo> coeffs);

    static Laurent monomial(const Cyclo& c, int exponent);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0].is_one(); }
    bool is_monomial() const { return c_.size() == 1; }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    // Span high - low; -1 for zero.
    int span() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Cyclo>& coeffs() const { return c_; }
    Cyclo coeff(int exponent) const;
    const Cyclo& lowest_coeff() const { return c_.front(); }
    const Cyclo& leading_coeff() const { return c_.back(); }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const Cyclo& c);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Cyclo& c) { return a *= c; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    // Multiplies by s^k.
    Laurent shifted(int k) const;
    // Image under w -> w^k on every coefficient.
    Laurent galois(int k) const;

    std::complex<double> eval(std::complex<double> s) const;

    // Polynomial algebra on the shifted polynomials s^{-low} p (units s^k stripped).
    static std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b);
    // Monic gcd of the stripped polynomials, with low() == 0. gcd(0, 0) = 0.
    static Laurent gcd(const Laurent& a, const Laurent& b);
    // Exact quotient a / b; throws if b does not divide a.
    static Laurent exact_div(const Laurent& a, const Laurent& b);

private:
    void trim();

    int low_ = 0;
    std::vector<Cyclo> c_;
};

}  // namespace qosp
