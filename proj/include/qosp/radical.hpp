#pragma once

#include "qosp/exact_scalar.hpp"

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace qosp {

// Formal product of super-brackets prod [n]^{e_n}, e_n any integer.
class BracketProduct {
public:
    BracketProduct() = default;

    BracketProduct& mul_bracket(int n, int e = 1);
    BracketProduct& mul_factorial(int n, int e = 1);
    BracketProduct& operator*=(const BracketProduct& o);

    const std::map<int, int>& exponents() const { return e_; }
    ExactScalar value() const;

private:
    std::map<int, int> e_;
};

// Square-free formal radicand prod_{n in set} [n], n >= 2.
class BracketRadical {
public:
    BracketRadical() = default;
    explicit BracketRadical(std::vector<int> brackets);

    const std::vector<int>& brackets() const { return n_; }
    bool empty() const { return n_.empty(); }
    bool contains(int n) const;
    ExactScalar radicand() const;

    // Product of two radicals: the merged square-free radical and the extracted square part.
    static std::pair<BracketRadical, ExactScalar> multiply(const BracketRadical& a, const BracketRadical& b);

    friend auto operator<=>(const BracketRadical&, const BracketRadical&) = default;
    friend bool operator==(const BracketRadical&, const BracketRadical&) = default;

private:
    std::vector<int> n_;
};

// coeff * sqrt(rad).
class Surd {
public:
    Surd() = default;
    Surd(const ExactScalar& c) : coeff_(c) {}  // NOLINT(google-explicit-constructor)
    Surd(long v) : coeff_(v) {}                // NOLINT(google-explicit-constructor)
    Surd(ExactScalar c, BracketRadical r);

    // sqrt of a bracket product, with even parts moved into the coefficient.
    static Surd sqrt_of(const BracketProduct& p);

    const ExactScalar& coeff() const { return coeff_; }
    const BracketRadical& rad() const { return rad_; }
    bool is_zero() const { return coeff_.is_zero(); }

    Surd operator-() const { return Surd(-coeff_, rad_); }
    friend Surd operator*(const Surd& a, const Surd& b);
    // Throws IncompatibleRadicals unless the radicands agree (or one side is zero).
    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }
    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    friend bool operator==(const Surd& a, const Surd& b) { return a.coeff_ == b.coeff_ && a.rad_ == b.rad_; }

    Surd inverse() const;
    ExactScalar square() const;
    Surd conjugate() const { return Surd(coeff_.conjugate(), rad_); }

private:
    ExactScalar coeff_;
    BracketRadical rad_;
};

// Finite sum of Surds with distinct radicands; a field (multi-quadratic extension).
class RadicalScalar {
public:
    RadicalScalar() = default;
    RadicalScalar(const ExactScalar& c);  // NOLINT(google-explicit-constructor)
    RadicalScalar(const Surd& s);         // NOLINT(google-explicit-constructor)
    RadicalScalar(long v) : RadicalScalar(ExactScalar(v)) {}  // NOLINT(google-explicit-constructor)

    const std::map<BracketRadical, ExactScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // The value as a single Surd when it has at most one radicand.
    std::optional<Surd> as_surd() const;
    std::optional<ExactScalar> as_scalar() const;

    RadicalScalar operator-() const;
    RadicalScalar& operator+=(const RadicalScalar& o);
    RadicalScalar& operator-=(const RadicalScalar& o);
    friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
    friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }
    friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) { return a * b.inverse(); }
    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.t_ == b.t_; }

    RadicalScalar inverse() const;
    RadicalScalar conjugate() const;

private:
    void add_term(const BracketRadical& r, const ExactScalar& c);

    std::map<BracketRadical, ExactScalar> t_;
};

}  // namespace qosp
