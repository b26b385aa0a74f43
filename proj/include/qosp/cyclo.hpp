#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstddef>
#include <string>

namespace qosp {

using Rational = mpq_class;

// Element of Q(w), w a primitive 8th root of unity (w^4 = -1), in the basis 1, w, w^2, w^3.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    Cyclo(const Rational& v) : c_{v, 0, 0, 0} { c_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)
    Cyclo(Rational c0, Rational c1, Rational c2, Rational c3);

    // w^k for any integer k.
    static Cyclo omega_power(int k);
    static Cyclo i() { return omega_power(2); }

    const Rational& operator[](std::size_t k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }

    // Galois automorphism w -> w^k, k odd.
    Cyclo galois(int k) const;
    // Complex conjugation w -> w^{-1}.
    Cyclo conj() const { return galois(7); }
    // Product of the four conjugates; always rational.
    Rational norm() const;
    // Throws DivisionByZero on zero.
    Cyclo inverse() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    std::array<Rational, 4> c_{};
};

}  // namespace qosp
