#include "qosp/cyclo.hpp"

#include "qosp/errors.hpp"

#include <cmath>
#include <numbers>

namespace qosp {

namespace {

// Adds v * w^t into c, reducing t modulo 8 with w^4 = -1.
void accumulate(std::array<Rational, 4>& c, int t, const Rational& v)
{
    t = ((t % 8) + 8) % 8;
    if (t < 4)
        c[t] += v;
    else
        c[t - 4] -= v;
}

}  // namespace

Cyclo::Cyclo(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
{
    for (auto& v : c_) v.canonicalize();
}

Cyclo Cyclo::omega_power(int k)
{
    Cyclo r;
    accumulate(r.c_, k, Rational(1));
    return r;
}

bool Cyclo::is_zero() const
{
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Cyclo::is_one() const
{
    return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Cyclo::is_rational() const
{
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyclo Cyclo::operator-() const
{
    Cyclo r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o)
{
    if (o.is_rational()) {
        if (o.c_[0] == 1) return *this;
        for (auto& v : c_) v *= o.c_[0];
        return *this;
    }
    std::array<Rational, 4> r{};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            accumulate(r, a + b, c_[a] * o.c_[b]);
        }
    }
    c_ = std::move(r);
    return *this;
}

Cyclo Cyclo::galois(int k) const
{
    Cyclo r;
    for (int j = 0; j < 4; ++j)
        if (c_[j] != 0) accumulate(r.c_, j * k, c_[j]);
    return r;
}

Rational Cyclo::norm() const
{
    Cyclo p = *this * galois(3) * galois(5) * galois(7);
    return p.c_[0];
}

Cyclo Cyclo::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
    if (is_rational()) return Cyclo(Rational(1) / c_[0]);
    Cyclo co = galois(3) * galois(5) * galois(7);
    Rational n = (*this * co).c_[0];
    for (auto& v : co.c_) v /= n;
    return co;
}

std::complex<double> Cyclo::to_complex() const
{
    std::complex<double> r{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        double ang = std::numbers::pi * k / 4.0;
        r += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return r;
}

std::string Cyclo::to_string() const
{
    std::string out = "(";
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0 && !(k == 0 && is_zero())) continue;
        if (!first) out += "+";
        first = false;
        out += "(" + c_[k].get_num().get_str() + "/" + c_[k].get_den().get_str() + ")";
        if (k == 1) out += "*w";
        if (k >= 2) out += "*w^" + std::to_string(k);
    }
    return out + ")";
}

}  // namespace qosp
