#include "qosp/exact_scalar.hpp"

#include "qosp/errors.hpp"

namespace qosp {

ExactScalar::ExactScalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    canonicalize();
}

void ExactScalar::canonicalize()
{
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    if (den_.span() > 0) {
        Laurent g = Laurent::gcd(num_, den_);
        if (g.span() > 0) {
            num_ = Laurent::exact_div(num_, g);
            den_ = Laurent::exact_div(den_, g);
        }
    }
    int shift = -den_.low();
    if (shift != 0) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    if (!den_.lowest_coeff().is_one()) {
        Cyclo f = den_.lowest_coeff().inverse();
        num_ *= f;
        den_ *= f;
    }
}

ExactScalar ExactScalar::s_power(int k)
{
    return ExactScalar(Laurent::monomial(Cyclo(1), k));
}

ExactScalar ExactScalar::monomial(const Cyclo& c, int s_exponent)
{
    return ExactScalar(Laurent::monomial(c, s_exponent));
}

ExactScalar ExactScalar::omega(int k)
{
    return ExactScalar(Cyclo::omega_power(k));
}

ExactScalar ExactScalar::operator-() const
{
    ExactScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) canonicalize();
        else if (num_.is_zero()) den_ = Laurent(1);
        return *this;
    }
    Laurent g = Laurent::gcd(den_, o.den_);
    Laurent a = Laurent::exact_div(den_, g);
    Laurent b = Laurent::exact_div(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = den_ * b;
    canonicalize();
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o)
{
    return *this += -o;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o)
{
    if (is_zero() || o.is_zero()) return *this = ExactScalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    Laurent n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (d2.span() > 0) {
        Laurent g = Laurent::gcd(n1, d2);
        if (g.span() > 0) {
            n1 = Laurent::exact_div(n1, g);
            d2 = Laurent::exact_div(d2, g);
        }
    }
    if (d1.span() > 0) {
        Laurent g = Laurent::gcd(n2, d1);
        if (g.span() > 0) {
            n2 = Laurent::exact_div(n2, g);
            d1 = Laurent::exact_div(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    int shift = -den_.low();
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
    if (!den_.lowest_coeff().is_one()) {
        Cyclo f = den_.lowest_coeff().inverse();
        num_ *= f;
        den_ *= f;
    }
    return *this;
}

ExactScalar ExactScalar::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    ExactScalar r;
    r.num_ = den_;
    r.den_ = num_;
    int shift = -r.den_.low();
    r.num_ = r.num_.shifted(shift);
    r.den_ = r.den_.shifted(shift);
    Cyclo f = r.den_.lowest_coeff().inverse();
    r.num_ *= f;
    r.den_ *= f;
    return r;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o)
{
    return *this *= o.inverse();
}

ExactScalar ExactScalar::pow(int e) const
{
    if (e < 0) return inverse().pow(-e);
    ExactScalar result(1);
    ExactScalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

ExactScalar ExactScalar::galois(int k) const
{
    return ExactScalar(num_.galois(k), den_.galois(k));
}

std::complex<double> ExactScalar::eval_at_s(std::complex<double> s) const
{
    std::complex<double> d = den_.eval(s);
    if (std::abs(d) == 0.0) throw PoleAtSample("denominator vanishes at sample");
    return num_.eval(s) / d;
}

ExactScalar kbracket(int n)
{
    if (n == 0) return {};
    Laurent top = Laurent::monomial(Cyclo(1), -2 * n) - Laurent::monomial(Cyclo(n % 2 == 0 ? 1 : -1), 2 * n);
    Laurent bottom = Laurent::monomial(Cyclo(1), -2) + Laurent::monomial(Cyclo(1), 2);
    return ExactScalar(Laurent::exact_div(top, bottom));
}

ExactScalar kfactorial(int n)
{
    if (n < 0) throw std::invalid_argument("kfactorial of negative integer");
    ExactScalar r(1);
    for (int k = 2; k <= n; ++k) r *= kbracket(k);
    return r;
}

ExactScalar sq_bracket(int n)
{
    if (n < 0) throw std::invalid_argument("sq_bracket of negative integer");
    Laurent top = Laurent(1) - Laurent::monomial(Cyclo(n % 2 == 0 ? 1 : -1), 4 * n);
    Laurent bottom = Laurent(1) + Laurent::monomial(Cyclo(1), 4);
    return ExactScalar(top, bottom);
}

ExactScalar sq_bracket_inv(int n)
{
    if (n < 0) throw std::invalid_argument("sq_bracket_inv of negative integer");
    Laurent top = Laurent(1) - Laurent::monomial(Cyclo(n % 2 == 0 ? 1 : -1), -4 * n);
    Laurent bottom = Laurent(1) + Laurent::monomial(Cyclo(1), -4);
    return ExactScalar(top, bottom);
}

ExactScalar angle_bracket(int n)
{
    if (n < 0) throw std::invalid_argument("angle_bracket of negative integer");
    return (n % 2 == 1) ? kbracket(n) : -kbracket(n);
}

ExactScalar sq_factorial(int n)
{
    ExactScalar r(1);
    for (int k = 2; k <= n; ++k) r *= sq_bracket(k);
    return r;
}

ExactScalar sq_factorial_inv(int n)
{
    ExactScalar r(1);
    for (int k = 2; k <= n; ++k) r *= sq_bracket_inv(k);
    return r;
}

ExactScalar angle_factorial(int n)
{
    if (n < 0) throw std::invalid_argument("angle_factorial of negative integer");
    ExactScalar r = kfactorial(n);
    long e = static_cast<long>(n) * (n - 1) / 2;
    return (e % 2 == 0) ? r : -r;
}

ExactScalar qnumber_of_power(int s_exponent, int omega_exponent)
{
    ExactScalar p = ExactScalar::monomial(Cyclo::omega_power(omega_exponent), s_exponent);
    return (p - p.inverse()) / (q_power(1) - q_power(-1));
}

}  // namespace qosp
