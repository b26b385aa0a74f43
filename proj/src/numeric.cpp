#include "qosp/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace qosp {

NumericSample::NumericSample(double q) : q_(q)
{
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("numeric backend requires 0 < q < 1");
    s_ = Complex(std::pow(q, 0.25), 0.0);
}

Complex NumericSample::eval(const ExactScalar& v) const
{
    return v.eval_at_s(s_);
}

double NumericSample::radicand(const BracketRadical& r) const
{
    double prod = 1.0;
    for (int n : r.brackets()) {
        Complex b = kbracket(n).eval_at_s(s_);
        if (!(b.real() > 0.0)) throw std::domain_error("bracket radicand not positive at sample");
        prod *= b.real();
    }
    return prod;
}

Complex NumericSample::eval(const Surd& v) const
{
    if (v.is_zero()) return {0.0, 0.0};
    return eval(v.coeff()) * std::sqrt(radicand(v.rad()));
}

Complex NumericSample::eval(const RadicalScalar& v) const
{
    Complex acc{0.0, 0.0};
    for (const auto& [r, c] : v.terms()) acc += eval(c) * std::sqrt(radicand(r));
    return acc;
}

Complex eval_numeric(const ExactScalar& v, double q) { return NumericSample(q).eval(v); }
Complex eval_numeric(const Surd& v, double q) { return NumericSample(q).eval(v); }
Complex eval_numeric(const RadicalScalar& v, double q) { return NumericSample(q).eval(v); }

}  // namespace qosp
