#pragma once

#include "qosp/radical.hpp"

#include <complex>

namespace qosp {

using Complex = std::complex<double>;

// Evaluation at a real sample q in (0,1): s = q^{1/4} > 0, w = e^{i pi/4}.
class NumericSample {
public:
    explicit NumericSample(double q);

    double q() const { return q_; }
    Complex s() const { return s_; }

    Complex eval(const ExactScalar& v) const;
    // Positive square root of the radicand; throws std::domain_error if it is not positive.
    Complex eval(const Surd& v) const;
    Complex eval(const RadicalScalar& v) const;
    double radicand(const BracketRadical& r) const;

private:
    double q_;
    Complex s_;
};

// One-shot helpers.
Complex eval_numeric(const ExactScalar& v, double q);
Complex eval_numeric(const Surd& v, double q);
Complex eval_numeric(const RadicalScalar& v, double q);

}  // namespace qosp
