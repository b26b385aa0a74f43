#include "qosp/laurent.hpp"

#include "qosp/errors.hpp"

#include <algorithm>

namespace qosp {

Laurent::Laurent(int low, std::vector<Cyclo> coeffs) : low_(low), c_(std::move(coeffs))
{
    trim();
}

Laurent Laurent::monomial(const Cyclo& c, int exponent)
{
    Laurent r;
    if (!c.is_zero()) {
        r.low_ = exponent;
        r.c_.push_back(c);
    }
    return r;
}

void Laurent::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
}

Cyclo Laurent::coeff(int exponent) const
{
    if (c_.empty() || exponent < low_ || exponent > high()) return Cyclo();
    return c_[static_cast<std::size_t>(exponent - low_)];
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    std::vector<Cyclo> r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < c_.size(); ++k) r[static_cast<std::size_t>(low_ - lo) + k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
    low_ = lo;
    c_ = std::move(r);
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    return *this += -o;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Cyclo> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Laurent(a.low_ + b.low_, std::move(r));
}

Laurent& Laurent::operator*=(const Laurent& o)
{
    return *this = *this * o;
}

Laurent& Laurent::operator*=(const Cyclo& c)
{
    if (c.is_zero()) return *this = Laurent();
    for (auto& v : c_) v *= c;
    return *this;
}

Laurent Laurent::shifted(int k) const
{
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

Laurent Laurent::galois(int k) const
{
    Laurent r = *this;
    for (auto& v : r.c_) v = v.galois(k);
    r.trim();
    return r;
}

std::complex<double> Laurent::eval(std::complex<double> s) const
{
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + it->to_complex();
    return acc * std::pow(s, low_);
}

std::pair<Laurent, Laurent> Laurent::divmod(const Laurent& a, const Laurent& b)
{
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Cyclo> rem = a.c_;
    const std::vector<Cyclo>& den = b.c_;
    if (rem.size() < den.size()) return {Laurent(), Laurent(0, rem)};
    Cyclo lead_inv = den.back().inverse();
    std::vector<Cyclo> quo(rem.size() - den.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
        Cyclo& top = rem[k + den.size() - 1];
        if (top.is_zero()) continue;
        Cyclo f = top * lead_inv;
        for (std::size_t j = 0; j < den.size(); ++j) {
            if (den[j].is_zero()) continue;
            rem[k + j] -= f * den[j];
        }
        quo[k] = std::move(f);
    }
    rem.resize(den.size() - 1);
    return {Laurent(0, std::move(quo)), Laurent(0, std::move(rem))};
}

Laurent Laurent::gcd(const Laurent& a, const Laurent& b)
{
    auto monic = [](Laurent p) {
        if (p.is_zero()) return p;
        p.low_ = 0;
        if (!p.leading_coeff().is_one()) p *= p.leading_coeff().inverse();
        return p;
    };
    Laurent x = monic(a);
    Laurent y = monic(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.span() < y.span()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.span() == 0) return Laurent(1);
        Laurent r = monic(divmod(x, y).second);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Laurent Laurent::exact_div(const Laurent& a, const Laurent& b)
{
    if (a.is_zero()) return {};
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DivisionByZero("inexact polynomial division");
    return q.shifted(a.low_ - b.low_);
}

}  // namespace qosp
