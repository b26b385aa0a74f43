#include "qosp/radical.hpp"

#include "qosp/errors.hpp"

#include <algorithm>
#include <iterator>

namespace qosp {

BracketProduct& BracketProduct::mul_bracket(int n, int e)
{
    if (n <= 0) throw std::invalid_argument("bracket product needs positive arguments");
    if (n == 1 || e == 0) return *this;
    int& v = e_[n];
    v += e;
    if (v == 0) e_.erase(n);
    return *this;
}

BracketProduct& BracketProduct::mul_factorial(int n, int e)
{
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    for (int k = 2; k <= n; ++k) mul_bracket(k, e);
    return *this;
}

BracketProduct& BracketProduct::operator*=(const BracketProduct& o)
{
    for (const auto& [n, e] : o.e_) mul_bracket(n, e);
    return *this;
}

ExactScalar BracketProduct::value() const
{
    ExactScalar r(1);
    for (const auto& [n, e] : e_) r *= kbracket(n).pow(e);
    return r;
}

BracketRadical::BracketRadical(std::vector<int> brackets) : n_(std::move(brackets))
{
    std::sort(n_.begin(), n_.end());
    if (std::adjacent_find(n_.begin(), n_.end()) != n_.end())
        throw std::invalid_argument("radical brackets must be distinct");
    if (!n_.empty() && n_.front() < 2) throw std::invalid_argument("radical brackets must be >= 2");
}

bool BracketRadical::contains(int n) const
{
    return std::binary_search(n_.begin(), n_.end(), n);
}

ExactScalar BracketRadical::radicand() const
{
    ExactScalar r(1);
    for (int n : n_) r *= kbracket(n);
    return r;
}

std::pair<BracketRadical, ExactScalar> BracketRadical::multiply(const BracketRadical& a, const BracketRadical& b)
{
    BracketRadical merged;
    std::set_symmetric_difference(a.n_.begin(), a.n_.end(), b.n_.begin(), b.n_.end(),
                                  std::back_inserter(merged.n_));
    std::vector<int> common;
    std::set_intersection(a.n_.begin(), a.n_.end(), b.n_.begin(), b.n_.end(), std::back_inserter(common));
    ExactScalar square(1);
    for (int n : common) square *= kbracket(n);
    return {std::move(merged), std::move(square)};
}

Surd::Surd(ExactScalar c, BracketRadical r) : coeff_(std::move(c)), rad_(std::move(r))
{
    if (coeff_.is_zero()) rad_ = BracketRadical();
}

Surd Surd::sqrt_of(const BracketProduct& p)
{
    BracketProduct outside;
    std::vector<int> inside;
    for (const auto& [n, e] : p.exponents()) {
        int f = (e >= 0) ? e / 2 : -((-e + 1) / 2);
        if (e - 2 * f == 1) inside.push_back(n);
        outside.mul_bracket(n, f);
    }
    return Surd(outside.value(), BracketRadical(std::move(inside)));
}

Surd operator*(const Surd& a, const Surd& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    auto [rad, sq] = BracketRadical::multiply(a.rad_, b.rad_);
    return Surd(a.coeff_ * b.coeff_ * sq, std::move(rad));
}

Surd operator+(const Surd& a, const Surd& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!(a.rad_ == b.rad_)) throw IncompatibleRadicals("sum of surds with different radicands");
    return Surd(a.coeff_ + b.coeff_, a.rad_);
}

Surd Surd::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero surd");
    return Surd((coeff_ * rad_.radicand()).inverse(), rad_);
}

ExactScalar Surd::square() const
{
    return coeff_ * coeff_ * rad_.radicand();
}

RadicalScalar::RadicalScalar(const ExactScalar& c)
{
    add_term(BracketRadical(), c);
}

RadicalScalar::RadicalScalar(const Surd& s)
{
    add_term(s.rad(), s.coeff());
}

void RadicalScalar::add_term(const BracketRadical& r, const ExactScalar& c)
{
    if (c.is_zero()) return;
    auto it = t_.find(r);
    if (it == t_.end()) {
        t_.emplace(r, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

std::optional<Surd> RadicalScalar::as_surd() const
{
    if (t_.empty()) return Surd();
    if (t_.size() > 1) return std::nullopt;
    return Surd(t_.begin()->second, t_.begin()->first);
}

std::optional<ExactScalar> RadicalScalar::as_scalar() const
{
    if (t_.empty()) return ExactScalar();
    if (t_.size() > 1 || !t_.begin()->first.empty()) return std::nullopt;
    return t_.begin()->second;
}

RadicalScalar RadicalScalar::operator-() const
{
    RadicalScalar r = *this;
    for (auto& [k, v] : r.t_) v = -v;
    return r;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o)
{
    for (const auto& [r, c] : o.t_) add_term(r, c);
    return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o)
{
    for (const auto& [r, c] : o.t_) add_term(r, -c);
    return *this;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b)
{
    RadicalScalar out;
    for (const auto& [ra, ca] : a.t_) {
        for (const auto& [rb, cb] : b.t_) {
            auto [rad, sq] = BracketRadical::multiply(ra, rb);
            out.add_term(rad, ca * cb * sq);
        }
    }
    return out;
}

RadicalScalar RadicalScalar::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero radical scalar");
    if (t_.size() == 1) return RadicalScalar(as_surd()->inverse());
    int pivot = 0;
    for (const auto& [r, c] : t_)
        if (!r.empty()) pivot = std::max(pivot, r.brackets().back());
    // this = b + c sqrt[pivot]; inverse = (b - c sqrt[pivot]) / (b^2 - c^2 [pivot]).
    RadicalScalar with, without;
    for (const auto& [r, c] : t_) {
        if (r.contains(pivot)) {
            std::vector<int> rest;
            for (int n : r.brackets())
                if (n != pivot) rest.push_back(n);
            with.add_term(BracketRadical(std::move(rest)), c);
        } else {
            without.add_term(r, c);
        }
    }
    RadicalScalar root(Surd(ExactScalar(1), BracketRadical({pivot})));
    RadicalScalar conj = without - with * root;
    RadicalScalar norm = without * without - with * with * RadicalScalar(kbracket(pivot));
    if (norm.is_zero()) throw DivisionByZero("radical scalar is a zero divisor");
    return conj * norm.inverse();
}

RadicalScalar RadicalScalar::conjugate() const
{
    RadicalScalar r;
    for (const auto& [k, v] : t_) r.add_term(k, v.conjugate());
    return r;
}

}  // namespace qosp
