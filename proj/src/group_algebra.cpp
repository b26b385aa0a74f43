#include "qosp/group_algebra.hpp"

#include <stdexcept>

namespace qosp {

ExactScalar ExpFactor::shift() const
{
    return ExactScalar::monomial(Cyclo::omega_power(2 * s), 2 * r_quarters);
}

NCElement::NCElement(const RadicalScalar& c)
{
    add_term(NCMonomial{}, c);
}

NCElement::NCElement(const NCMonomial& m, const RadicalScalar& c)
{
    add_term(m, c);
}

RadicalScalar NCElement::coeff(const NCMonomial& m) const
{
    auto it = t_.find(m);
    return it == t_.end() ? RadicalScalar() : it->second;
}

void NCElement::add_term(const NCMonomial& m, const RadicalScalar& c)
{
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

NCElement NCElement::operator-() const
{
    NCElement r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

NCElement& NCElement::operator+=(const NCElement& o)
{
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o)
{
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

NCElement operator*(const RadicalScalar& c, const NCElement& u)
{
    NCElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : u.t_) r.add_term(m, c * v);
    return r;
}

NCElement nc_mul(const NCElement& u, const NCElement& v)
{
    NCElement out;
    for (const auto& [m1, c1] : u.terms()) {
        for (const auto& [m2, c2] : v.terms()) {
            // y^{b1} x^{a2} -> (-1)^{b1 a2} x^{a2} y^{b1}; E1 moves right past a2 x's, E2 moves left past b1 y's
            ExactScalar f = sign_power(static_cast<long>(m1.b) * m2.a);
            f *= m1.e.shift().pow(m2.a) * m2.e.shift().pow(-m1.b);
            out.add_term(NCMonomial{m1.a + m2.a, m1.e + m2.e, m1.b + m2.b}, RadicalScalar(f) * c1 * c2);
        }
    }
    return out;
}

NCElement nc_supercommutator(const NCElement& u, int pu, const NCElement& v, int pv)
{
    NCElement r = nc_mul(u, v);
    NCElement s = nc_mul(v, u);
    return (pu * pv) % 2 == 0 ? r - s : r + s;
}

NCElement zeta()
{
    ExactScalar c = -q_half_power(-1) / kbracket(2);
    return NCElement(NCMonomial{1, {-2, 0}, 1}, RadicalScalar(c));
}

NCElement zeta_power(int c)
{
    if (c < 0) throw std::invalid_argument("negative power of zeta");
    NCElement r(RadicalScalar(1));
    NCElement z = zeta();
    for (int k = 0; k < c; ++k) r = nc_mul(r, z);
    return r;
}

NCElement substitute_zeta(const ZetaPoly& p)
{
    NCElement r;
    NCElement z(RadicalScalar(1));
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) z = nc_mul(z, zeta());
        r += RadicalScalar(p.coeff(k)) * z;
    }
    return r;
}

namespace {

void require_even(const RepLabel& label, int two_mp, int two_m)
{
    if (label.family != Family::Even) throw std::invalid_argument("formula covers even dimensional representations");
    if (!label.contains(two_mp) || !label.contains(two_m)) throw std::invalid_argument("weight outside representation");
}

// sign (-1)^{p(p-1)/2 + p(l - m' + lambda)} attached to e^{abc} with p = a + c
ExactScalar pairing_sign(const RepLabel& label, int two_mp, int p)
{
    long e = static_cast<long>(p) * (p - 1) / 2 + static_cast<long>(p) * ((label.two_ell - two_mp) / 2 + label.lambda);
    return sign_power(e);
}

}  // namespace

NCElement t_element_closed(const RepLabel& label, int two_mp, int two_m)
{
    require_even(label, two_mp, two_m);
    const int L = label.two_ell, b = label.sign();
    const int d = (two_mp - two_m) / 2;
    const int lpm = (L + two_m) / 2, lmm = (L - two_m) / 2;
    long e = static_cast<long>(d) * (d - 1) / 2 + static_cast<long>(d) * ((L - two_mp) / 2 + label.lambda);
    ExactScalar pre = sign_power(e) * ExactScalar(b < 0 && d % 2 != 0 ? -1 : 1);
    pre *= ExactScalar::omega(b * d) * ExactScalar::s_power(two_m * d);
    BracketProduct rad;
    rad.mul_factorial(lpm).mul_factorial((L + two_mp) / 2).mul_bracket(2, -d);
    rad.mul_factorial(lmm, -1).mul_factorial((L - two_mp) / 2, -1);
    RadicalScalar prefix(Surd(pre) * Surd::sqrt_of(rad));

    NCElement out;
    for (int c = 0; c <= L; ++c) {
        if (lpm - c < 0 || d + c < 0) continue;
        ExactScalar t = ExactScalar::omega(2 * c) * ExactScalar(b < 0 && c % 2 != 0 ? -1 : 1);
        t *= sign_power(static_cast<long>(c) * (lmm - 1)) * ExactScalar::s_power(-2 * c * d) * kbracket(2).pow(-c);
        t *= kfactorial(lmm + c) / (kfactorial(lpm - c) * kfactorial(d + c) * kfactorial(c));
        out.add_term(NCMonomial{d + c, {two_m - 2 * c, label.eta_units()}, c}, prefix * RadicalScalar(t));
    }
    return out;
}

NCElement t_element_duality(const RepLabel& label, int two_mp, int two_m)
{
    if (!label.contains(two_mp) || !label.contains(two_m)) throw std::invalid_argument("weight outside representation");
    const int d = (two_mp - two_m) / 2;
    NCElement out;
    for (int c = 0; c <= label.two_ell; ++c) {
        int a = d + c;
        int mid = two_m - 2 * c;
        if (a < 0 || !label.contains(mid)) continue;
        ActResult down = act_power(Gen::Vm, c, label, two_m);
        if (down.coeff.is_zero()) continue;
        ActResult up = act_power(Gen::Vp, a, label, mid);
        if (up.coeff.is_zero() || up.two_m != two_mp) continue;
        // sum_b (z + (a-c) ln q)^b / b! * H^b on the intermediate weight
        ExactScalar f = pairing_sign(label, two_mp, a + c) * weight_of(label, mid).q_power(a - c);
        f /= kfactorial(a) * angle_factorial(c);
        out.add_term(NCMonomial{a, {mid, label.eta_units()}, c}, RadicalScalar(up.coeff * down.coeff * Surd(f)));
    }
    return out;
}

NCElement t_element_deformed_exp(const RepLabel& label, int two_mp, int two_m)
{
    if (!label.contains(two_mp) || !label.contains(two_m)) throw std::invalid_argument("weight outside representation");
    const int d = (two_mp - two_m) / 2;
    NCElement out;
    for (int c = 0; c <= label.two_ell; ++c) {
        int k = d + c;
        if (k < 0) continue;
        // (q^{-H} V-)^c then (q^{H} V+)^k, acting right to left
        Surd coef(1);
        int cur = two_m;
        for (int j = 0; j < c && !coef.is_zero(); ++j) {
            ActResult r = act(Gen::Vm, label, cur);
            if (r.coeff.is_zero()) {
                coef = Surd();
                break;
            }
            cur = r.two_m;
            coef = coef * r.coeff * Surd(weight_of(label, cur).q_power(-1));
        }
        if (coef.is_zero()) continue;
        const int mid = cur;
        for (int j = 0; j < k; ++j) {
            ActResult r = act(Gen::Vp, label, cur);
            if (r.coeff.is_zero()) {
                coef = Surd();
                break;
            }
            coef = coef * Surd(weight_of(label, cur).q_power(1)) * r.coeff;
            cur = r.two_m;
        }
        if (coef.is_zero() || cur != two_mp) continue;
        ExactScalar f = pairing_sign(label, two_mp, k + c) / (sq_factorial(k) * sq_factorial_inv(c));
        out.add_term(NCMonomial{k, {mid, label.eta_units()}, c}, RadicalScalar(coef * Surd(f)));
    }
    return out;
}

namespace {

// Coefficients of P for m' >= m; the m' < m case is the same with m and m' exchanged.
ZetaPoly p_coefficients(int two_ell, int two_lo, int two_hi)
{
    const int e = (two_hi - two_lo) / 2;
    const int lp = (two_ell + two_lo) / 2, lm = (two_ell - two_lo) / 2;
    std::vector<ExactScalar> co;
    for (int c = 0; c <= lp; ++c) {
        ExactScalar v = sign_power(static_cast<long>(c) * lm + static_cast<long>(c) * (c - 1) / 2);
        v *= ExactScalar::s_power(-c * (two_hi + two_lo - 2));
        v *= kfactorial(e) * kfactorial(lp) * kfactorial(lm + c);
        v /= kfactorial(e + c) * kfactorial(lp - c) * kfactorial(lm) * kfactorial(c);
        co.push_back(v);
    }
    return ZetaPoly(std::move(co));
}

}  // namespace

PolynomialForm t_polynomial_form(const RepLabel& label, int two_mp, int two_m)
{
    require_even(label, two_mp, two_m);
    const int L = label.two_ell, b = label.sign();
    PolynomialForm out;
    if (two_mp >= two_m) {
        const int d = (two_mp - two_m) / 2;
        long e = static_cast<long>(d) * (d - 1) / 2 + static_cast<long>(d) * ((L - two_mp) / 2 + label.lambda);
        ExactScalar pre = sign_power(e) * ExactScalar(b < 0 && d % 2 != 0 ? -1 : 1);
        pre *= ExactScalar::omega(b * d) * ExactScalar::s_power(two_m * d) / kfactorial(d);
        BracketProduct rad;
        rad.mul_factorial((L - two_m) / 2).mul_factorial((L + two_mp) / 2).mul_bracket(2, -d);
        rad.mul_factorial((L + two_m) / 2, -1).mul_factorial((L - two_mp) / 2, -1);
        out.prefix = NCElement(NCMonomial{d, {two_m, label.eta_units()}, 0}, RadicalScalar(Surd(pre) * Surd::sqrt_of(rad)));
        out.poly = p_coefficients(L, two_m, two_mp);
        out.jacobi.alpha = d;
        out.jacobi.degree = (L + two_m) / 2;
    } else {
        const int d = (two_m - two_mp) / 2;
        long e = static_cast<long>(d) * (d + 1) / 2 + static_cast<long>(d) * label.lambda;
        ExactScalar pre = sign_power(e) * ExactScalar::omega(2 * d - b * d) * ExactScalar::s_power(-two_mp * d);
        pre /= kfactorial(d);
        BracketProduct rad;
        rad.mul_factorial((L + two_m) / 2).mul_factorial((L - two_mp) / 2).mul_bracket(2, -d);
        rad.mul_factorial((L - two_m) / 2, -1).mul_factorial((L + two_mp) / 2, -1);
        out.prefix = NCElement(NCMonomial{0, {two_mp, label.eta_units()}, d}, RadicalScalar(Surd(pre) * Surd::sqrt_of(rad)));
        out.poly = p_coefficients(L, two_mp, two_m);
        out.jacobi.alpha = d;
        out.jacobi.degree = (L + two_mp) / 2;
    }
    out.jacobi.beta = -(two_mp + two_m) / 2;
    return out;
}

ZetaPoly jacobi_for_entry(const RepLabel& label, int two_mp, int two_m)
{
    PolynomialForm f = t_polynomial_form(label, two_mp, two_m);
    return little_qjacobi(f.jacobi.degree, f.jacobi.alpha, f.jacobi.beta);
}

ZetaPoly reflect(const ZetaPoly& p)
{
    std::vector<ExactScalar> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return ZetaPoly(std::move(c));
}

FundamentalBlock quoted_fundamental_block(Branch branch)
{
    const int b = branch_sign(branch);
    FundamentalBlock blk;
    blk.branch = branch;
    blk.d = NCElement::exp(-1, b);
    blk.a = nc_mul(NCElement::exp(1, b), NCElement(RadicalScalar(1)) + zeta());
    // 1 / (q^{1/4} sqrt[2])
    Surd k = Surd(ExactScalar::s_power(-1)) * Surd::sqrt_of(BracketProduct().mul_bracket(2, -1));
    blk.b = RadicalScalar(k * Surd(ExactScalar(b) * ExactScalar::omega(-b))) * nc_mul(NCElement::x(), blk.d);
    blk.c = RadicalScalar(k * Surd(ExactScalar::omega(2 - b))) * nc_mul(blk.d, NCElement::y());
    return blk;
}

FundamentalBlock closed_fundamental_block(Branch branch, int lambda)
{
    RepLabel l = RepLabel::make(1, lambda, branch);
    FundamentalBlock blk;
    blk.branch = branch;
    blk.a = t_element_closed(l, 1, 1);
    blk.b = t_element_closed(l, 1, -1);
    blk.c = t_element_closed(l, -1, 1);
    blk.d = t_element_closed(l, -1, -1);
    return blk;
}

std::vector<RelationResult> fundamental_relations_check(const FundamentalBlock& blk)
{
    const int b = branch_sign(blk.branch);
    const RadicalScalar u(ExactScalar::omega(2 * b) * q_half_power(1));  // +-i q^{1/2}
    const NCElement &a = blk.a, &bb = blk.b, &c = blk.c, &d = blk.d;
    std::vector<RelationResult> out;
    auto rel = [&out](const char* name, const NCElement& residual) {
        out.push_back({name, residual.is_zero(), residual});
    };
    rel("ab = +-i q^{1/2} ba", a * bb - u * (bb * a));
    rel("ac = +-i q^{1/2} ca", a * c - u * (c * a));
    rel("bc = -cb", bb * c + c * bb);
    rel("bd = -+i q^{1/2} db", bb * d + u * (d * bb));
    rel("cd = -+i q^{1/2} dc", c * d + u * (d * c));
    rel("[a,d] = -(1+q) bc", a * d - d * a + RadicalScalar(ExactScalar(1) + q_power(1)) * (bb * c));
    NCElement z = a * d + RadicalScalar(q_power(1)) * (bb * c);
    rel("Z a = a Z", z * a - a * z);
    rel("Z d = d Z", z * d - d * z);
    rel("Z b = -b Z", z * bb + bb * z);
    rel("Z c = -c Z", z * c + c * z);
    return out;
}

}  // namespace qosp
