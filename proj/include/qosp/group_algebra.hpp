#pragma once

#include "qosp/qseries.hpp"
#include "qosp/rep.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qosp {

// exp(r z + s (pi i / (4 ln q)) z); r is stored in quarters.
struct ExpFactor {
    int r_quarters = 0;
    int s = 0;

    ExpFactor operator+(const ExpFactor& o) const { return {r_quarters + o.r_quarters, s + o.s}; }
    // Scalar picked up when this factor moves right past one x or y: q^{2r} i^s.
    ExactScalar shift() const;
    friend auto operator<=>(const ExpFactor&, const ExpFactor&) = default;
};

// x^a E y^b.
struct NCMonomial {
    int a = 0;
    ExpFactor e;
    int b = 0;

    int parity() const { return (a + b) % 2; }
    friend auto operator<=>(const NCMonomial&, const NCMonomial&) = default;
};

class NCElement {
public:
    NCElement() = default;
    NCElement(const RadicalScalar& c);  // NOLINT(google-explicit-constructor)
    NCElement(const NCMonomial& m, const RadicalScalar& c = RadicalScalar(1));

    static NCElement x() { return NCElement(NCMonomial{1, {}, 0}); }
    static NCElement y() { return NCElement(NCMonomial{0, {}, 1}); }
    static NCElement exp(int r_quarters, int s) { return NCElement(NCMonomial{0, {r_quarters, s}, 0}); }

    const std::map<NCMonomial, RadicalScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    RadicalScalar coeff(const NCMonomial& m) const;
    void add_term(const NCMonomial& m, const RadicalScalar& c);

    NCElement operator-() const;
    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend NCElement operator*(const RadicalScalar& c, const NCElement& u);
    friend bool operator==(const NCElement& a, const NCElement& b) { return a.t_ == b.t_; }

private:
    std::map<NCMonomial, RadicalScalar> t_;
};

NCElement nc_mul(const NCElement& u, const NCElement& v);
inline NCElement operator*(const NCElement& u, const NCElement& v) { return nc_mul(u, v); }
// Graded commutator uv - (-1)^{|u||v|} vu for homogeneous u, v.
NCElement nc_supercommutator(const NCElement& u, int pu, const NCElement& v, int pv);

// zeta = -(q^{-1/2}/[2]) x E(-1/2, 0) y.
NCElement zeta();
NCElement zeta_power(int c);
// sum_k p_k zeta^k.
NCElement substitute_zeta(const ZetaPoly& p);

// Matrix element T_{m'm} of the universal T-matrix in the representation label.
// Closed formula, even family only.
NCElement t_element_closed(const RepLabel& label, int two_mp, int two_m);
// Pairing expansion sum over e^{abc} <m'|V+^a H^b V-^c|m>, with the H-sum resummed; any family.
NCElement t_element_duality(const RepLabel& label, int two_mp, int two_m);
// Product of the deformed exponentials, truncated by the representation; any family.
NCElement t_element_deformed_exp(const RepLabel& label, int two_mp, int two_m);

struct JacobiParams {
    int degree = 0, alpha = 0, beta = 0;
};

struct PolynomialForm {
    NCElement prefix;  // x^d E(m/2) for m' >= m, E(m'/2) y^d for m' < m
    ZetaPoly poly;
    JacobiParams jacobi;
};

// T_{m'm} = prefix * P(zeta). Even family only.
PolynomialForm t_polynomial_form(const RepLabel& label, int two_mp, int two_m);
// little_qjacobi at Q = -q with the degree and parameters quoted for this entry.
ZetaPoly jacobi_for_entry(const RepLabel& label, int two_mp, int two_m);
// P(zeta) -> P(-zeta).
ZetaPoly reflect(const ZetaPoly& p);

struct FundamentalBlock {
    Branch branch = Branch::Plus;
    NCElement a, b, c, d;
};

// The l = 1/2 block with the quoted prefactors.
FundamentalBlock quoted_fundamental_block(Branch branch);
// The l = 1/2 block read off t_element_closed.
FundamentalBlock closed_fundamental_block(Branch branch, int lambda);

struct RelationResult {
    std::string name;
    bool pass = false;
    NCElement residual;
};

// ab = +-i q^{1/2} ba, ac = +-i q^{1/2} ca, bc = -cb, bd = -+i q^{1/2} db, cd = -+i q^{1/2} dc,
// [a,d] = -(1+q) bc; Z = ad + q bc commutes with a, d and anticommutes with b, c.
std::vector<RelationResult> fundamental_relations_check(const FundamentalBlock& blk);

}  // namespace qosp
