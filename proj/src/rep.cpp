#include "qosp/rep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qosp {

RepLabel RepLabel::make(int two_ell, int lambda, Branch branch)
{
    if (two_ell < 0) throw std::invalid_argument("highest weight must be nonnegative");
    if (lambda != 0 && lambda != 1) throw std::invalid_argument("lambda must be 0 or 1");
    RepLabel l;
    l.two_ell = two_ell;
    l.lambda = lambda;
    l.family = (two_ell % 2 == 0) ? Family::Odd : Family::Even;
    l.branch = (l.family == Family::Even) ? branch : Branch::Plus;
    return l;
}

bool RepLabel::contains(int two_m) const
{
    return two_m <= two_ell && two_m >= -two_ell && (two_ell - two_m) % 2 == 0;
}

int RepLabel::parity(int two_m) const
{
    return ((two_ell - two_m) / 2 + lambda) % 2;
}

std::vector<int> RepLabel::parities() const
{
    std::vector<int> p;
    for (int i = 0; i < dim(); ++i) p.push_back(parity(two_m_at(i)));
    return p;
}

std::string RepLabel::to_string() const
{
    std::string l = (two_ell % 2 == 0) ? std::to_string(two_ell / 2) : std::to_string(two_ell) + "/2";
    std::string out = "l=" + l + " lambda=" + std::to_string(lambda);
    out += (family == Family::Odd) ? " odd" : (branch == Branch::Plus ? " even+" : " even-");
    return out;
}

ExactScalar Weight::q_power(int k) const
{
    return ExactScalar::monomial(Cyclo::omega_power(k * eta_units), k * quarters);
}

Weight weight_of(const RepLabel& label, int two_m)
{
    return {two_m, label.eta_units()};
}

namespace {

Surd root_of_brackets(std::initializer_list<int> up, std::initializer_list<int> down)
{
    BracketProduct p;
    for (int n : up) p.mul_bracket(n, 1);
    for (int n : down) p.mul_bracket(n, -1);
    return Surd::sqrt_of(p);
}

}  // namespace

ActResult act(Gen g, const RepLabel& label, int two_m)
{
    if (!label.contains(two_m)) throw std::invalid_argument("basis vector outside representation");
    ActResult r;
    const int L = label.two_ell;
    switch (g) {
    case Gen::H:
        r.two_m = two_m;
        r.weight = weight_of(label, two_m);
        r.coeff = Surd(ExactScalar(Rational(two_m, 4)));
        return r;
    case Gen::Vp: {
        r.two_m = two_m + 2;
        if (two_m == L) return r;
        int lm = (L - two_m) / 2, lp = (L + two_m) / 2;
        Surd root = root_of_brackets({lm, lp + 1}, {2});
        r.coeff = Surd(ExactScalar(label.sign())) * root;
        return r;
    }
    case Gen::Vm: {
        r.two_m = two_m - 2;
        if (two_m == -L) return r;
        int lm = (L - two_m) / 2, lp = (L + two_m) / 2;
        Surd root = root_of_brackets({lp, lm + 1}, {2});
        if (label.family == Family::Odd)
            r.coeff = Surd(sign_power(lm - 1)) * root;
        else
            r.coeff = Surd(sign_power(lm) * ExactScalar(Cyclo::i())) * root;
        return r;
    }
    }
    return r;
}

ActResult act_power(Gen g, int a, const RepLabel& label, int two_m)
{
    if (a < 0) throw std::invalid_argument("negative power");
    if (!label.contains(two_m)) throw std::invalid_argument("basis vector outside representation");
    ActResult r;
    r.two_m = two_m;
    if (a == 0) {
        r.coeff = Surd(1);
        return r;
    }
    if (g == Gen::H) throw std::invalid_argument("act_power is for V+ and V-");
    const int L = label.two_ell;
    const int lm = (L - two_m) / 2, lp = (L + two_m) / 2;
    if (g == Gen::Vp) {
        r.two_m = two_m + 2 * a;
        if (a > lm) return r;
        // b^a sqrt([l-m]! [l+m+a]! / ([2]^a [l+m]! [l-m-a]!))
        BracketProduct p;
        p.mul_factorial(lm).mul_factorial(lp + a).mul_bracket(2, -a).mul_factorial(lp, -1).mul_factorial(lm - a, -1);
        long sgn = (label.sign() < 0 && a % 2 == 1) ? 1 : 0;
        r.coeff = Surd(sign_power(sgn)) * Surd::sqrt_of(p);
        return r;
    }
    r.two_m = two_m - 2 * a;
    if (a > lp) return r;
    // sqrt([l+m]! [l-m+a]! / ([2]^a [l-m]! [l+m-a]!)) with the accumulated phases
    BracketProduct p;
    p.mul_factorial(lp).mul_factorial(lm + a).mul_bracket(2, -a).mul_factorial(lm, -1).mul_factorial(lp - a, -1);
    long tri = static_cast<long>(a) * (a - 1) / 2;
    ExactScalar phase;
    if (label.family == Family::Odd)
        phase = sign_power(static_cast<long>(a) * (lm - 1) + tri);
    else
        phase = sign_power(static_cast<long>(a) * lm + tri) * ExactScalar(Cyclo::omega_power(2 * a));
    r.coeff = Surd(phase) * Surd::sqrt_of(p);
    return r;
}

RepMatrix::RepMatrix(std::vector<int> basis_parity, int gen_parity)
    : n_(static_cast<int>(basis_parity.size())), gen_parity_(gen_parity % 2), parity_(std::move(basis_parity)),
      a_(static_cast<std::size_t>(n_ * n_)), e_(static_cast<std::size_t>(n_ * n_))
{
}

RepMatrix RepMatrix::identity(std::vector<int> basis_parity)
{
    RepMatrix m(std::move(basis_parity), 0);
    for (int i = 0; i < m.n_; ++i) m.at(i, i) = RadicalScalar(1);
    return m;
}

bool RepMatrix::has_eta() const
{
    for (const auto& v : e_)
        if (!v.is_zero()) return true;
    return false;
}

bool RepMatrix::is_zero() const
{
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return !has_eta();
}

RepMatrix RepMatrix::operator-() const
{
    RepMatrix r = *this;
    for (auto& v : r.a_) v = -v;
    for (auto& v : r.e_) v = -v;
    return r;
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& o)
{
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) {
        a_[k] += o.a_[k];
        e_[k] += o.e_[k];
    }
    return *this;
}

RepMatrix& RepMatrix::operator-=(const RepMatrix& o)
{
    return *this += -o;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b)
{
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    bool ea = a.has_eta(), eb = b.has_eta();
    if (ea && eb) throw std::domain_error("product of two eta-linear matrices");
    RepMatrix r(a.parity_, a.gen_parity_ + b.gen_parity_);
    const int n = a.n_;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const RadicalScalar& aik = a.at(i, k);
            const RadicalScalar& eik = a.eta_at(i, k);
            if (aik.is_zero() && eik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const RadicalScalar& bkj = b.at(k, j);
                if (!aik.is_zero() && !bkj.is_zero()) r.at(i, j) += aik * bkj;
                if (ea && !eik.is_zero() && !bkj.is_zero()) r.eta_at(i, j) += eik * bkj;
                if (eb && !aik.is_zero() && !b.eta_at(k, j).is_zero()) r.eta_at(i, j) += aik * b.eta_at(k, j);
            }
        }
    }
    return r;
}

RepMatrix operator*(const RadicalScalar& c, const RepMatrix& m)
{
    RepMatrix r = m;
    for (auto& v : r.a_) v *= c;
    for (auto& v : r.e_) v *= c;
    return r;
}

RepMatrix RepMatrix::super_kron(const RepMatrix& A, const RepMatrix& B)
{
    if (A.has_eta() && B.has_eta()) throw std::domain_error("tensor of two eta-linear matrices");
    std::vector<int> par;
    for (int i = 0; i < A.n_; ++i)
        for (int j = 0; j < B.n_; ++j) par.push_back((A.parity_[i] + B.parity_[j]) % 2);
    RepMatrix r(std::move(par), A.gen_parity_ + B.gen_parity_);
    const int nb = B.n_;
    for (int i1 = 0; i1 < A.n_; ++i1)
        for (int j1 = 0; j1 < A.n_; ++j1) {
            const RadicalScalar& a = A.at(i1, j1);
            const RadicalScalar& ae = A.eta_at(i1, j1);
            if (a.is_zero() && ae.is_zero()) continue;
            // u = basis vector j1 of the first factor
            RadicalScalar sgn((B.gen_parity_ * A.parity_[j1]) % 2 ? -1 : 1);
            for (int i2 = 0; i2 < nb; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    const RadicalScalar& b = B.at(i2, j2);
                    const RadicalScalar& be = B.eta_at(i2, j2);
                    int I = i1 * nb + i2, J = j1 * nb + j2;
                    if (!a.is_zero() && !b.is_zero()) r.at(I, J) += sgn * a * b;
                    if (!ae.is_zero() && !b.is_zero()) r.eta_at(I, J) += sgn * ae * b;
                    if (!a.is_zero() && !be.is_zero()) r.eta_at(I, J) += sgn * a * be;
                }
        }
    return r;
}

RepMatrix RepMatrix::super_adjoint() const
{
    RepMatrix r(parity_, gen_parity_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int e = ((parity_[i] + gen_parity_) * (parity_[i] + parity_[j])) % 2;
            RadicalScalar s(e ? -1 : 1);
            r.at(i, j) = s * at(j, i).conjugate();
            // eta is imaginary: conj(eta) = -eta
            r.eta_at(i, j) = -(s * eta_at(j, i).conjugate());
        }
    return r;
}

std::vector<Complex> RepMatrix::numeric(const NumericSample& at_q) const
{
    const Complex eta(0.0, std::numbers::pi / (2.0 * std::log(at_q.q())));
    std::vector<Complex> out(a_.size());
    for (std::size_t k = 0; k < a_.size(); ++k) {
        out[k] = at_q.eval(a_[k]);
        if (!e_[k].is_zero()) out[k] += eta * at_q.eval(e_[k]);
    }
    return out;
}

std::string RepMatrix::first_difference(const RepMatrix& o) const
{
    if (n_ != o.n_) return "size";
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!(at(i, j) == o.at(i, j)) || !(eta_at(i, j) == o.eta_at(i, j)))
                return std::to_string(i) + "," + std::to_string(j);
    return {};
}

RepMatrix supercommutator(const RepMatrix& A, const RepMatrix& B)
{
    RepMatrix ba = B * A;
    if ((A.gen_parity() * B.gen_parity()) % 2) return A * B + ba;
    return A * B - ba;
}

RepMatrix rep_matrix(Gen g, const RepLabel& label)
{
    RepMatrix m(label.parities(), g == Gen::H ? 0 : 1);
    for (int j = 0; j < label.dim(); ++j) {
        int two_m = label.two_m_at(j);
        ActResult r = act(g, label, two_m);
        if (r.coeff.is_zero()) continue;
        int i = label.index_of(r.two_m);
        m.at(i, j) = RadicalScalar(r.coeff);
        if (g == Gen::H && r.weight.eta_units != 0) m.eta_at(i, j) = RadicalScalar(ExactScalar(Rational(r.weight.eta_units, 2)));
    }
    return m;
}

RepMatrix rep_matrix(const std::vector<Gen>& word, const RepLabel& label)
{
    RepMatrix m = RepMatrix::identity(label.parities());
    for (Gen g : word) m = m * rep_matrix(g, label);
    return m;
}

RepMatrix q_power_H(const RepLabel& label, int k)
{
    RepMatrix m(label.parities(), 0);
    for (int j = 0; j < label.dim(); ++j) m.at(j, j) = RadicalScalar(weight_of(label, label.two_m_at(j)).q_power(k));
    return m;
}

namespace {

RadicalScalar bracket_2H_value(const Weight& w)
{
    // q^{2H} = s^{2 quarters} w^{2 eta_units}
    return RadicalScalar(qnumber_of_power(2 * w.quarters, 2 * w.eta_units));
}

}  // namespace

RepMatrix bracket_2H(const RepLabel& label)
{
    RepMatrix m(label.parities(), 0);
    for (int j = 0; j < label.dim(); ++j) m.at(j, j) = bracket_2H_value(weight_of(label, label.two_m_at(j)));
    return m;
}

RepMatrix coproduct_matrix(Gen g, const RepLabel& l1, const RepLabel& l2)
{
    if (g == Gen::H) {
        return RepMatrix::super_kron(rep_matrix(Gen::H, l1), RepMatrix::identity(l2.parities())) +
               RepMatrix::super_kron(RepMatrix::identity(l1.parities()), rep_matrix(Gen::H, l2));
    }
    return RepMatrix::super_kron(rep_matrix(g, l1), q_power_H(l2, -1)) +
           RepMatrix::super_kron(q_power_H(l1, 1), rep_matrix(g, l2));
}

RepMatrix coproduct_q_power_H(const RepLabel& l1, const RepLabel& l2, int k)
{
    return RepMatrix::super_kron(q_power_H(l1, k), q_power_H(l2, k));
}

RepMatrix coproduct_bracket_2H(const RepLabel& l1, const RepLabel& l2)
{
    std::vector<int> par;
    for (int a : l1.parities())
        for (int b : l2.parities()) par.push_back((a + b) % 2);
    RepMatrix m(std::move(par), 0);
    for (int i = 0; i < l1.dim(); ++i)
        for (int j = 0; j < l2.dim(); ++j) {
            int I = i * l2.dim() + j;
            m.at(I, I) = bracket_2H_value(weight_of(l1, l1.two_m_at(i)) + weight_of(l2, l2.two_m_at(j)));
        }
    return m;
}

namespace {

CheckReport relations_on(const RepMatrix& H, const RepMatrix& Vp, const RepMatrix& Vm, const RepMatrix& b2H,
                         const std::string& where)
{
    CheckReport rep;
    RadicalScalar half(ExactScalar(Rational(1, 2)));
    auto check = [&](const RepMatrix& lhs, const RepMatrix& rhs, const char* name) {
        if (!rep.pass) return;
        std::string d = lhs.first_difference(rhs);
        if (!d.empty()) {
            rep.pass = false;
            rep.detail = where + ": " + name + " fails at entry " + d;
        }
    };
    check(supercommutator(H, Vp), half * Vp, "[H,V+] = V+/2");
    check(supercommutator(H, Vm), -(half * Vm), "[H,V-] = -V-/2");
    check(supercommutator(Vp, Vm), -b2H, "{V+,V-} = -[2H]");
    return rep;
}

}  // namespace

CheckReport defining_relations_check(const RepLabel& label)
{
    return relations_on(rep_matrix(Gen::H, label), rep_matrix(Gen::Vp, label), rep_matrix(Gen::Vm, label),
                        bracket_2H(label), label.to_string());
}

CheckReport coproduct_relations_check(const RepLabel& l1, const RepLabel& l2)
{
    return relations_on(coproduct_matrix(Gen::H, l1, l2), coproduct_matrix(Gen::Vp, l1, l2),
                        coproduct_matrix(Gen::Vm, l1, l2), coproduct_bracket_2H(l1, l2),
                        l1.to_string() + " x " + l2.to_string());
}

RepMatrix star_image(Gen g, const RepLabel& label)
{
    const int eps = (label.lambda + 1) % 2;
    const RadicalScalar sgn_eps(eps ? -1 : 1);
    if (label.family == Family::Odd) {
        switch (g) {
        case Gen::H: return rep_matrix(Gen::H, label);
        case Gen::Vp: return sgn_eps * rep_matrix(Gen::Vm, label);
        case Gen::Vm: return -(sgn_eps * rep_matrix(Gen::Vp, label));
        }
    }
    const RadicalScalar bi(ExactScalar(Cyclo::i() * Cyclo(label.sign())));
    switch (g) {
    case Gen::H: {
        RepMatrix h = rep_matrix(Gen::H, label);
        for (int j = 0; j < label.dim(); ++j) h.eta_at(j, j) -= RadicalScalar(label.sign());
        return h;
    }
    case Gen::Vp: return (bi * sgn_eps) * rep_matrix(Gen::Vm, label);
    case Gen::Vm: return -((bi * sgn_eps) * rep_matrix(Gen::Vp, label));
    }
    return {};
}

CheckReport grade_star_check(const RepLabel& label)
{
    CheckReport rep;
    const std::pair<Gen, const char*> gens[] = {{Gen::H, "H"}, {Gen::Vp, "V+"}, {Gen::Vm, "V-"}};
    for (const auto& [g, name] : gens) {
        RepMatrix lhs = star_image(g, label);
        RepMatrix rhs = rep_matrix(g, label).super_adjoint();
        std::string d = lhs.first_difference(rhs);
        if (!d.empty()) {
            rep.pass = false;
            rep.detail = label.to_string() + ": rho(" + name + "*) != rho(" + name + ")* at entry " + d;
            return rep;
        }
    }
    return rep;
}

}  // namespace qosp
