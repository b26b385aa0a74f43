#include "qosp/cgc.hpp"

#include "qosp/qseries.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qosp {

CgCase case_of(const RepLabel& l1, const RepLabel& l2)
{
    bool o1 = l1.family == Family::Odd, o2 = l2.family == Family::Odd;
    if (o1 && o2) return CgCase::OO;
    if (!o1 && !o2) return CgCase::EE;
    return o1 ? CgCase::OE : CgCase::EO;
}

const char* to_string(CgCase c)
{
    switch (c) {
    case CgCase::OO: return "OO";
    case CgCase::EE: return "EE";
    case CgCase::OE: return "OE";
    case CgCase::EO: return "EO";
    }
    return "?";
}

RepLabel target_label(const RepLabel& l1, const RepLabel& l2, int two_ell)
{
    int Lambda = (l1.two_ell + l2.two_ell - two_ell) / 2;
    int lambda = (l1.lambda + l2.lambda + Lambda) % 2;
    Branch b = Branch::Plus;
    if (l1.family == Family::Even && l2.family == Family::Odd) b = l1.branch;
    if (l1.family == Family::Odd && l2.family == Family::Even) b = l2.branch;
    return RepLabel::make(two_ell, lambda, b);
}

std::vector<int> coupled_two_ells(const RepLabel& l1, const RepLabel& l2)
{
    std::vector<int> out;
    for (int t = l1.two_ell + l2.two_ell; t >= std::abs(l1.two_ell - l2.two_ell); t -= 2) out.push_back(t);
    return out;
}

TensorVector apply(const RepMatrix& m, const TensorVector& v)
{
    TensorVector out(v.size());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
    return out;
}

TensorVector apply_eta(const RepMatrix& m, const TensorVector& v)
{
    TensorVector out(v.size());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.eta_at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.eta_at(i, j) * v[j];
    return out;
}

Surd CGTable::at(int two_m1, int two_m2) const
{
    auto it = entries.find({two_m1, two_m2});
    return it == entries.end() ? Surd() : it->second;
}

TensorVector CGTable::row(int two_m) const
{
    TensorVector v(static_cast<std::size_t>(l1.dim() * l2.dim()));
    for (const auto& [key, c] : entries) {
        if (key.first + key.second != two_m) continue;
        v[static_cast<std::size_t>(l1.index_of(key.first) * l2.dim() + l2.index_of(key.second))] = RadicalScalar(c);
    }
    return v;
}

namespace {

void check_coupling(const RepLabel& l1, const RepLabel& l2, int two_ell)
{
    auto ls = coupled_two_ells(l1, l2);
    if (std::find(ls.begin(), ls.end(), two_ell) == ls.end())
        throw std::invalid_argument("l outside |l1-l2| .. l1+l2");
}

std::size_t tensor_index(const RepLabel& l1, const RepLabel& l2, int two_m1, int two_m2)
{
    return static_cast<std::size_t>(l1.index_of(two_m1) * l2.dim() + l2.index_of(two_m2));
}

void store_row(CGTable& t, const TensorVector& v, int two_m)
{
    for (int i = 0; i < t.l1.dim(); ++i) {
        int m1 = t.l1.two_m_at(i), m2 = two_m - m1;
        if (!t.l2.contains(m2)) continue;
        const RadicalScalar& c = v[tensor_index(t.l1, t.l2, m1, m2)];
        if (c.is_zero()) continue;
        auto s = c.as_surd();
        if (!s) throw std::logic_error("CG coefficient is not a single surd");
        t.entries[{m1, m2}] = *s;
    }
}

TensorVector hw_vector(const RepLabel& l1, const RepLabel& l2, int two_ell)
{
    TensorVector v(static_cast<std::size_t>(l1.dim() * l2.dim()));
    int m1 = l1.two_ell, m2 = two_ell - l1.two_ell;
    Surd c(1);
    v[tensor_index(l1, l2, m1, m2)] = RadicalScalar(c);
    while (m1 - 2 >= -l1.two_ell && m2 + 2 <= l2.two_ell) {
        // coefficient of e_{m1} x e_{m2} in Delta(V+) v, with the new unknowns at (m1-2, m2+2)
        int n1 = m1 - 2, n2 = m2 + 2;
        Surd a1 = act(Gen::Vp, l1, n1).coeff;
        ExactScalar qmH2 = weight_of(l2, n2).q_power(-1);
        Surd a2 = act(Gen::Vp, l2, m2).coeff;
        ExactScalar qH1 = weight_of(l1, m1).q_power(1);
        ExactScalar sgn = sign_power(l1.parity(m1));
        c = Surd(-sgn * qH1 / qmH2) * c * a2 * a1.inverse();
        v[tensor_index(l1, l2, n1, n2)] = RadicalScalar(c);
        m1 = n1;
        m2 = n2;
    }
    return v;
}

}  // namespace

CGTable highest_weight(const RepLabel& l1, const RepLabel& l2, int two_ell)
{
    check_coupling(l1, l2, two_ell);
    CGTable t;
    t.l1 = l1;
    t.l2 = l2;
    t.two_ell = two_ell;
    t.Lambda = ((l1.two_ell + l2.two_ell - two_ell) / 2) % 2;
    TensorVector v = hw_vector(l1, l2, two_ell);
    TensorVector image = qosp::apply(coproduct_matrix(Gen::Vp, l1, l2), v);
    for (const auto& c : image)
        if (!c.is_zero()) throw std::logic_error("highest weight recurrence did not annihilate Delta(V+)");
    store_row(t, v, two_ell);
    return t;
}

Surd highest_weight_closed(const RepLabel& l1, const RepLabel& l2, int two_ell, int two_m1)
{
    check_coupling(l1, l2, two_ell);
    CgCase cs = case_of(l1, l2);
    if (cs == CgCase::EO) throw std::invalid_argument("no solved highest weight form for even x odd");
    int two_m2 = two_ell - two_m1;
    if (!l1.contains(two_m1) || !l2.contains(two_m2)) return {};
    const long j = (l1.two_ell - two_m1) / 2;
    bool plus_variant = cs == CgCase::OO || (cs == CgCase::OE && l2.branch == Branch::Plus);
    long e = j * l1.lambda + (plus_variant ? j * (j + 1) / 2 : j * (j - 1) / 2);
    // q^{(l+1) j / 2} = s^{(two_ell + 2) j}
    ExactScalar pre = sign_power(e) * ExactScalar::s_power(static_cast<int>((two_ell + 2) * j));
    if (cs == CgCase::OE) pre *= ExactScalar::omega(static_cast<int>(l2.sign() * j));
    const int L1 = l1.two_ell, L2 = l2.two_ell, L = two_ell;
    BracketProduct p;
    p.mul_factorial((L1 + L2 - L) / 2).mul_factorial((L1 + two_m1) / 2).mul_factorial((L2 + two_m2) / 2);
    p.mul_factorial(L1, -1).mul_factorial((-L1 + L2 + L) / 2, -1).mul_factorial((L1 - two_m1) / 2, -1);
    p.mul_factorial((L2 - two_m2) / 2, -1);
    return Surd(pre) * Surd::sqrt_of(p);
}

CGTable multiplet(const RepLabel& l1, const RepLabel& l2, int two_ell, Normalization norm)
{
    CGTable t = highest_weight(l1, l2, two_ell);
    t.norm = norm;
    RepLabel target = target_label(l1, l2, two_ell);
    RepMatrix lower = coproduct_matrix(Gen::Vm, l1, l2);
    TensorVector v = hw_vector(l1, l2, two_ell);
    for (int two_m = two_ell; two_m > -two_ell; two_m -= 2) {
        v = qosp::apply(lower, v);
        if (norm == Normalization::Adapted) {
            RadicalScalar inv(act(Gen::Vm, target, two_m).coeff.inverse());
            for (auto& c : v) c *= inv;
        }
        store_row(t, v, two_m - 2);
    }
    return t;
}

std::vector<ExactScalar> anticommuting_binomial(int n)
{
    if (n < 0) throw std::invalid_argument("negative binomial power");
    std::vector<ExactScalar> c;
    for (int k = 0; k <= n; ++k)
        c.push_back(q_half_power(k * (n - k)) * kfactorial(n) / (kfactorial(k) * kfactorial(n - k)));
    return c;
}

ExactScalar cgc_ksum(CgCase c, int two_l1, int two_l2, int two_ell, int two_m2, int two_m)
{
    if (c == CgCase::EO) throw std::invalid_argument("k-sum defined for OO, EE, OE");
    ExactScalar sum;
    for (int k = 0;; ++k) {
        int a0 = (two_l1 + two_ell - two_m2) / 2 - k;
        int a1 = (two_l2 + two_m2) / 2 + k;
        int a2 = (two_l1 - two_ell + two_m2) / 2 + k;
        int a3 = (two_l2 - two_m2) / 2 - k;
        int a4 = (two_ell - two_m) / 2 - k;
        if (a3 < 0 || a4 < 0 || a0 < 0) break;
        if (a1 < 0 || a2 < 0) continue;
        long e = static_cast<long>(k) * ((two_l1 + two_l2 - two_m) / 2) +
                 (c == CgCase::EE ? static_cast<long>(k) * (k + 1) / 2 : static_cast<long>(k) * (k - 1) / 2);
        BracketProduct p;
        p.mul_factorial(a0).mul_factorial(a1).mul_factorial(a2, -1).mul_factorial(a3, -1).mul_factorial(a4, -1);
        p.mul_factorial(k, -1);
        sum += sign_power(e) * ExactScalar::s_power(k * (two_ell + two_m + 2)) * p.value();
    }
    return sum;
}

namespace {

void require_closed_case(const RepLabel& l1, const RepLabel& l2)
{
    CgCase cs = case_of(l1, l2);
    if (cs == CgCase::EO) throw std::invalid_argument("closed form covers odd x even, not even x odd");
    if (cs == CgCase::EE && !(l1.branch == Branch::Plus && l2.branch == Branch::Minus))
        throw std::invalid_argument("even x even closed form needs the (Plus, Minus) pairing");
}

}  // namespace

Surd cgc_closed_form(const RepLabel& l1, const RepLabel& l2, int two_ell, int two_m1, int two_m2)
{
    require_closed_case(l1, l2);
    check_coupling(l1, l2, two_ell);
    if (!l1.contains(two_m1) || !l2.contains(two_m2)) return {};
    const int two_m = two_m1 + two_m2;
    if (std::abs(two_m) > two_ell) return {};
    CgCase cs = case_of(l1, l2);
    const long j = (l1.two_ell - two_m1) / 2;
    bool plus_variant = cs == CgCase::OO || (cs == CgCase::OE && l2.branch == Branch::Plus);
    long e = j * l1.lambda + (plus_variant ? j * (j + 1) / 2 : j * (j - 1) / 2);
    // q^{-m1 (m+1)/2}
    ExactScalar pre = sign_power(e) * ExactScalar::s_power(-two_m1 * (two_m + 2) / 2);
    if (cs == CgCase::OE) pre *= ExactScalar::omega(-l2.sign() * two_m1 / 2);
    BracketProduct p;
    p.mul_factorial((l1.two_ell - two_m1) / 2).mul_factorial((l2.two_ell - two_m2) / 2);
    p.mul_factorial((l1.two_ell + two_m1) / 2, -1).mul_factorial((l2.two_ell + two_m2) / 2, -1);
    ExactScalar ks = cgc_ksum(cs, l1.two_ell, l2.two_ell, two_ell, two_m2, two_m);
    return Surd(pre * ks) * Surd::sqrt_of(p);
}

Surd closed_normalization(const RepLabel& l1, const RepLabel& l2, int two_ell, int two_m)
{
    require_closed_case(l1, l2);
    const int n = (two_ell - two_m) / 2;
    CgCase cs = case_of(l1, l2);
    // kappa = 1, w^3, -i for OO, EE, OE
    int kappa_w = cs == CgCase::OO ? 0 : (cs == CgCase::EE ? 3 : 6);
    ExactScalar phase = ExactScalar::omega(n * kappa_w) * sign_power(static_cast<long>(n) * l1.lambda);
    ExactScalar pre = kfactorial(n) * ExactScalar::s_power(-n * (two_ell + two_m + 2)) * phase;
    BracketProduct p;
    p.mul_bracket(2, -n);
    return Surd(pre) * Surd::sqrt_of(p);
}

std::optional<QHahnForm> ksum_as_qhahn(int two_l1, int two_l2, int two_ell, int two_m2, int two_m)
{
    int f0 = (two_l1 + two_ell - two_m2) / 2, f1 = (two_l2 + two_m2) / 2, f2 = (two_l1 - two_ell + two_m2) / 2;
    int f3 = (two_l2 - two_m2) / 2, f4 = (two_ell - two_m) / 2;
    if (f0 < 0 || f1 < 0 || f2 < 0 || f3 < 0 || f4 < 0) return std::nullopt;
    QHahnForm out;
    BracketProduct p;
    p.mul_factorial(f0).mul_factorial(f1).mul_factorial(f2, -1).mul_factorial(f3, -1).mul_factorial(f4, -1);
    out.prefactor = p.value();
    out.params.alpha = (-two_ell + two_l1 + two_m2) / 2;
    out.params.beta = (two_ell - two_l1 + two_m2) / 2;
    out.params.N = (two_ell + two_l1 - two_m2) / 2;
    out.params.x = (two_ell - two_m) / 2;
    out.params.M = (two_l2 - two_m2) / 2;
    return out;
}

CheckReport closed_vs_multiplet(const RepLabel& l1, const RepLabel& l2, int two_ell)
{
    CheckReport rep;
    CGTable raw = multiplet(l1, l2, two_ell, Normalization::Recurrence);
    std::optional<Surd> ratio;
    for (int two_m = two_ell; two_m >= -two_ell; two_m -= 2) {
        Surd n = closed_normalization(l1, l2, two_ell, two_m);
        for (int i = 0; i < l1.dim(); ++i) {
            int m1 = l1.two_m_at(i), m2 = two_m - m1;
            if (!l2.contains(m2)) continue;
            Surd r = raw.at(m1, m2);
            Surd c = cgc_closed_form(l1, l2, two_ell, m1, m2) * n;
            if (r.is_zero() && c.is_zero()) continue;
            if (r.is_zero() || c.is_zero()) {
                rep.pass = false;
                rep.detail = "zero pattern differs at m1=" + std::to_string(m1) + "/2 m2=" + std::to_string(m2) + "/2";
                return rep;
            }
            Surd q = r * c.inverse();
            if (!ratio) {
                ratio = q;
            } else if (!(q == *ratio)) {
                rep.pass = false;
                rep.detail = "ratio differs at m1=" + std::to_string(m1) + "/2 m2=" + std::to_string(m2) + "/2";
                return rep;
            }
        }
    }
    return rep;
}

BlockReport block_diagonalize_check(const RepLabel& l1, const RepLabel& l2, double q, double tol)
{
    using Mat = Eigen::MatrixXcd;
    BlockReport rep;
    NumericSample at(q);
    const int n = l1.dim() * l2.dim();
    Mat G(n, n);
    std::vector<RepLabel> targets;
    int col = 0;
    for (int two_ell : coupled_two_ells(l1, l2)) {
        CGTable t = multiplet(l1, l2, two_ell, Normalization::Adapted);
        targets.push_back(target_label(l1, l2, two_ell));
        rep.block_dims.push_back(two_ell + 1);
        for (int two_m = two_ell; two_m >= -two_ell; two_m -= 2, ++col) {
            TensorVector v = t.row(two_m);
            for (int i = 0; i < n; ++i) G(i, col) = at.eval(v[static_cast<std::size_t>(i)]);
        }
    }
    int total = 0;
    for (int d : rep.block_dims) total += d;
    if (total != n) {
        rep.pass = false;
        rep.detail = "dimension count " + std::to_string(total) + " != " + std::to_string(n);
        return rep;
    }
    Eigen::PartialPivLU<Mat> lu(G);
    if (std::abs(lu.determinant()) < 1e-300) {
        rep.pass = false;
        rep.detail = "CG matrix singular";
        return rep;
    }
    auto to_eigen = [](const std::vector<Complex>& v, int dim) {
        Mat m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(i, j) = v[static_cast<std::size_t>(i * dim + j)];
        return m;
    };
    const std::pair<Gen, const char*> gens[] = {{Gen::H, "H"}, {Gen::Vp, "V+"}, {Gen::Vm, "V-"}};
    for (const auto& [g, name] : gens) {
        Mat D = lu.solve(to_eigen(coproduct_matrix(g, l1, l2).numeric(at), n) * G);
        Mat T = Mat::Zero(n, n);
        int off = 0;
        for (const RepLabel& t : targets) {
            T.block(off, off, t.dim(), t.dim()) = to_eigen(rep_matrix(g, t).numeric(at), t.dim());
            off += t.dim();
        }
        double scale = std::max(T.cwiseAbs().maxCoeff(), 1e-300);
        double dev = (D - T).cwiseAbs().maxCoeff() / scale;
        rep.max_rel_dev = std::max(rep.max_rel_dev, dev);
        if (dev > tol && rep.pass) {
            rep.pass = false;
            rep.detail = std::string("Delta(") + name + ") deviates by " + std::to_string(dev);
        }
    }
    return rep;
}

}  // namespace qosp
