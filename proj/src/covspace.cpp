#include "qosp/covspace.hpp"

#include "qosp/cgc.hpp"
#include "qosp/errors.hpp"
#include "qosp/scalar_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qosp {

Alphabet Alphabet::for_label(const RepLabel& label)
{
    Alphabet a;
    static const char* small[] = {"x", "y", "z", "w"};
    for (int i = 0; i < label.dim(); ++i) {
        a.names.push_back(label.dim() <= 4 ? small[i] : "e" + std::to_string(i));
        a.parity.push_back(label.parity(label.two_m_at(i)));
    }
    return a;
}

int Alphabet::index_of(const std::string& name) const
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown generator '" + name + "'");
    return static_cast<int>(it - names.begin());
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.letters.size(); ++i)
        if (a.letters[i] != b.letters[i]) return b.letters[i] <=> a.letters[i];
    if (auto c = a.r_power <=> b.r_power; c != 0) return c;
    return a.xi_power <=> b.xi_power;
}

FreeElement::FreeElement(const Word& w, const RadicalScalar& c)
{
    add_term(w, c);
}

RadicalScalar FreeElement::coeff(const Word& w) const
{
    auto it = t_.find(w);
    return it == t_.end() ? RadicalScalar() : it->second;
}

void FreeElement::add_term(const Word& w, const RadicalScalar& c)
{
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

int FreeElement::degree() const
{
    int d = 0;
    for (const auto& [w, c] : t_) d = std::max(d, w.degree());
    return d;
}

FreeElement FreeElement::operator-() const
{
    FreeElement r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o)
{
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o)
{
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

FreeElement operator*(const RadicalScalar& c, const FreeElement& u)
{
    FreeElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : u.t_) r.add_term(w, c * v);
    return r;
}

FreeElement free_mul(const Alphabet& alpha, const FreeElement& u, const FreeElement& v, int xi_parity)
{
    FreeElement out;
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            Word w;
            w.letters = a.letters;
            w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
            w.r_power = a.r_power + b.r_power;
            w.xi_power = a.xi_power + b.xi_power;
            if (xi_parity == 1 && w.xi_power >= 2) continue;
            int pb = 0;
            for (int l : b.letters) pb += alpha.parity[static_cast<std::size_t>(l)];
            long e = static_cast<long>(xi_parity) * a.xi_power * pb;
            out.add_term(w, RadicalScalar(sign_power(e)) * ca * cb);
        }
    }
    return out;
}

FreeElement letter(int index)
{
    return FreeElement(Word{{index}, 0, 0});
}

FreeElement parse_free(const Alphabet& alpha, const std::string& text)
{
    Word w;
    bool single = std::all_of(alpha.names.begin(), alpha.names.end(), [](const std::string& n) { return n.size() == 1; });
    std::vector<std::string> tokens;
    if (single && text.find(' ') == std::string::npos) {
        for (char ch : text) tokens.emplace_back(1, ch);
    } else {
        std::istringstream in(text);
        for (std::string t; in >> t;) tokens.push_back(t);
    }
    for (const std::string& t : tokens) {
        if (t == "r") ++w.r_power;
        else if (t == "xi") ++w.xi_power;
        else w.letters.push_back(alpha.index_of(t));
    }
    return FreeElement(w);
}

std::string to_string(const Alphabet& alpha, const Word& w)
{
    std::string s;
    for (int l : w.letters) s += alpha.names[static_cast<std::size_t>(l)];
    for (int k = 0; k < w.r_power; ++k) s += "r";
    for (int k = 0; k < w.xi_power; ++k) s += "xi";
    return s.empty() ? "1" : s;
}

std::string to_string(const Alphabet& alpha, const FreeElement& u)
{
    if (u.is_zero()) return "0";
    std::string s;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(it->second) + ")*" + to_string(alpha, it->first);
    }
    return s;
}

CompositeTable composite(int two_ell, int lambda, Pairing pairing, Branch branch)
{
    CompositeTable t;
    t.l1 = RepLabel::make(two_ell, lambda, branch);
    Branch other = branch == Branch::Plus ? Branch::Minus : Branch::Plus;
    t.l2 = RepLabel::make(two_ell, lambda, pairing == Pairing::Opposite && two_ell % 2 == 1 ? other : branch);
    t.alphabet = Alphabet::for_label(t.l1);
    for (int two_L : coupled_two_ells(t.l1, t.l2)) {
        CGTable cg = multiplet(t.l1, t.l2, two_L, Normalization::Recurrence);
        for (int two_M = two_L; two_M >= -two_L; two_M -= 2) {
            FreeElement e;
            for (const auto& [key, c] : cg.entries) {
                if (key.first + key.second != two_M) continue;
                e.add_term(Word{{t.l1.index_of(key.first), t.l2.index_of(key.second)}, 0, 0}, RadicalScalar(c));
            }
            t.entries[{two_L, two_M}] = e;
        }
    }
    return t;
}

RewriteSystem system_from_relations(const Alphabet& alpha, const std::vector<FreeElement>& relations)
{
    std::set<Word> all;
    for (const auto& r : relations)
        for (const auto& [w, c] : r.terms()) all.insert(w);
    std::vector<Word> cols(all.rbegin(), all.rend());  // largest first
    std::map<Word, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;

    std::vector<std::vector<RadicalScalar>> m;
    for (const auto& r : relations) {
        std::vector<RadicalScalar> row(cols.size());
        for (const auto& [w, c] : r.terms()) row[col_of[w]] = c;
        m.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        RadicalScalar inv = m[rank][c].inverse();
        for (auto& v : m[rank]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            RadicalScalar f = m[i][c];
            for (std::size_t j = c; j < cols.size(); ++j)
                if (!m[rank][j].is_zero()) m[i][j] -= f * m[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    RewriteSystem sys;
    sys.alphabet = alpha;
    for (std::size_t i = 0; i < rank; ++i) {
        const Word& lead = cols[pivots[i]];
        if (lead.degree() != 2 || lead.r_power != 0 || lead.xi_power != 0)
            throw NonSolvableLeadingTerm("relation without a quadratic leading word: " + to_string(alpha, lead));
        FreeElement rhs;
        for (std::size_t j = pivots[i] + 1; j < cols.size(); ++j) rhs.add_term(cols[j], -m[i][j]);
        for (const auto& [w, c] : rhs.terms()) {
            if (w.r_power > 0) sys.has_r = true;
            if (w.xi_power > 0) sys.has_xi = true;
        }
        sys.rules[lead.letters] = rhs;
    }
    return sys;
}

RewriteSystem extract_relations(const CompositeTable& table, const std::vector<RelationChoice>& choices)
{
    std::vector<FreeElement> rels;
    FreeElement r_rel;
    int xi_parity = 0;
    for (const RelationChoice& ch : choices) {
        if (ch.kind == RelationKind::Constant && ch.two_L != 0)
            throw std::invalid_argument("the constant r belongs to L = 0");
        if (ch.kind == RelationKind::Xi) {
            if (ch.two_L != table.l1.two_ell) throw std::invalid_argument("xi relations need L = l");
            int Lambda = (2 * table.l1.two_ell - ch.two_L) / 2 % 2;
            xi_parity = (Lambda + table.l1.lambda) % 2;
        }
        bool found = false;
        for (const auto& [key, e] : table.entries) {
            if (key.first != ch.two_L) continue;
            found = true;
            FreeElement rel = e;
            if (ch.kind == RelationKind::Constant) {
                r_rel = e;
                rel.add_term(Word{{}, 1, 0}, RadicalScalar(-1));
            } else if (ch.kind == RelationKind::Xi) {
                rel.add_term(Word{{table.l1.index_of(key.second)}, 0, 1}, RadicalScalar(-1));
            }
            rels.push_back(rel);
        }
        if (!found) throw std::invalid_argument("L not present in the composite table");
    }
    RewriteSystem sys = system_from_relations(table.alphabet, rels);
    sys.r_relation = r_rel;
    sys.xi_parity = xi_parity;
    return sys;
}

namespace {

// One rewrite of word w at position p; returns the replacement element.
FreeElement rewrite_at(const RewriteSystem& sys, const Word& w, std::size_t p, const FreeElement& rhs)
{
    Word pre{{w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(p)}, 0, 0};
    Word post{{w.letters.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.letters.end()}, w.r_power, w.xi_power};
    FreeElement mid = free_mul(sys.alphabet, FreeElement(pre), rhs, sys.xi_parity);
    return free_mul(sys.alphabet, mid, FreeElement(post), sys.xi_parity);
}

const FreeElement* rule_at(const RewriteSystem& sys, const Word& w, std::size_t p)
{
    auto it = sys.rules.find({w.letters[p], w.letters[p + 1]});
    return it == sys.rules.end() ? nullptr : &it->second;
}

}  // namespace

FreeElement reduce(const FreeElement& u, const RewriteSystem& sys, int max_steps, Strategy strategy)
{
    FreeElement cur = u;
    for (int step = 0;; ++step) {
        bool applied = false;
        auto try_word = [&](const Word& w, const RadicalScalar& c) {
            std::size_t n = w.letters.size();
            if (n < 2) return false;
            for (std::size_t k = 0; k + 1 < n; ++k) {
                std::size_t p = strategy == Strategy::Leftmost ? k : n - 2 - k;
                if (const FreeElement* rhs = rule_at(sys, w, p)) {
                    Word copy = w;
                    RadicalScalar cc = c;
                    cur.add_term(copy, -cc);
                    cur += cc * rewrite_at(sys, copy, p, *rhs);
                    return true;
                }
            }
            return false;
        };
        if (strategy == Strategy::Leftmost) {
            for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it)
                if ((applied = try_word(it->first, it->second))) break;
        } else {
            for (auto it = cur.terms().begin(); it != cur.terms().end(); ++it)
                if ((applied = try_word(it->first, it->second))) break;
        }
        if (!applied) return cur;
        if (step >= max_steps) throw StepBudgetExceeded("reduction did not finish within the step budget");
    }
}

ConfluenceReport confluence_check(const RewriteSystem& sys, int degree)
{
    ConfluenceReport rep;
    const int n = sys.alphabet.size();
    std::vector<int> idx(static_cast<std::size_t>(degree), 0);
    while (true) {
        Word w{idx, 0, 0};
        ++rep.words_checked;
        std::vector<FreeElement> forms;
        for (std::size_t p = 0; p + 1 < w.letters.size(); ++p) {
            const FreeElement* rhs = rule_at(sys, w, p);
            if (!rhs) continue;
            forms.push_back(reduce(rewrite_at(sys, w, p, *rhs), sys));
        }
        for (std::size_t k = 1; k < forms.size(); ++k) {
            if (!(forms[k] == forms[0])) {
                rep.pass = false;
                rep.divergent.push_back({to_string(sys.alphabet, w), forms[0], forms[k]});
                break;
            }
        }
        int pos = degree - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return rep;
}

CentralityReport centrality_check(const RewriteSystem& sys)
{
    CentralityReport rep;
    if (!sys.has_r) {
        rep.detail = "no constant r in the system";
        return rep;
    }
    const FreeElement& e = sys.r_relation;
    for (int g = 0; g < sys.alphabet.size(); ++g) {
        FreeElement comm = free_mul(sys.alphabet, letter(g), e, sys.xi_parity) - free_mul(sys.alphabet, e, letter(g), sys.xi_parity);
        FreeElement res = reduce(comm, sys);
        rep.residuals.push_back(res);
        if (!res.is_zero() && rep.pass) {
            rep.pass = false;
            rep.detail = sys.alphabet.names[static_cast<std::size_t>(g)] + " E - E " + sys.alphabet.names[static_cast<std::size_t>(g)] +
                         " reduces to " + to_string(sys.alphabet, res);
        }
    }
    return rep;
}

std::vector<int> nilpotent_even_generators(const CompositeTable& table, int two_L)
{
    RewriteSystem sys = extract_relations(table, {{two_L, RelationKind::Zero}});
    std::vector<int> out;
    for (int g = 0; g < sys.alphabet.size(); ++g) {
        auto it = sys.rules.find({g, g});
        if (it != sys.rules.end() && it->second.is_zero() && sys.alphabet.parity[static_cast<std::size_t>(g)] == 0)
            out.push_back(g);
    }
    return out;
}

CoactionMatrix closed_coaction(const RepLabel& label)
{
    CoactionMatrix T(static_cast<std::size_t>(label.dim()));
    for (int i = 0; i < label.dim(); ++i)
        for (int j = 0; j < label.dim(); ++j) {
            int mp = label.two_m_at(i), m = label.two_m_at(j);
            T[static_cast<std::size_t>(i)].push_back(label.family == Family::Even ? t_element_closed(label, mp, m)
                                                                                  : t_element_duality(label, mp, m));
        }
    return T;
}

CoactionMatrix identity_coaction(int dim)
{
    CoactionMatrix T(static_cast<std::size_t>(dim), std::vector<NCElement>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = NCElement(RadicalScalar(1));
    return T;
}

CovarianceReport covariance_check(const Alphabet& alpha, const FreeElement& relation, const CoactionMatrix& T)
{
    CovarianceReport rep;
    if (relation.is_zero() || relation.degree() != 2) throw std::invalid_argument("covariance needs a nonzero quadratic relation");
    for (const auto& [w, c] : relation.terms())
        if (w.degree() != 2 || w.r_power || w.xi_power) throw std::invalid_argument("relation must be homogeneous quadratic");
    RewriteSystem sys = system_from_relations(alpha, {relation});
    const int n = alpha.size();
    auto par = [&](int i) { return alpha.parity[static_cast<std::size_t>(i)]; };

    std::map<std::vector<int>, NCElement> image;
    for (const auto& [w, c] : relation.terms()) {
        int i = w.letters[0], k = w.letters[1];
        for (int ip = 0; ip < n; ++ip) {
            const NCElement& t1 = T[static_cast<std::size_t>(ip)][static_cast<std::size_t>(i)];
            if (t1.is_zero()) continue;
            for (int kp = 0; kp < n; ++kp) {
                const NCElement& t2 = T[static_cast<std::size_t>(kp)][static_cast<std::size_t>(k)];
                if (t2.is_zero()) continue;
                // (g' x T)(g'' x T') = (-1)^{|T||g''|} g'g'' x TT'
                long e = static_cast<long>((par(ip) + par(i)) % 2) * par(kp);
                image[{ip, kp}] += RadicalScalar(sign_power(e)) * c * nc_mul(t1, t2);
            }
        }
    }
    const std::vector<int>& lead = sys.rules.begin()->first;
    RadicalScalar lead_coeff = relation.coeff(Word{lead, 0, 0});
    rep.cofactor = lead_coeff.inverse() * image[lead];

    std::map<std::vector<int>, NCElement> reduced;
    for (const auto& [w, v] : image) {
        auto it = sys.rules.find(w);
        if (it == sys.rules.end()) {
            reduced[w] += v;
            continue;
        }
        for (const auto& [rw, rc] : it->second.terms()) reduced[rw.letters] += rc * v;
    }
    for (const auto& [w, v] : reduced) {
        if (v.is_zero()) continue;
        rep.residual[w] = v;
        if (rep.pass) {
            rep.pass = false;
            rep.detail = "image has a nonzero " + to_string(alpha, Word{w, 0, 0}) + " component after reduction";
        }
    }
    return rep;
}

CovarianceReport coaction_covariance_check(int lambda, Branch coaction_branch, Pairing pairing, Branch pairing_branch)
{
    CompositeTable t = composite(1, lambda, pairing, pairing_branch);
    const FreeElement& rel = t.entries.at({0, 0});
    return covariance_check(t.alphabet, rel, closed_coaction(RepLabel::make(1, lambda, coaction_branch)));
}

namespace {

FreeElement w2(int a, int b, const ExactScalar& c)
{
    return FreeElement(Word{{a, b}, 0, 0}, RadicalScalar(c));
}

RadicalScalar sqrt3()
{
    return RadicalScalar(Surd(ExactScalar(1), BracketRadical({3})));
}

enum { X = 0, Y = 1, Z = 2, W = 3 };

}  // namespace

std::vector<FreeElement> standard_relations_half(int lambda)
{
    return {w2(X, Y, ExactScalar(1)) + w2(Y, X, sign_power(lambda) * q_half_power(1))};
}

std::vector<FreeElement> standard_relations_three_halves_initial()
{
    const ExactScalar q = q_power(1), one(1);
    std::vector<FreeElement> r;
    r.push_back(w2(X, Y, one) + w2(Y, X, q_half_power(3)));
    r.push_back(w2(X, Z, one) - w2(Z, X, q_power(3)));
    r.push_back(w2(X, W, q_power(-2) - one + q) - w2(W, X, kbracket(2)) +
                w2(Y, Z, q_half_power(-1) * (q_power(2) - one + q_power(-2))));
    r.push_back(w2(Y, Z, q_power(2) - one + q_power(-1)) + w2(Z, Y, q * kbracket(2)) + w2(X, W, q_half_power(1) * kbracket(3)));
    r.push_back(w2(Y, W, one) - w2(W, Y, q_power(3)));
    r.push_back(w2(Z, W, one) + w2(W, Z, q_half_power(3)));
    r.push_back(w2(Y, Y, one) - sqrt3() * w2(X, Z, q_half_power(-3)));
    r.push_back(w2(Z, Z, one) - sqrt3() * w2(Y, W, q_half_power(-3)));
    return r;
}

std::vector<FreeElement> standard_relations_three_halves_final()
{
    const ExactScalar one(1);
    std::vector<FreeElement> r;
    r.push_back(w2(X, Y, one) + w2(Y, X, q_half_power(3)));
    r.push_back(w2(X, Z, one) - w2(Z, X, q_power(3)));
    r.push_back(w2(X, W, one) + w2(W, X, q_half_power(9)));
    r.push_back(w2(Y, Z, one) + w2(Z, Y, q_half_power(3)));
    r.push_back(w2(Y, W, one) - w2(W, Y, q_power(3)));
    r.push_back(w2(Z, W, one) + w2(W, Z, q_half_power(3)));
    r.push_back(w2(Y, Y, one) - sqrt3() * w2(X, Z, q_half_power(-3)));
    r.push_back(w2(Z, Z, one) - sqrt3() * w2(Y, W, q_half_power(-3)));
    r.push_back(w2(Y, Z, one) + w2(X, W, q_half_power(-3) * kbracket(3)));
    return r;
}

}  // namespace qosp
