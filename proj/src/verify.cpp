#include "qosp/verify.hpp"

#include "qosp/cgc.hpp"
#include "qosp/covspace.hpp"
#include "qosp/group_algebra.hpp"
#include "qosp/qseries.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace qosp {

namespace {

constexpr double kBlockTolerance = 1e-9;
const double kBlockSamples[] = {0.3, 0.55, 0.8};

std::vector<RepLabel> labels_up_to(int max_two_ell)
{
    std::vector<RepLabel> out;
    for (int t = 0; t <= max_two_ell; ++t)
        for (int lam : {0, 1}) {
            out.push_back(RepLabel::make(t, lam, Branch::Plus));
            if (t % 2 == 1) out.push_back(RepLabel::make(t, lam, Branch::Minus));
        }
    return out;
}

std::string pair_name(const RepLabel& a, const RepLabel& b)
{
    return a.to_string() + " x " + b.to_string();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    int checked = 0;

    void fail(const std::string& why)
    {
        if (pass) detail = why;
        pass = false;
    }
};

CriterionResult timed(const std::string& id, const std::string& name, double budget, const std::function<Outcome()>& body)
{
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.budget_seconds = budget;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = o.pass;
    r.detail = o.detail.empty() ? std::to_string(o.checked) + " cases" : o.detail;
    if (r.pass && r.seconds > budget) {
        r.pass = false;
        r.detail = "runtime over budget";
    }
    return r;
}

Outcome relations_1()
{
    Outcome o;
    for (const RepLabel& l : labels_up_to(7)) {
        CheckReport r = defining_relations_check(l);
        ++o.checked;
        if (!r.pass) o.fail(l.to_string() + ": " + r.detail);
    }
    return o;
}

Outcome star_2()
{
    Outcome o;
    for (const RepLabel& l : labels_up_to(5)) {
        CheckReport r = grade_star_check(l);
        ++o.checked;
        if (!r.pass) o.fail(l.to_string() + ": " + r.detail);
    }
    return o;
}

// Pairs covered by the closed forms: OO, EE as Plus x Minus, OE with either branch.
std::vector<std::pair<RepLabel, RepLabel>> closed_form_pairs(int max_two_ell)
{
    std::vector<std::pair<RepLabel, RepLabel>> out;
    for (int t1 = 0; t1 <= max_two_ell; ++t1)
        for (int t2 = 0; t2 <= max_two_ell; ++t2)
            for (int l1 : {0, 1})
                for (int l2 : {0, 1}) {
                    if (t1 % 2 == 0 && t2 % 2 == 0) {
                        out.emplace_back(RepLabel::make(t1, l1), RepLabel::make(t2, l2));
                    } else if (t1 % 2 == 1 && t2 % 2 == 1) {
                        out.emplace_back(RepLabel::make(t1, l1, Branch::Plus), RepLabel::make(t2, l2, Branch::Minus));
                    } else if (t1 % 2 == 0) {
                        for (Branch b : {Branch::Plus, Branch::Minus})
                            out.emplace_back(RepLabel::make(t1, l1), RepLabel::make(t2, l2, b));
                    }
                }
    return out;
}

Outcome cgc_3()
{
    Outcome o;
    for (const auto& [a, b] : closed_form_pairs(4))
        for (int two_ell : coupled_two_ells(a, b)) {
            CheckReport r = closed_vs_multiplet(a, b, two_ell);
            ++o.checked;
            if (!r.pass) o.fail(pair_name(a, b) + " l=" + std::to_string(two_ell) + "/2: " + r.detail);
        }
    return o;
}

Outcome qhahn_4()
{
    Outcome o;
    for (int t1 = 0; t1 <= 4; ++t1)
        for (int t2 = 0; t2 <= 4; ++t2) {
            CgCase c;
            if (t1 % 2 == 0 && t2 % 2 == 0) c = CgCase::OO;
            else if (t1 % 2 == 1 && t2 % 2 == 1) c = CgCase::EE;
            else if (t1 % 2 == 0) c = CgCase::OE;
            else continue;
            for (int L = std::abs(t1 - t2); L <= t1 + t2; L += 2)
                for (int m2 = -t2; m2 <= t2; m2 += 2)
                    for (int m = -L; m <= L; m += 2) {
                        if (std::abs(m - m2) > t1) continue;
                        auto form = ksum_as_qhahn(t1, t2, L, m2, m);
                        if (!form) continue;
                        const HahnParams& h = form->params;
                        bool params_ok = h.alpha == (-L + t1 + m2) / 2 && h.beta == (L - t1 + m2) / 2 &&
                                         h.N == (L + t1 - m2) / 2 && h.x == (L - m) / 2 && h.M == (t2 - m2) / 2;
                        ExactScalar rhs = form->prefactor * qhahn(h.M, h.x, h.alpha, h.beta, h.N, minus_q());
                        ++o.checked;
                        if (!params_ok || !(cgc_ksum(c, t1, t2, L, m2, m) == rhs))
                            o.fail(std::string(to_string(c)) + " 2l1=" + std::to_string(t1) + " 2l2=" + std::to_string(t2) +
                                   " 2l=" + std::to_string(L) + " 2m2=" + std::to_string(m2) + " 2m=" + std::to_string(m));
                    }
        }
    return o;
}

Outcome blocks_5()
{
    Outcome o;
    auto labels = labels_up_to(3);
    double worst = 0.0;
    for (const RepLabel& a : labels)
        for (const RepLabel& b : labels) {
            // even x even couples into eta-free irreps only for opposite branches
            if (a.family == Family::Even && b.family == Family::Even && a.branch == b.branch) continue;
            int total = 0;
            for (double q : kBlockSamples) {
                BlockReport r = block_diagonalize_check(a, b, q, kBlockTolerance);
                ++o.checked;
                worst = std::max(worst, r.max_rel_dev);
                total = 0;
                for (int d : r.block_dims) total += d;
                if (!r.pass) o.fail(pair_name(a, b) + " q=" + std::to_string(q) + ": " + r.detail);
            }
            if (total != a.dim() * b.dim()) o.fail(pair_name(a, b) + ": dimension count");
        }
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d cases, max rel dev %.2e", o.checked, worst);
        o.detail = buf;
    }
    return o;
}

std::vector<RepLabel> even_labels_up_to(int max_two_ell)
{
    std::vector<RepLabel> out;
    for (const RepLabel& l : labels_up_to(max_two_ell))
        if (l.family == Family::Even) out.push_back(l);
    return out;
}

Outcome tmatrix_6()
{
    Outcome o;
    for (const RepLabel& l : even_labels_up_to(3))
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                int mp = l.two_m_at(i), m = l.two_m_at(j);
                ++o.checked;
                if (!(t_element_closed(l, mp, m) == t_element_duality(l, mp, m)))
                    o.fail(l.to_string() + " m'=" + std::to_string(mp) + "/2 m=" + std::to_string(m) + "/2");
            }
    return o;
}

Outcome jacobi_7(bool reflected)
{
    Outcome o;
    for (const RepLabel& l : even_labels_up_to(3))
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j) {
                int mp = l.two_m_at(i), m = l.two_m_at(j);
                PolynomialForm f = t_polynomial_form(l, mp, m);
                ++o.checked;
                std::string where = l.to_string() + " m'=" + std::to_string(mp) + "/2 m=" + std::to_string(m) + "/2";
                if (!(f.prefix * substitute_zeta(f.poly) == t_element_closed(l, mp, m)))
                    o.fail(where + ": prefix * P(zeta) differs from the matrix element");
                ZetaPoly p = reflected ? reflect(f.poly) : f.poly;
                if (!(p == little_qjacobi(f.jacobi.degree, f.jacobi.alpha, f.jacobi.beta, minus_q())))
                    o.fail(where + ": P(zeta) != p_" + std::to_string(f.jacobi.degree) + "^(" +
                           std::to_string(f.jacobi.alpha) + "," + std::to_string(f.jacobi.beta) + ")(" +
                           (reflected ? "-zeta" : "zeta") + ")");
            }
    return o;
}

Outcome fundamental_8()
{
    Outcome o;
    for (Branch b : {Branch::Plus, Branch::Minus})
        for (const RelationResult& r : fundamental_relations_check(quoted_fundamental_block(b))) {
            ++o.checked;
            if (!r.pass) o.fail(std::string(b == Branch::Plus ? "+" : "-") + " branch: " + r.name);
        }
    return o;
}

Outcome covspace_9()
{
    Outcome o;
    for (int lam : {0, 1}) {
        CompositeTable t = composite(1, lam);
        RewriteSystem sys = extract_relations(t, {{0, RelationKind::Constant}});
        FreeElement r_word(Word{{}, 1, 0});
        RewriteSystem quoted = system_from_relations(t.alphabet, {standard_relations_half(lam)[0] - r_word});
        ++o.checked;
        if (!(sys == quoted)) o.fail("l=1/2 lambda=" + std::to_string(lam) + " relation differs");
        if (nilpotent_even_generators(t, 2).empty()) o.fail("l=1/2 lambda=" + std::to_string(lam) + ": x^2=0 detector silent");
    }
    CompositeTable t = composite(3, 0);
    RewriteSystem pre = extract_relations(t, {{2, RelationKind::Zero}, {4, RelationKind::Zero}});
    RewriteSystem fin = extract_relations(t, {{2, RelationKind::Zero}, {4, RelationKind::Zero}, {0, RelationKind::Zero}});
    o.checked += 2;
    if (!(pre == system_from_relations(t.alphabet, standard_relations_three_halves_initial())))
        o.fail("l=3/2 L=1,2 relations differ");
    if (!(fin == system_from_relations(t.alphabet, standard_relations_three_halves_final())))
        o.fail("l=3/2 final relations differ");
    ConfluenceReport c1 = confluence_check(pre);
    bool xyz = false;
    for (const auto& d : c1.divergent) xyz = xyz || d.word == "xyz";
    if (c1.pass || !xyz) o.fail("pre-constraint system does not diverge on xyz");
    if (!confluence_check(fin).pass) o.fail("final system not confluent at degree 3");
    std::vector<int> nil = nilpotent_even_generators(t, 6);
    if (nil != std::vector<int>{0}) o.fail("l=3/2: x^2=0 detector did not single out x");
    return o;
}

Outcome covariance_10(bool same_branch)
{
    Outcome o;
    for (int lam : {0, 1}) {
        if (same_branch) {
            for (Branch b : {Branch::Plus, Branch::Minus}) {
                CovarianceReport r = coaction_covariance_check(lam, b, Pairing::Same, b);
                ++o.checked;
                if (!r.pass) o.fail("lambda=" + std::to_string(lam) + ": " + r.detail);
            }
            continue;
        }
        bool any = false;
        std::string why;
        for (Branch b : {Branch::Plus, Branch::Minus}) {
            CovarianceReport r = coaction_covariance_check(lam, b);
            ++o.checked;
            any = any || r.pass;
            if (!r.pass) why += std::string(b == Branch::Plus ? " [+ coaction] " : " [- coaction] ") + r.detail;
        }
        if (!any) o.fail("lambda=" + std::to_string(lam) + ":" + why);
    }
    return o;
}

}  // namespace

std::vector<std::string> suite_names()
{
    return {"relations", "star", "cgc", "qhahn", "blocks", "tmatrix", "jacobi", "fundamental", "covspace", "covariance", "all"};
}

std::vector<CriterionResult> run_suite(const std::string& suite)
{
    std::vector<CriterionResult> out;
    bool all = suite == "all";
    bool known = all;
    auto want = [&](const char* s) {
        bool hit = all || suite == s;
        known = known || hit;
        return hit;
    };
    if (want("relations")) out.push_back(timed("1", "algebra relations, 2l <= 7", 10, relations_1));
    if (want("star")) out.push_back(timed("2", "grade star, 2l <= 5", 10, star_2));
    if (want("cgc")) out.push_back(timed("3", "closed CGC vs multiplet, 2li <= 4", 60, cgc_3));
    if (want("qhahn")) out.push_back(timed("4", "k-sum as Q-Hahn at Q=-q, 2li <= 4", 60, qhahn_4));
    if (want("blocks")) out.push_back(timed("5", "block diagonalization, 2li <= 3", 30, blocks_5));
    if (want("tmatrix")) out.push_back(timed("6", "T-matrix closed vs pairing route, 2l <= 3", 60, tmatrix_6));
    if (want("jacobi")) {
        out.push_back(timed("7", "polynomial part = little Q-Jacobi at Q=-q, 2l <= 3", 30, [] { return jacobi_7(false); }));
        CriterionResult r = timed("7b", "polynomial part = little Q-Jacobi at -zeta", 30, [] { return jacobi_7(true); });
        r.supplementary = true;
        out.push_back(r);
    }
    if (want("fundamental")) out.push_back(timed("8", "l=1/2 block relations and central element", 5, fundamental_8));
    if (want("covspace")) out.push_back(timed("9", "covariant spaces l=1/2, 3/2", 30, covspace_9));
    if (want("covariance")) {
        out.push_back(timed("10", "l=1/2 relation covariant under the coaction", 30, [] { return covariance_10(false); }));
        CriterionResult r = timed("10b", "same-branch l=1/2 relation covariant", 30, [] { return covariance_10(true); });
        r.supplementary = true;
        out.push_back(r);
    }
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

std::string format_line(const CriterionResult& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2f s / %.0f s)", r.seconds, r.budget_seconds);
    std::string tag = r.supplementary ? (r.pass ? "INFO-PASS" : "INFO-FAIL") : (r.pass ? "PASS" : "FAIL");
    return tag + " criterion " + r.id + ": " + r.name + buf + " - " + r.detail;
}

}  // namespace qosp
