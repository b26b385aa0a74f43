#include "CLI11.hpp"

#include "qosp/errors.hpp"
#include "qosp/json_io.hpp"
#include "qosp/scalar_io.hpp"
#include "qosp/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qosp;

namespace {

struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::string backend = "exact";
    std::vector<std::string> q_text;
    std::string out;
    std::vector<double> q;
};

double parse_sample(const std::string& s)
{
    double v = 0;
    try {
        auto slash = s.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            v = std::stod(s, &used);
            if (used != s.size()) throw InvalidParameter("");
        } else {
            double a = std::stod(s.substr(0, slash)), b = std::stod(s.substr(slash + 1));
            v = a / b;
        }
    } catch (const std::exception&) {
        throw InvalidParameter("bad q sample '" + s + "'");
    }
    if (!(v > 0.0 && v < 1.0)) throw InvalidParameter("q sample " + s + " is not inside (0,1)");
    return v;
}

int half(const std::string& s, const char* what)
{
    try {
        return half_from_string(s);
    } catch (const std::exception&) {
        throw InvalidParameter(std::string("bad ") + what + " '" + s + "'");
    }
}

Branch branch_of(const std::string& s)
{
    if (s == "plus" || s == "+") return Branch::Plus;
    if (s == "minus" || s == "-") return Branch::Minus;
    throw InvalidParameter("branch must be plus or minus, got '" + s + "'");
}

RepLabel label_of(const std::string& l, int lambda, const std::string& family, const std::string& branch)
{
    int two = half(l, "l");
    if (two < 0) throw InvalidParameter("l must be nonnegative");
    if (lambda != 0 && lambda != 1) throw InvalidParameter("lambda must be 0 or 1");
    RepLabel r = RepLabel::make(two, lambda, branch_of(branch));
    if (!family.empty()) {
        Family f = family == "odd" ? Family::Odd : family == "even" ? Family::Even : throw InvalidParameter("family must be odd or even");
        if (f != r.family) throw InvalidParameter("l=" + l + " belongs to the " + (r.family == Family::Odd ? "odd" : "even") + " family");
    }
    return r;
}

std::string complex_text(Complex z)
{
    std::ostringstream os;
    os.precision(15);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

Json complex_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

template <class T>
void add_numeric(Json& j, const Common& c, const T& v)
{
    if (c.backend == "exact") return;
    Json n = Json::array();
    for (double q : c.q) n.push_back({{"q", q}, {"value", complex_json(eval_numeric(v, q))}});
    j["numeric"] = n;
}

template <class T>
std::string numeric_text(const Common& c, const T& v)
{
    if (c.backend == "exact") return "";
    std::string s;
    for (double q : c.q) s += "  [q=" + std::to_string(q) + ": " + complex_text(eval_numeric(v, q)) + "]";
    return s;
}

std::string exact_text(const Common& c, const std::string& s)
{
    return c.backend == "numeric" ? "" : s;
}

void emit(const Common& c, const Json& j, const std::string& text)
{
    std::string body = c.format == "json" ? j.dump(2) + "\n" : text;
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::path p(c.out);
    if (p.is_relative())
        if (const char* dir = std::getenv("QOSP_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    std::ofstream f(p);
    if (!f) throw InvalidParameter("cannot open output file " + p.string());
    f << body;
}

void validate(Common& c)
{
    if (c.format != "text" && c.format != "json") throw InvalidParameter("format must be text or json");
    if (c.backend != "exact" && c.backend != "numeric" && c.backend != "both")
        throw InvalidParameter("backend must be exact, numeric or both");
    for (const auto& s : c.q_text) c.q.push_back(parse_sample(s));
    if (c.q.empty() && c.backend != "exact") c.q = {0.3, 0.55, 0.8};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and numeric computations for the quantum superalgebra U_q[osp(1|2)]"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--format", c.format, "text or json")->capture_default_str();
    app.add_option("--backend", c.backend, "exact, numeric or both")->capture_default_str();
    app.add_option("--q", c.q_text, "sample points in (0,1), decimal or a/b")->delimiter(',');
    app.add_option("--out", c.out, "output file, relative paths resolve against $QOSP_OUTPUT_DIR");

    int n = 1;
    auto* bracket = app.add_subcommand("bracket", "super-bracket [n]");
    bracket->add_option("--n", n, "integer argument")->required();

    int M = 0, x = 0, alpha = 0, beta = 0, N = 0;
    auto* qh = app.add_subcommand("qhahn", "Q_M(Q^{-x}; alpha, beta, N; Q) at Q = -q");
    qh->add_option("--M", M)->required();
    qh->add_option("--x", x)->required();
    qh->add_option("--alpha", alpha)->required();
    qh->add_option("--beta", beta)->required();
    qh->add_option("--N", N)->required();

    int deg = 0;
    auto* jac = app.add_subcommand("jacobi", "coefficients of p_m^(alpha,beta)(z; Q) at Q = -q");
    jac->add_option("--m", deg)->required();
    jac->add_option("--alpha", alpha)->required();
    jac->add_option("--beta", beta)->required();

    std::string l = "1/2", family, branch = "plus", gen = "all";
    int lambda = 0;
    auto* rep = app.add_subcommand("rep", "matrices of H, V+, V- on an irreducible representation");
    rep->add_option("--l", l)->required();
    rep->add_option("--lambda", lambda);
    rep->add_option("--family", family, "odd or even");
    rep->add_option("--branch", branch, "plus or minus (even family)");
    rep->add_option("--gen", gen, "H, V+, V- or all");

    std::string l1, l2, fam1, fam2, br1 = "plus", br2, target, norm = "recurrence";
    int lam1 = 0, lam2 = 0;
    auto* cgc = app.add_subcommand("cgc", "Clebsch-Gordan tables for l1 x l2");
    cgc->add_option("--l1", l1)->required();
    cgc->add_option("--l2", l2)->required();
    cgc->add_option("--fam1", fam1);
    cgc->add_option("--fam2", fam2);
    cgc->add_option("--lambda1", lam1);
    cgc->add_option("--lambda2", lam2);
    cgc->add_option("--branch1", br1);
    cgc->add_option("--branch2", br2, "defaults to the opposite of --branch1 when both factors are even");
    cgc->add_option("--l", target, "single coupled l; all by default");
    cgc->add_option("--norm", norm, "recurrence or adapted");

    std::string route = "closed";
    auto* tmat = app.add_subcommand("tmat", "T-matrix elements in the dual group algebra");
    tmat->add_option("--l", l)->required();
    tmat->add_option("--lambda", lambda);
    tmat->add_option("--branch", branch);
    tmat->add_option("--route", route, "closed, duality or exp");

    std::string stage = "final";
    auto* cov = app.add_subcommand("covspace", "covariant quantum space relations for l = 1/2 or 3/2");
    cov->add_option("--l", l)->required();
    cov->add_option("--lambda", lambda);
    cov->add_option("--stage", stage, "pre or final (l = 3/2)");

    std::string suite;
    auto* ver = app.add_subcommand("verify", "acceptance suites");
    ver->add_option("suite", suite, "one of: relations star cgc qhahn blocks tmatrix jacobi fundamental covspace covariance all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        validate(c);
        if (*bracket) {
            if (n < 0) throw InvalidParameter("n must be nonnegative");
            ExactScalar v = kbracket(n);
            Json j{{"n", n}};
            if (c.backend != "numeric") j["exact"] = to_string(v);
            add_numeric(j, c, v);
            emit(c, j, "[" + std::to_string(n) + "] = " + exact_text(c, to_string(v)) + numeric_text(c, v) + "\n");
        } else if (*qh) {
            if (M < 0 || x < 0 || N < 0 || M > N || x > N) throw InvalidParameter("need 0 <= M, x <= N");
            ExactScalar v = qhahn(M, x, alpha, beta, N, minus_q());
            Json j{{"M", M}, {"x", x}, {"alpha", alpha}, {"beta", beta}, {"N", N}};
            if (c.backend != "numeric") j["exact"] = to_string(v);
            add_numeric(j, c, v);
            emit(c, j, "Q_M = " + exact_text(c, to_string(v)) + numeric_text(c, v) + "\n");
        } else if (*jac) {
            if (deg < 0) throw InvalidParameter("m must be nonnegative");
            ZetaPoly p = little_qjacobi(deg, alpha, beta, minus_q());
            Json j{{"m", deg}, {"alpha", alpha}, {"beta", beta}, {"coeffs", to_json(p)}};
            std::string text;
            for (int k = 0; k <= p.degree(); ++k) text += "z^" + std::to_string(k) + ": " + to_string(p.coeff(k)) + "\n";
            emit(c, j, text);
        } else if (*rep) {
            RepLabel r = label_of(l, lambda, family, branch);
            std::vector<std::pair<std::string, Gen>> gens;
            if (gen == "all" || gen == "H") gens.emplace_back("H", Gen::H);
            if (gen == "all" || gen == "V+") gens.emplace_back("V+", Gen::Vp);
            if (gen == "all" || gen == "V-") gens.emplace_back("V-", Gen::Vm);
            if (gens.empty()) throw InvalidParameter("gen must be H, V+, V- or all");
            Json j{{"label", to_json(r)}, {"matrices", Json::object()}};
            std::string text = r.to_string() + "\n";
            for (const auto& [name, g] : gens) {
                RepMatrix m = rep_matrix(g, r);
                Json rows = Json::array(), eta = Json::array();
                text += name + ":\n";
                for (int i = 0; i < m.dim(); ++i) {
                    Json row = Json::array(), erow = Json::array();
                    for (int k = 0; k < m.dim(); ++k) {
                        row.push_back(to_json(m.at(i, k)));
                        erow.push_back(to_json(m.eta_at(i, k)));
                        if (!m.at(i, k).is_zero() || !m.eta_at(i, k).is_zero()) {
                            text += "  (" + std::to_string(i) + "," + std::to_string(k) + ") " + to_string(m.at(i, k));
                            if (!m.eta_at(i, k).is_zero()) text += " + eta * " + to_string(m.eta_at(i, k));
                            text += "\n";
                        }
                    }
                    rows.push_back(row);
                    eta.push_back(erow);
                }
                j["matrices"][name] = {{"rational", rows}, {"eta", eta}};
            }
            emit(c, j, text);
        } else if (*cgc) {
            RepLabel a = label_of(l1, lam1, fam1, br1);
            int two2 = half(l2, "l2");
            if (br2.empty()) br2 = (a.family == Family::Even && two2 % 2 == 1 && br1 == "plus") ? "minus" : "plus";
            if (br2 == "plus" && a.family == Family::Even && two2 % 2 == 1 && br1 == "minus") br2 = "plus";
            RepLabel b = label_of(l2, lam2, fam2, br2);
            if (a.family == Family::Even && b.family == Family::Even && a.branch == b.branch)
                throw InvalidParameter("even x even needs opposite branches");
            if (norm != "recurrence" && norm != "adapted") throw InvalidParameter("norm must be recurrence or adapted");
            Normalization nm = norm == "adapted" ? Normalization::Adapted : Normalization::Recurrence;
            std::vector<int> ells = coupled_two_ells(a, b);
            if (!target.empty()) {
                int t = half(target, "l");
                if (std::find(ells.begin(), ells.end(), t) == ells.end()) throw InvalidParameter("l=" + target + " does not occur");
                ells = {t};
            }
            Json j{{"l1", to_json(a)}, {"l2", to_json(b)}, {"blocks", Json::array()}};
            std::string text = a.to_string() + " x " + b.to_string() + "\n";
            for (int L : ells) {
                CGTable t = multiplet(a, b, L, nm);
                Json tj = to_json(t);
                if (c.backend != "exact") {
                    std::size_t k = 0;
                    for (const auto& [key, s] : t.entries) add_numeric(tj["entries"][k++], c, s);
                }
                j["blocks"].push_back(tj);
                text += "l = " + half_to_string(L) + " (Lambda = " + std::to_string(t.Lambda) + ")\n";
                for (const auto& [key, s] : t.entries)
                    text += "  m1=" + half_to_string(key.first) + " m2=" + half_to_string(key.second) + ": " +
                            exact_text(c, to_string(s)) + numeric_text(c, s) + "\n";
            }
            emit(c, j, text);
        } else if (*tmat) {
            RepLabel r = label_of(l, lambda, "", branch);
            if (route == "closed" && r.family == Family::Odd) route = "duality";
            if (route != "closed" && route != "duality" && route != "exp") throw InvalidParameter("route must be closed, duality or exp");
            Json j{{"label", to_json(r)}, {"route", route}, {"entries", Json::array()}};
            std::string text = r.to_string() + " (" + route + ")\n";
            for (int i = 0; i < r.dim(); ++i)
                for (int k = 0; k < r.dim(); ++k) {
                    int mp = r.two_m_at(i), m = r.two_m_at(k);
                    NCElement u = route == "closed"     ? t_element_closed(r, mp, m)
                                  : route == "duality" ? t_element_duality(r, mp, m)
                                                       : t_element_deformed_exp(r, mp, m);
                    Json e = to_json(u);
                    j["entries"].push_back({{"mp", half_to_string(mp)}, {"m", half_to_string(m)}, {"element", e}});
                    text += "T[" + half_to_string(mp) + "," + half_to_string(m) + "] =";
                    for (const auto& [mono, coeff] : u.terms())
                        text += "\n    (" + to_string(coeff) + ") x^" + std::to_string(mono.a) + " E(" +
                                std::to_string(mono.e.r_quarters) + "/4," + std::to_string(mono.e.s) + ") y^" +
                                std::to_string(mono.b);
                    text += "\n";
                }
            emit(c, j, text);
        } else if (*cov) {
            int two = half(l, "l");
            if (two != 1 && two != 3) throw InvalidParameter("covspace supports l = 1/2 and l = 3/2");
            if (lambda != 0 && lambda != 1) throw InvalidParameter("lambda must be 0 or 1");
            if (stage != "pre" && stage != "final") throw InvalidParameter("stage must be pre or final");
            CompositeTable t = composite(two, lambda);
            std::vector<RelationChoice> choices;
            if (two == 1) choices = {{0, RelationKind::Constant}};
            else if (stage == "pre") choices = {{2, RelationKind::Zero}, {4, RelationKind::Zero}};
            else choices = {{2, RelationKind::Zero}, {4, RelationKind::Zero}, {0, RelationKind::Zero}};
            RewriteSystem sys = extract_relations(t, choices);
            ConfluenceReport cr = confluence_check(sys);
            CentralityReport ce = centrality_check(sys);
            std::vector<int> nil = nilpotent_even_generators(t, 2 * two);
            Json nj = Json::array();
            for (int g : nil) nj.push_back(t.alphabet.names[static_cast<std::size_t>(g)]);
            Json dj = Json::array();
            for (const auto& d : cr.divergent) dj.push_back(d.word);
            Json j{{"system", to_json(sys)},
                   {"confluent_degree3", cr.pass},
                   {"divergent_words", dj},
                   {"central", ce.pass},
                   {"nilpotent_at_top_level", nj}};
            std::string text;
            for (const auto& [lhs, rhs] : sys.rules) {
                Word w{lhs, 0, 0};
                text += to_string(t.alphabet, w) + " -> " + to_string(t.alphabet, rhs) + "\n";
            }
            if (sys.has_r) text += "r: " + to_string(t.alphabet, sys.r_relation) + "\n";
            text += std::string("degree-3 confluence: ") + (cr.pass ? "yes" : "no");
            for (const auto& d : cr.divergent) text += " " + d.word;
            text += std::string("\ncentral: ") + (ce.pass ? "yes" : "no") + "\n";
            emit(c, j, text);
        } else if (*ver) {
            std::vector<CriterionResult> rs = run_suite(suite);
            bool ok = true;
            Json j = Json::array();
            std::string text;
            for (const auto& r : rs) {
                if (!r.supplementary) ok = ok && r.pass;
                j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"supplementary", r.supplementary},
                             {"detail", r.detail}, {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}});
                text += format_line(r) + "\n";
            }
            emit(c, j, text);
            return ok ? 0 : 1;
        }
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
