#include "qosp/json_io.hpp"

#include "qosp/errors.hpp"
#include "qosp/scalar_io.hpp"

namespace qosp {

std::string half_to_string(int doubled)
{
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

int half_from_string(const std::string& s)
{
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return 2 * std::stoi(s);
        if (s.substr(slash + 1) != "2") throw ParseError("half-integer denominator must be 2: " + s);
        return std::stoi(s.substr(0, slash));
    } catch (const std::logic_error&) {
        throw ParseError("not a half-integer: " + s);
    }
}

Json to_json(const RadicalScalar& v)
{
    Json out = Json::array();
    for (const auto& [rad, c] : v.terms()) out.push_back({{"coeff", to_string(c)}, {"radicand", rad.brackets()}});
    return out;
}

RadicalScalar radical_from_json(const Json& j)
{
    RadicalScalar r;
    for (const auto& t : j) {
        BracketRadical rad(t.at("radicand").get<std::vector<int>>());
        r += RadicalScalar(Surd(parse_scalar(t.at("coeff").get<std::string>()), rad));
    }
    return r;
}

Json to_json(const RepLabel& l)
{
    return {{"l", half_to_string(l.two_ell)},
            {"lambda", l.lambda},
            {"family", l.family == Family::Odd ? "odd" : "even"},
            {"branch", l.branch == Branch::Plus ? "+" : "-"}};
}

RepLabel label_from_json(const Json& j)
{
    std::string b = j.value("branch", "+");
    RepLabel l = RepLabel::make(half_from_string(j.at("l").get<std::string>()), j.at("lambda").get<int>(),
                                b == "-" ? Branch::Minus : Branch::Plus);
    return l;
}

Json to_json(const CGTable& t)
{
    Json entries = Json::array();
    for (const auto& [key, c] : t.entries) {
        entries.push_back({{"m1", half_to_string(key.first)},
                           {"m2", half_to_string(key.second)},
                           {"m", half_to_string(key.first + key.second)},
                           {"coeff", to_string(c.coeff())},
                           {"radicand", c.rad().brackets()}});
    }
    return {{"l1", to_json(t.l1)},
            {"l2", to_json(t.l2)},
            {"l", half_to_string(t.two_ell)},
            {"Lambda", t.Lambda},
            {"normalization", t.norm == Normalization::Recurrence ? "recurrence" : "adapted"},
            {"entries", entries}};
}

CGTable cgtable_from_json(const Json& j)
{
    CGTable t;
    t.l1 = label_from_json(j.at("l1"));
    t.l2 = label_from_json(j.at("l2"));
    t.two_ell = half_from_string(j.at("l").get<std::string>());
    t.Lambda = j.at("Lambda").get<int>();
    t.norm = j.value("normalization", "recurrence") == "adapted" ? Normalization::Adapted : Normalization::Recurrence;
    for (const auto& e : j.at("entries")) {
        Surd c(parse_scalar(e.at("coeff").get<std::string>()), BracketRadical(e.at("radicand").get<std::vector<int>>()));
        t.entries[{half_from_string(e.at("m1").get<std::string>()), half_from_string(e.at("m2").get<std::string>())}] = c;
    }
    return t;
}

Json to_json(const NCElement& u)
{
    Json terms = Json::array();
    for (const auto& [m, c] : u.terms())
        terms.push_back({{"x", m.a}, {"r_quarters", m.e.r_quarters}, {"s", m.e.s}, {"y", m.b}, {"coeff", to_json(c)}});
    return {{"terms", terms}};
}

NCElement ncelement_from_json(const Json& j)
{
    NCElement u;
    for (const auto& t : j.at("terms")) {
        NCMonomial m{t.at("x").get<int>(), {t.at("r_quarters").get<int>(), t.at("s").get<int>()}, t.at("y").get<int>()};
        u.add_term(m, radical_from_json(t.at("coeff")));
    }
    return u;
}

Json to_json(const ZetaPoly& p)
{
    Json c = Json::array();
    for (const auto& v : p.coeffs()) c.push_back(to_string(v));
    return c;
}

Json to_json(const Alphabet& a, const FreeElement& u)
{
    Json terms = Json::array();
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        std::string w;
        for (int l : it->first.letters) w += (w.empty() ? "" : " ") + a.names[static_cast<std::size_t>(l)];
        terms.push_back({{"word", w}, {"r", it->first.r_power}, {"xi", it->first.xi_power}, {"coeff", to_json(it->second)}});
    }
    return terms;
}

namespace {

FreeElement free_from_json(const Alphabet& a, const Json& j)
{
    FreeElement u;
    for (const auto& t : j) {
        Word w = parse_free(a, t.at("word").get<std::string>()).terms().begin()->first;
        w.r_power = t.at("r").get<int>();
        w.xi_power = t.at("xi").get<int>();
        u.add_term(w, radical_from_json(t.at("coeff")));
    }
    return u;
}

}  // namespace

Json to_json(const RewriteSystem& sys)
{
    Json alpha = Json::array();
    for (int i = 0; i < sys.alphabet.size(); ++i)
        alpha.push_back({{"name", sys.alphabet.names[static_cast<std::size_t>(i)]}, {"parity", sys.alphabet.parity[static_cast<std::size_t>(i)]}});
    Json rules = Json::array();
    for (const auto& [lhs, rhs] : sys.rules) {
        std::string w = sys.alphabet.names[static_cast<std::size_t>(lhs[0])] + " " + sys.alphabet.names[static_cast<std::size_t>(lhs[1])];
        rules.push_back({{"lhs", w}, {"rhs", to_json(sys.alphabet, rhs)}});
    }
    return {{"alphabet", alpha},
            {"rules", rules},
            {"has_r", sys.has_r},
            {"has_xi", sys.has_xi},
            {"xi_parity", sys.xi_parity},
            {"r_relation", to_json(sys.alphabet, sys.r_relation)}};
}

RewriteSystem rewrite_system_from_json(const Json& j)
{
    RewriteSystem sys;
    for (const auto& g : j.at("alphabet")) {
        sys.alphabet.names.push_back(g.at("name").get<std::string>());
        sys.alphabet.parity.push_back(g.at("parity").get<int>());
    }
    for (const auto& r : j.at("rules")) {
        Word lhs = parse_free(sys.alphabet, r.at("lhs").get<std::string>()).terms().begin()->first;
        if (lhs.degree() != 2) throw ParseError("rule lhs must have two letters");
        sys.rules[lhs.letters] = free_from_json(sys.alphabet, r.at("rhs"));
    }
    sys.has_r = j.value("has_r", false);
    sys.has_xi = j.value("has_xi", false);
    sys.xi_parity = j.value("xi_parity", 0);
    if (j.contains("r_relation")) sys.r_relation = free_from_json(sys.alphabet, j.at("r_relation"));
    return sys;
}

}  // namespace qosp
