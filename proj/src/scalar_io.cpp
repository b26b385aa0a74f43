#include "qosp/scalar_io.hpp"

#include "qosp/errors.hpp"

#include <cctype>

namespace qosp {

std::string to_string(const Laurent& p)
{
    if (p.is_zero()) return "((0/1))*s^0";
    std::string out;
    for (int e = p.low(); e <= p.high(); ++e) {
        Cyclo c = p.coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c.to_string() + "*s^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const ExactScalar& v)
{
    if (v.is_polynomial()) return to_string(v.num());
    return "(" + to_string(v.num()) + ")/(" + to_string(v.den()) + ")";
}

std::string to_string(const Surd& v)
{
    std::string out = to_string(v.coeff());
    if (v.rad().empty()) return out;
    out += " * sqrt(";
    for (int n : v.rad().brackets()) out += "[" + std::to_string(n) + "]";
    return out + ")";
}

std::string to_string(const RadicalScalar& v)
{
    if (v.is_zero()) return to_string(ExactScalar());
    std::string out;
    for (const auto& [r, c] : v.terms()) {
        if (!out.empty()) out += "  ++  ";
        out += "{" + to_string(Surd(c, r)) + "}";
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : t_(t) {}

    void skip_ws()
    {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ == t_.size();
    }
    bool peek(std::string_view lit)
    {
        skip_ws();
        return t_.substr(pos_, lit.size()) == lit;
    }
    void expect(std::string_view lit)
    {
        if (!peek(lit))
            throw ParseError("expected '" + std::string(lit) + "' at offset " + std::to_string(pos_));
        pos_ += lit.size();
    }
    bool accept(std::string_view lit)
    {
        if (!peek(lit)) return false;
        pos_ += lit.size();
        return true;
    }

    std::string integer()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer at offset " + std::to_string(start));
        return std::string(t_.substr(start, pos_ - start));
    }

    Cyclo cyclo()
    {
        expect("(");
        Rational c[4];
        do {
            expect("(");
            std::string num = integer();
            expect("/");
            std::string den = integer();
            expect(")");
            Rational r(num + "/" + den);
            if (r.get_den() == 0) throw ParseError("zero denominator in rational");
            r.canonicalize();
            int k = 0;
            if (accept("*w")) {
                k = 1;
                if (accept("^")) k = std::stoi(integer());
            }
            if (k < 0 || k > 3) throw ParseError("omega power out of range");
            c[k] += r;
        } while (accept("+"));
        expect(")");
        return Cyclo(c[0], c[1], c[2], c[3]);
    }

    Laurent laurent()
    {
        Laurent p;
        do {
            Cyclo c = cyclo();
            expect("*s^");
            int e = std::stoi(integer());
            p += Laurent::monomial(c, e);
        } while (accept("+"));
        return p;
    }

    ExactScalar scalar()
    {
        skip_ws();
        if (t_.substr(pos_, 3) == "(((") {
            expect("(");
            Laurent num = laurent();
            expect(")");
            expect("/");
            expect("(");
            Laurent den = laurent();
            expect(")");
            if (den.is_zero()) throw ParseError("zero denominator");
            return ExactScalar(num, den);
        }
        return ExactScalar(laurent());
    }

private:
    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

Laurent parse_laurent(std::string_view text)
{
    Parser p(text);
    Laurent r = p.laurent();
    if (!p.at_end()) throw ParseError("trailing input");
    return r;
}

ExactScalar parse_scalar(std::string_view text)
{
    Parser p(text);
    ExactScalar r = p.scalar();
    if (!p.at_end()) throw ParseError("trailing input");
    return r;
}

}  // namespace qosp
