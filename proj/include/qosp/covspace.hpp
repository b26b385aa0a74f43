#pragma once

#include "qosp/group_algebra.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qosp {

// Generators of the space: basis vectors e_m of one representation, largest m first.
struct Alphabet {
    std::vector<std::string> names;
    std::vector<int> parity;

    static Alphabet for_label(const RepLabel& label);
    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;
};

// Word in the generators times powers of the central symbols r and xi.
// Ordering is degree-lexicographic: longer words are larger; among equal length,
// the word with the smaller letter index at the first difference is larger.
struct Word {
    std::vector<int> letters;
    int r_power = 0;
    int xi_power = 0;

    int degree() const { return static_cast<int>(letters.size()); }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
};

class FreeElement {
public:
    FreeElement() = default;
    FreeElement(const Word& w, const RadicalScalar& c = RadicalScalar(1));

    const std::map<Word, RadicalScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    RadicalScalar coeff(const Word& w) const;
    void add_term(const Word& w, const RadicalScalar& c);
    // Largest word; the element must be nonzero.
    const Word& leading_word() const { return t_.rbegin()->first; }
    int degree() const;

    FreeElement operator-() const;
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(const RadicalScalar& c, const FreeElement& u);
    friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.t_ == b.t_; }

private:
    std::map<Word, RadicalScalar> t_;
};

// Concatenation; r is central and even, xi is central with parity xi_parity
// (commuting xi past an odd generator costs a sign; xi^2 = 0 when xi is odd).
FreeElement free_mul(const Alphabet& alpha, const FreeElement& u, const FreeElement& v, int xi_parity = 0);
FreeElement letter(int index);
FreeElement parse_free(const Alphabet& alpha, const std::string& word);
std::string to_string(const Alphabet& alpha, const Word& w);
std::string to_string(const Alphabet& alpha, const FreeElement& u);

enum class Pairing {
    Opposite,  // V_+ x V_- for even labels: eta cancels
    Same       // both factors on the same branch
};

struct CompositeTable {
    RepLabel l1, l2;
    Alphabet alphabet;
    // (two_L, two_M) -> E^L_M
    std::map<std::pair<int, int>, FreeElement> entries;
};

CompositeTable composite(int two_ell, int lambda, Pairing pairing = Pairing::Opposite, Branch branch = Branch::Plus);

enum class RelationKind {
    Zero,      // E^L_M = 0
    Constant,  // E^0_0 = r
    Xi         // E^l_M = xi e_M
};

struct RelationChoice {
    int two_L = 0;
    RelationKind kind = RelationKind::Zero;
};

struct RewriteSystem {
    Alphabet alphabet;
    // leading degree-2 word -> replacement (all words smaller)
    std::map<std::vector<int>, FreeElement> rules;
    bool has_r = false;
    bool has_xi = false;
    int xi_parity = 0;
    // quadratic part of the relation set equal to r, when present
    FreeElement r_relation;

    friend bool operator==(const RewriteSystem& a, const RewriteSystem& b) { return a.rules == b.rules; }
};

// Row-reduces the relations (pivot = largest word, leading coefficient 1) into rules.
// Throws NonSolvableLeadingTerm when a relation reduces to one without a quadratic leading word.
RewriteSystem system_from_relations(const Alphabet& alpha, const std::vector<FreeElement>& relations);
RewriteSystem extract_relations(const CompositeTable& table, const std::vector<RelationChoice>& choices);

enum class Strategy { Leftmost, Rightmost };

FreeElement reduce(const FreeElement& u, const RewriteSystem& sys, int max_steps = 100000,
                   Strategy strategy = Strategy::Leftmost);

struct Divergence {
    std::string word;
    FreeElement first, second;
};

struct ConfluenceReport {
    bool pass = true;
    int words_checked = 0;
    std::vector<Divergence> divergent;
};

// Every word of the given degree: all one-step rewrites reduce to one normal form.
ConfluenceReport confluence_check(const RewriteSystem& sys, int degree = 3);

struct CentralityReport {
    bool pass = true;
    std::string detail;
    std::vector<FreeElement> residuals;  // reduce(g E - E g) per generator
};

CentralityReport centrality_check(const RewriteSystem& sys);

// Even generators g with g^2 = 0 forced by the level-L relations.
std::vector<int> nilpotent_even_generators(const CompositeTable& table, int two_L);

// Coaction g_m -> sum_{m'} g_{m'} x T_{m'm}; T indexed [m' index][m index].
using CoactionMatrix = std::vector<std::vector<NCElement>>;
CoactionMatrix closed_coaction(const RepLabel& label);
CoactionMatrix identity_coaction(int dim);

struct CovarianceReport {
    bool pass = true;
    std::string detail;
    NCElement cofactor;                        // image = relation x cofactor when covariant
    std::map<std::vector<int>, NCElement> residual;  // reduced image by word
};

// Image of a homogeneous quadratic relation modulo the relation itself.
CovarianceReport covariance_check(const Alphabet& alpha, const FreeElement& relation, const CoactionMatrix& T);
// l = 1/2 relation E^0_0 of the given pairing against the closed coaction of one branch.
CovarianceReport coaction_covariance_check(int lambda, Branch coaction_branch, Pairing pairing = Pairing::Opposite,
                                           Branch pairing_branch = Branch::Plus);

// Commonly quoted relation sets.
// l = 1/2: xy + (-1)^lambda q^{1/2} yx (the quadratic part of the L = 0 relation).
std::vector<FreeElement> standard_relations_half(int lambda);
// l = 3/2, lambda = 0: the L = 1, 2 set (six relations, two constraints) and the final set
// (six relations, three constraints).
std::vector<FreeElement> standard_relations_three_halves_initial();
std::vector<FreeElement> standard_relations_three_halves_final();

}  // namespace qosp
