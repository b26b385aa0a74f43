#pragma once

#include "qosp/numeric.hpp"
#include "qosp/radical.hpp"

#include <string>
#include <vector>

namespace qosp {

enum class Family { Odd, Even };
enum class Branch { Plus, Minus };
enum class Gen { H, Vp, Vm };

inline int branch_sign(Branch b) { return b == Branch::Plus ? 1 : -1; }

// Irreducible representation V^(l); half-integers are carried doubled (two_ell, two_m).
struct RepLabel {
    int two_ell = 0;
    int lambda = 0;
    Family family = Family::Odd;
    Branch branch = Branch::Plus;

    // Family follows from the parity of two_ell.
    static RepLabel make(int two_ell, int lambda, Branch branch = Branch::Plus);

    int dim() const { return two_ell + 1; }
    int sign() const { return family == Family::Even ? branch_sign(branch) : 1; }
    int eta_units() const { return family == Family::Even ? branch_sign(branch) : 0; }
    // Basis order m = l, l-1, ..., -l.
    int two_m_at(int index) const { return two_ell - 2 * index; }
    int index_of(int two_m) const { return (two_ell - two_m) / 2; }
    bool contains(int two_m) const;
    int parity(int two_m) const;
    std::vector<int> parities() const;
    std::string to_string() const;

    friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

// H eigenvalue quarters/4 + eta_units * eta/2, eta = pi i / (2 ln q).
struct Weight {
    int quarters = 0;
    int eta_units = 0;

    // q^{k H} on this weight: s^{k quarters} w^{k eta_units}.
    ExactScalar q_power(int k) const;
    Weight operator+(const Weight& o) const { return {quarters + o.quarters, eta_units + o.eta_units}; }
    friend bool operator==(const Weight&, const Weight&) = default;
};

Weight weight_of(const RepLabel& label, int two_m);

struct ActResult {
    Surd coeff;      // zero when the generator annihilates the vector
    int two_m = 0;   // target vector
    Weight weight;   // H only: full eigenvalue (coeff holds its rational part)
};

ActResult act(Gen g, const RepLabel& label, int two_m);
// Closed forms for V_+^a and V_-^a; must agree with a-fold iteration of act.
ActResult act_power(Gen g, int a, const RepLabel& label, int two_m);

// Square matrix with an exact eta-linear part: value = rational + eta * eta_part.
class RepMatrix {
public:
    RepMatrix() = default;
    RepMatrix(std::vector<int> basis_parity, int gen_parity);
    static RepMatrix identity(std::vector<int> basis_parity);

    int dim() const { return n_; }
    int gen_parity() const { return gen_parity_; }
    const std::vector<int>& basis_parity() const { return parity_; }
    bool has_eta() const;

    RadicalScalar& at(int i, int j) { return a_[idx(i, j)]; }
    const RadicalScalar& at(int i, int j) const { return a_[idx(i, j)]; }
    RadicalScalar& eta_at(int i, int j) { return e_[idx(i, j)]; }
    const RadicalScalar& eta_at(int i, int j) const { return e_[idx(i, j)]; }

    RepMatrix operator-() const;
    RepMatrix& operator+=(const RepMatrix& o);
    RepMatrix& operator-=(const RepMatrix& o);
    friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
    friend RepMatrix operator-(RepMatrix a, const RepMatrix& b) { return a -= b; }
    // Rejects products where both factors carry an eta part.
    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
    friend RepMatrix operator*(const RadicalScalar& c, const RepMatrix& m);
    friend bool operator==(const RepMatrix& a, const RepMatrix& b) { return a.a_ == b.a_ && a.e_ == b.e_; }
    bool is_zero() const;

    // (A x B)(u x v) = (-1)^{|B||u|} Au x Bv.
    static RepMatrix super_kron(const RepMatrix& A, const RepMatrix& B);
    RepMatrix super_adjoint() const;

    // Row-major numeric values with eta = pi i / (2 ln q).
    std::vector<Complex> numeric(const NumericSample& at) const;
    // First differing entry as "i,j", empty when equal.
    std::string first_difference(const RepMatrix& o) const;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

    int n_ = 0;
    int gen_parity_ = 0;
    std::vector<int> parity_;
    std::vector<RadicalScalar> a_;
    std::vector<RadicalScalar> e_;
};

// Graded commutator AB - (-1)^{|A||B|} BA.
RepMatrix supercommutator(const RepMatrix& A, const RepMatrix& B);

RepMatrix rep_matrix(Gen g, const RepLabel& label);
// Product of generators, leftmost acting last.
RepMatrix rep_matrix(const std::vector<Gen>& word, const RepLabel& label);
// Diagonal q^{kH}.
RepMatrix q_power_H(const RepLabel& label, int k);
// Diagonal [2H] = (q^{2H} - q^{-2H}) / (q - q^{-1}).
RepMatrix bracket_2H(const RepLabel& label);

// Tensor basis index i1 * dim2 + i2.
RepMatrix coproduct_matrix(Gen g, const RepLabel& l1, const RepLabel& l2);
RepMatrix coproduct_q_power_H(const RepLabel& l1, const RepLabel& l2, int k);
RepMatrix coproduct_bracket_2H(const RepLabel& l1, const RepLabel& l2);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

// [H,V+-] = +-V+-/2 and {V+,V-} = -[2H].
CheckReport defining_relations_check(const RepLabel& label);
// Same relations for the coproduct images on l1 x l2.
CheckReport coproduct_relations_check(const RepLabel& l1, const RepLabel& l2);
// rho(X*) = rho(X)* for X in {H, V+, V-}.
CheckReport grade_star_check(const RepLabel& label);
// rho(X*) for the star maps: Odd H* = H, V+* = (-1)^e V-, V-* = -(-1)^e V+;
// Even H* = H - b eta, V+* = b i (-1)^e V-, V-* = -b i (-1)^e V+, e = lambda + 1.
RepMatrix star_image(Gen g, const RepLabel& label);

}  // namespace qosp
