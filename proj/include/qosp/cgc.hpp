#pragma once

#include "qosp/rep.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qosp {

// Parity pairing of the two factors (O = odd dimensional, E = even dimensional).
enum class CgCase { OO, EE, OE, EO };

CgCase case_of(const RepLabel& l1, const RepLabel& l2);
const char* to_string(CgCase c);

// Irrep carried by the l-multiplet inside l1 x l2: parity lambda1 + lambda2 + Lambda,
// Lambda = l1 + l2 - l; even targets inherit the branch of the even factor.
RepLabel target_label(const RepLabel& l1, const RepLabel& l2, int two_ell);
// Admissible couplings two_ell = two_l1 + two_l2, ..., |two_l1 - two_l2| in steps of 2.
std::vector<int> coupled_two_ells(const RepLabel& l1, const RepLabel& l2);

using TensorVector = std::vector<RadicalScalar>;
TensorVector apply(const RepMatrix& m, const TensorVector& v);
TensorVector apply_eta(const RepMatrix& m, const TensorVector& v);

enum class Normalization {
    Recurrence,  // highest coefficient 1, lower rows Delta(V-)^{l-m} applied to it
    Adapted      // each lowering divided by the target irrep's V- coefficient
};

struct CGTable {
    RepLabel l1, l2;
    int two_ell = 0;
    int Lambda = 0;
    Normalization norm = Normalization::Recurrence;
    // (two_m1, two_m2) -> coefficient; only m1 + m2 = m entries are stored, zeros omitted
    std::map<std::pair<int, int>, Surd> entries;

    Surd at(int two_m1, int two_m2) const;
    // Row of the coupled vector with weight two_m as a vector on the tensor basis.
    TensorVector row(int two_m) const;
};

// Highest weight slice from Delta(V+) v = 0 with C_{l1, l-l1} = 1. Throws on a bad l.
CGTable highest_weight(const RepLabel& l1, const RepLabel& l2, int two_ell);
// Solved form of the recurrence (OO, EE, OE only), same seed.
Surd highest_weight_closed(const RepLabel& l1, const RepLabel& l2, int two_ell, int two_m1);
CGTable multiplet(const RepLabel& l1, const RepLabel& l2, int two_ell, Normalization norm);

// (A+B)^n = sum_k c_k A^k B^{n-k} for qAB + BA = 0; returns c_0..c_n.
std::vector<ExactScalar> anticommuting_binomial(int n);

// The bracket k-sum of the closed CGC.
ExactScalar cgc_ksum(CgCase c, int two_l1, int two_l2, int two_ell, int two_m2, int two_m);
// Closed-form CGC (OO, EE with the eta-cancelling pairing, OE), without the free normalization.
Surd cgc_closed_form(const RepLabel& l1, const RepLabel& l2, int two_ell, int two_m1, int two_m2);
// m-dependent factor relating the closed form to the Recurrence multiplet:
// multiplet(m1, m2) = const * N(m) * closed(m1, m2).
Surd closed_normalization(const RepLabel& l1, const RepLabel& l2, int two_ell, int two_m);

struct HahnParams {
    int alpha = 0, beta = 0, N = 0, x = 0, M = 0;
};

struct QHahnForm {
    ExactScalar prefactor;
    HahnParams params;
};

// k-sum = prefactor * Q_M(x; alpha, beta, N; -q). Empty when a prefactor bracket argument is negative.
std::optional<QHahnForm> ksum_as_qhahn(int two_l1, int two_l2, int two_ell, int two_m2, int two_m);

// Exact comparison of closed form and multiplet for one coupling.
CheckReport closed_vs_multiplet(const RepLabel& l1, const RepLabel& l2, int two_ell);

struct BlockReport {
    bool pass = true;
    double max_rel_dev = 0.0;
    std::vector<int> block_dims;
    std::string detail;
};

// Numeric: G^{-1} Delta(X) G equals the direct sum of target irreps (X = H, V+, V-).
BlockReport block_diagonalize_check(const RepLabel& l1, const RepLabel& l2, double q, double tol = 1e-9);

}  // namespace qosp
