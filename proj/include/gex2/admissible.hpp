#pragma once

// Admissible quadratic forms: forms with a basis v_1..v_l such that Q(v_i) = 1
// for every i and every v_i pairs nontrivially (B_Q(v_i, v_j) = 1) with some
// other basis vector. Three independent deciders live here: a lookup on the
// isometry class, an explicit basis construction on the normal form, and an
// exhaustive backtracking search.

#include <optional>
#include <vector>

#include "gex2/quadform.hpp"

namespace gex2 {

struct AdmissibleBasis {
  std::vector<BitVector> vectors;
};

/// Checks the three defining conditions directly: the vectors form a basis,
/// each has Q-value 1, and each has a partner under B_Q.
bool is_valid_admissible_basis(const QuadraticForm& q, const AdmissibleBasis& basis);

/// Decided from classify(q): Plus with m1 >= 2, Minus with m1 >= 1, or QOne
/// with m1 >= 2. Zero summands never matter.
bool is_admissible(const QuadraticForm& q);

/// Explicit basis on the normal form, pulled back through
/// normal_form_witness. Empty when q is not admissible.
std::optional<AdmissibleBasis> admissible_witness(const QuadraticForm& q);

/// Basis for the standard representative of an admissible class, in the
/// coordinates of standard_form(cls). Throws if the class is not admissible.
AdmissibleBasis standard_admissible_basis(const FormClass& cls);

inline constexpr int kBruteforceGuaranteedDim = 6;
inline constexpr int kBruteforceMaxDim = 16;

/// Depth-first search over {v : Q(v) = 1} in increasing order of the packed
/// coordinates, keeping the chosen vectors independent. Returns the first
/// admissible basis in that order. Branches are cut only when they provably
/// cannot complete (span or partner exhausted). Throws std::invalid_argument
/// above kBruteforceMaxDim.
std::optional<AdmissibleBasis> is_admissible_bruteforce(const QuadraticForm& q);

}  // namespace gex2
