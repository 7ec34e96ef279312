#pragma once

// The groups E(n) of even signed basis products in the Clifford algebra
// Cl(0, n) (generators anticommute and square to -1), their presentation as
// the extension modeled by g0_form, and the map psi between the two.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gex2/gexgroup.hpp"

namespace gex2 {

inline constexpr int kCliffordMaxN = 17;

/// +/- e_S, where e_S is the product of the generators in S taken in
/// increasing order. Generator e_i (1-based) is bit i - 1 of subset.
struct CliffordElement {
  bool negative = false;
  std::uint32_t subset = 0;

  int grade() const;
  bool is_even() const { return grade() % 2 == 0; }
  std::string to_string() const;

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Number of sign flips in e_S e_T = +/- e_{S xor T}: one per pair i in S,
/// j in T with i > j, plus one per generator squared.
int reorder_sign(std::uint32_t s, std::uint32_t t);

/// Product in Cl(0, n). Throws std::invalid_argument if either subset uses
/// generators beyond n.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b, int n);

class EGroup {
 public:
  /// Throws std::invalid_argument unless 2 <= n <= kCliffordMaxN.
  explicit EGroup(int n);

  int n() const { return n_; }
  std::uint64_t order() const { return std::uint64_t{1} << n_; }
  bool contains(const CliffordElement& x) const;
  CliffordElement mul(const CliffordElement& a, const CliffordElement& b) const;
  /// Signed even subsets in increasing (subset, sign) order.
  std::vector<CliffordElement> elements() const;

 private:
  int n_;
};

EGroup e_group(int n);

/// The form on F_2^k with every diagonal value and every polar coefficient
/// equal to 1: the extension generated by -1, e_1..e_k with e_i^2 = -1 and
/// pairwise anticommuting e_i. Requires 1 <= k <= kGexMaxDim.
QuadraticForm g0_form(int k);

/// Image of the word e_{i_1} ... e_{i_m} (indices in 1..n-1, any order,
/// repeats allowed) in E(n): the word itself for even length, the word times
/// e_n for odd length.
CliffordElement psi(std::span<const int> word, int n);

/// Checks that psi, composed with the identification of model elements with
/// words, is a bijective homomorphism from the model of g0_form(n - 1) onto
/// E(n), exhaustively over all pairs. Requires 2 <= n <= 10.
bool verify_psi(int n);

/// Homomorphism check on `pairs` random element pairs plus bijectivity.
/// Requires 2 <= n <= kCliffordMaxN.
bool verify_psi_sampled(int n, int pairs, std::uint64_t seed);

/// Decomposition of E(n) x Z_2 predicted by the residue of n mod 8.
GroupClass en_expected_class(int n);

struct EnTableRow {
  int n = 0;
  GroupClass computed;
  GroupClass expected;

  bool pass() const { return computed == expected; }
  /// `n=<n> residue=<n mod 8> computed=<class> expected=<class> PASS|FAIL`
  std::string to_string() const;
};

EnTableRow en_table_row(int n);
std::vector<EnTableRow> verify_en_table(int n_max);

}  // namespace gex2
