#pragma once

// Generalized extraspecial 2-groups as central extensions
//
//   1 -> <c> -> G -> V = F_2^l -> 1
//
// with multiplication (u, e)(v, d) = (u + v, e + d + u^T M v), where M is the
// upper-triangular cocycle of a quadratic form Q. Squares and commutators of
// this model recover Q and its polar form:
//
//   (v, e)^2 = (0, Q(v)),   [g, h] = (0, B_Q([g], [h])).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gex2/quadform.hpp"

namespace gex2 {

struct GroupElement {
  BitVector vec;
  bool central = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline constexpr int kGexMaxDim = 16;

class GexGroup {
 public:
  /// Throws std::invalid_argument if q.dim() > kGexMaxDim.
  explicit GexGroup(QuadraticForm q);

  const QuadraticForm& form() const { return form_; }
  const BitMatrix& cocycle() const { return cocycle_; }
  int dim() const { return form_.dim(); }
  std::uint64_t order() const { return std::uint64_t{2} << dim(); }

  GroupElement identity() const { return {BitVector(dim()), false}; }
  /// The central involution c = (0, 1).
  GroupElement central_element() const { return {BitVector(dim()), true}; }
  /// (e_i, 0).
  GroupElement generator(int i) const { return {BitVector::unit(dim(), i), false}; }

  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  GroupElement square(const GroupElement& g) const;
  /// g h g^-1 h^-1.
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;

  /// Elements are indexed as (vec bits << 1) | central.
  std::uint64_t index_of(const GroupElement& g) const;
  GroupElement element(std::uint64_t index) const;
  std::vector<GroupElement> elements() const;

  /// Serialization: "gex:" followed by the form spec.
  std::string to_string() const;
  static GexGroup parse(std::string_view text);

 private:
  void check(const GroupElement& g) const;

  QuadraticForm form_;
  BitMatrix cocycle_;
};

GexGroup from_form(const QuadraticForm& q);

/// {(v, e) : v in the radical of the polar form}.
std::vector<GroupElement> center(const GexGroup& g);
/// <c> when the polar form is nonzero, trivial otherwise.
std::vector<GroupElement> commutator_subgroup(const GexGroup& g);
/// <c> when Q is not identically zero, trivial otherwise.
std::vector<GroupElement> squares_subgroup(const GexGroup& g);
/// Squares times commutators.
std::vector<GroupElement> frattini(const GexGroup& g);

/// Frattini subgroup central and equal to [G, G] of order 2; in the model
/// this is exactly a nonzero polar form.
bool is_generalized_extraspecial(const GexGroup& g);

/// Q_G on G/<c>, read off squares and commutators of the lifts (e_i, 0).
QuadraticForm q_from_group(const GexGroup& g);

/// (G1 x G2)/<(c1, c2)>, realized on Q1 + Q2. Throws std::invalid_argument
/// when either side has trivial Frattini subgroup.
GexGroup central_product(const GexGroup& g1, const GexGroup& g2);

/// G x Z_2^n.
GexGroup direct_z2(const GexGroup& g, int n);

enum class GroupBase {
  ElementaryAbelian,  // Z_2 (the line <c>) alone; z2rank extra factors
  CyclicFour,         // Z_4
  Q8Power,            // Q8^{*m}, m >= 1
  Q8PowerD8,          // Q8^{*(m-1)} * D8, m >= 1
  Q8PowerZ4,          // Q8^{*m} * Z4, m >= 1
};

/// Isomorphism type written as base x Z_2^z2rank.
struct GroupClass {
  GroupBase base = GroupBase::ElementaryAbelian;
  int m = 0;
  int z2rank = 0;

  static GroupClass elementary_abelian(int z2rank) { return {GroupBase::ElementaryAbelian, 0, z2rank}; }
  static GroupClass q8_power(int m, int z2rank) { return {GroupBase::Q8Power, m, z2rank}; }
  static GroupClass q8_power_d8(int m, int z2rank) { return {GroupBase::Q8PowerD8, m, z2rank}; }
  /// Q8^{*m} * Z4; m == 0 normalizes to CyclicFour.
  static GroupClass q8_power_z4(int m, int z2rank);

  std::uint64_t order() const;
  /// Compact token without spaces, e.g. "Q8^*2*D8xZ2^2", "Q8xZ2", "Z4".
  std::string to_string() const;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

GroupClass classify_group(const GexGroup& g);
/// The group class whose Q_G lies in the given form class.
GroupClass group_class(const FormClass& cls);

/// Group with an explicit multiplication table and a designated central
/// involution (or none).
class TableGroup {
 public:
  /// table[a * order + b] = a * b. Validates closure and identity only.
  TableGroup(int order, std::vector<std::uint16_t> table, int central = -1);

  static TableGroup from_model(const GexGroup& g);
  /// Quaternion group with elements 1, -1, i, -i, j, -j, k, -k (indices 0..7);
  /// central involution -1 at index 1.
  static TableGroup quaternion();
  /// Dihedral group of order 8: index r^a s^b -> a + 4 b; central r^2 at index 2.
  static TableGroup dihedral();
  /// Z_4 = {0, 1, 2, 3}; central involution 2.
  static TableGroup cyclic_four();

  int order() const { return order_; }
  int identity() const { return identity_; }
  int central() const { return central_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;

  bool is_associative() const;
  std::vector<int> center() const;
  /// Subgroup generated by the given elements.
  std::vector<int> generated(const std::vector<int>& gens) const;
  /// Generated by all commutators.
  std::vector<int> commutator_subgroup() const;
  /// Generated by all squares.
  std::vector<int> squares_subgroup() const;
  std::vector<int> frattini() const;

 private:
  int order_;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  int central_;
};

/// Q_G for a table group, using the designated central involution as c.
/// The quotient G/<c> must be elementary abelian; throws otherwise.
QuadraticForm q_from_table(const TableGroup& g);

inline constexpr int kIsoOracleMaxOrder = 64;

/// Exhaustive search for an isomorphism between two table groups:
/// generator images are tried in index order after pruning by order,
/// element-order census and centralizer sizes. Throws above
/// kIsoOracleMaxOrder.
bool iso_oracle(const TableGroup& a, const TableGroup& b);
bool iso_oracle(const GexGroup& a, const GexGroup& b);

}  // namespace gex2
