#pragma once

// Quadratic forms over F_2 and their classification up to isometry.
//
// A form on F_2^l is stored by its values on the standard basis,
// c_i = Q(e_i), and its polar coefficients b_ij = B_Q(e_i, e_j) for i < j:
//
//   Q(x) = sum_i c_i x_i + sum_{i<j} b_ij x_i x_j.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gex2/f2linalg.hpp"

namespace gex2 {

class QuadraticForm {
 public:
  /// The form on the zero space.
  QuadraticForm() = default;
  /// upper[i] holds b_ij in bit j for j > i; other bits must be zero.
  QuadraticForm(int dim, std::uint64_t diag, std::vector<std::uint64_t> upper);

  /// Builds Q from its diagonal values and an alternating polar matrix.
  static QuadraticForm from_polar(const BitVector& diag, const BitMatrix& polar);

  static QuadraticForm zero(int n);
  /// xy
  static QuadraticForm h_plus();
  /// x^2 + y^2 + xy
  static QuadraticForm h_minus();
  /// x^2
  static QuadraticForm q_one();

  /// Text form `l=<dim>;d=<c_1..c_l>;u=<b_12 b_13 .. b_1l b_23 ..>`.
  static QuadraticForm parse(std::string_view text);
  std::string to_string() const;

  int dim() const { return dim_; }
  bool diag(int i) const { return (diag_ >> i) & 1u; }
  BitVector diag_vector() const { return BitVector(dim_, diag_); }
  /// b_ij for i != j; zero on the diagonal.
  bool coefficient(int i, int j) const;

  bool eval(const BitVector& v) const;
  /// B_Q(u, v) = Q(u + v) + Q(u) + Q(v).
  bool bilinear(const BitVector& u, const BitVector& v) const;

  BitMatrix polar() const;
  /// Upper-triangular M with M_ii = c_i and M_ij = b_ij for i < j, so that
  /// v^T M v = Q(v) and M + M^T = polar().
  BitMatrix cocycle() const;

  bool is_zero() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int dim_ = 0;
  std::uint64_t diag_ = 0;
  std::vector<std::uint64_t> upper_;
};

/// Number of forms on F_2^dim: 2^(dim (dim + 1) / 2).
std::uint64_t form_count(int dim);
/// The index-th form on F_2^dim: diagonal bits first, then the upper
/// coefficients in row-major order (the same order as the text form).
QuadraticForm form_from_index(int dim, std::uint64_t index);

/// (Q + Q')(v, v') = Q(v) + Q'(v').
QuadraticForm direct_sum(const QuadraticForm& q, const QuadraticForm& r);

/// Returns Q o T, i.e. the form v -> Q(T v). T must be invertible.
QuadraticForm change_basis(const QuadraticForm& q, const BitMatrix& t);

enum class FormKind { Plus, Minus, QOne, Zero };

std::string_view to_string(FormKind kind);

/// Isometry class of a possibly degenerate form. The representatives are
///   Plus:  H+^m1 + 0^m2
///   Minus: H- + H+^(m1-1) + 0^m2
///   QOne:  H+^m1 + Q1 + 0^(m2-1)
///   Zero:  0^m2
/// with 2 m1 + m2 = dim.
struct FormClass {
  int dim = 0;
  int m1 = 0;
  FormKind kind = FormKind::Zero;
  int m2 = 0;

  /// Summand notation such as "H- + H+^2 + 0" (with U+2295 as the plus).
  std::string name() const;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

FormClass classify(const QuadraticForm& q);

/// The canonical representative of a class, summands ordered H-, H+..., Q1,
/// zeros.
QuadraticForm standard_form(const FormClass& cls);

bool is_isometric(const QuadraticForm& q, const QuadraticForm& r);

/// An invertible change of basis T. An isometry from Q to Q' satisfies
/// Q(v) = Q'(T v) for all v.
class Isometry {
 public:
  explicit Isometry(BitMatrix map);
  const BitMatrix& map() const { return map_; }

 private:
  BitMatrix map_;
};

inline constexpr int kIsometryOracleMaxDim = 4;

/// Exhaustive search over GL(l, F_2) for T with change_basis(r, T) == q.
/// Columns are enumerated lexicographically, so the witness is the first one
/// in that order. Throws std::invalid_argument if the dimensions differ or
/// exceed kIsometryOracleMaxDim.
std::optional<Isometry> isometry_oracle(const QuadraticForm& q, const QuadraticForm& r);

/// T with change_basis(q, T) == standard_form(classify(q)).
Isometry normal_form_witness(const QuadraticForm& q);

}  // namespace gex2
