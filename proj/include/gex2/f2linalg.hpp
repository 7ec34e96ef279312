#pragma once

// Dense linear algebra over the two-element field. Vectors and matrix rows
// are packed into a single 64-bit word, so every dimension is capped at 64.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gex2 {

inline constexpr int kMaxDim = 64;

/// A vector in F_2^dim. Coordinate i lives in bit i; bits at or beyond dim are
/// always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int dim, std::uint64_t bits = 0);

  static BitVector unit(int dim, int i);
  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static BitVector parse(std::string_view text);

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1u; }
  bool is_zero() const { return bits_ == 0; }
  int weight() const;

  BitVector with(int i, bool value) const;
  /// The vector (this, tail) in F_2^(dim + tail.dim).
  BitVector concat(const BitVector& tail) const;
  /// Indices of the nonzero coordinates, ascending.
  std::vector<int> support() const;

  /// Standard inner product sum_i x_i y_i.
  bool dot(const BitVector& other) const;

  BitVector operator+(const BitVector& other) const;
  BitVector& operator+=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::uint64_t bits_ = 0;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  static BitMatrix zero(int rows, int cols) { return BitMatrix(rows, cols); }
  /// Each string is one row, column 0 first.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  static BitMatrix from_rows(const std::vector<BitVector>& rows);
  static BitMatrix from_columns(const std::vector<BitVector>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool at(int i, int j) const { return (rows_data_[i] >> j) & 1u; }
  void set(int i, int j, bool value);

  BitVector row(int i) const { return BitVector(cols_, rows_data_[i]); }
  BitVector column(int j) const;

  BitMatrix transpose() const;
  bool is_symmetric() const;
  /// Symmetric with zero diagonal.
  bool is_alternating() const;

  /// M v.
  BitVector apply(const BitVector& v) const;
  /// u^T M v.
  bool bilinear(const BitVector& u, const BitVector& v) const;

  BitMatrix operator*(const BitMatrix& other) const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  /// Rows as '0'/'1' strings joined by newlines.
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> rows_data_;
};

int rank(const BitMatrix& m);
int rank(const std::vector<BitVector>& vectors);

/// Basis of {v : M v = 0}, one vector per free column of the reduced row
/// echelon form, in increasing free-column order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Throws std::invalid_argument for non-square input.
bool is_invertible(const BitMatrix& m);

/// Throws std::invalid_argument for non-square or singular input.
BitMatrix inverse(const BitMatrix& m);

struct SymplecticBasis {
  std::vector<std::pair<BitVector, BitVector>> pairs;
  std::vector<BitVector> radical;

  /// Columns a_1, b_1, ..., a_m, b_m, r_1, ..., r_k.
  BitMatrix as_matrix() const;
};

/// Splits an alternating form into hyperbolic pairs plus its radical.
/// Throws std::invalid_argument unless B is square and alternating.
SymplecticBasis symplectic_basis(const BitMatrix& b);

}  // namespace gex2
