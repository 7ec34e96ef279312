#include "gex2/f2linalg.hpp"

#include <bit>
#include <stdexcept>

namespace gex2 {
namespace {

std::uint64_t low_mask(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " outside [0, 64]");
  }
}

bool parity(std::uint64_t word) { return std::popcount(word) & 1; }

// Reduces rows in place to reduced row echelon form and returns the pivot
// column of each nonzero row. Pivots are taken lowest column first.
std::vector<int> row_reduce(std::vector<std::uint64_t>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < cols && next < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t found = next;
    while (found < rows.size() && !(rows[found] & bit)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r] & bit)) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

BitVector::BitVector(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  check_dim(dim);
  bits_ &= low_mask(dim);
}

BitVector BitVector::unit(int dim, int i) {
  if (i < 0 || i >= dim) throw std::out_of_range("unit vector index out of range");
  return BitVector(dim, std::uint64_t{1} << i);
}

BitVector BitVector::parse(std::string_view text) {
  check_dim(static_cast<int>(text.size()));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bit string contains '" + std::string(1, text[i]) + "'");
    }
  }
  return BitVector(static_cast<int>(text.size()), bits);
}

int BitVector::weight() const { return std::popcount(bits_); }

BitVector BitVector::with(int i, bool value) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("coordinate index out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  return BitVector(dim_, value ? (bits_ | bit) : (bits_ & ~bit));
}

BitVector BitVector::concat(const BitVector& tail) const {
  check_dim(dim_ + tail.dim_);
  return BitVector(dim_ + tail.dim_, dim_ == 64 ? bits_ : bits_ | (tail.bits_ << dim_));
}

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  for (std::uint64_t w = bits_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("dot: dimension mismatch");
  return parity(bits_ & other.bits_);
}

BitVector BitVector::operator+(const BitVector& other) const {
  BitVector out = *this;
  out += other;
  return out;
}

BitVector& BitVector::operator+=(const BitVector& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("vector sum: dimension mismatch");
  bits_ ^= other.bits_;
  return *this;
}

std::string BitVector::to_string() const {
  std::string out(dim_, '0');
  for (int i = 0; i < dim_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), rows_data_(rows, 0) {
  check_dim(rows);
  check_dim(cols);
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_data_[i] = std::uint64_t{1} << i;
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::parse(r));
  return from_rows(parsed);
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
  const int cols = rows.empty() ? 0 : rows.front().dim();
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != cols) throw std::invalid_argument("ragged matrix rows");
    m.rows_data_[i] = rows[i].bits();
  }
  return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& columns) {
  return from_rows(columns).transpose();
}

void BitMatrix::set(int i, int j, bool value) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
  const std::uint64_t bit = std::uint64_t{1} << j;
  rows_data_[i] = value ? (rows_data_[i] | bit) : (rows_data_[i] & ~bit);
}

BitVector BitMatrix::column(int j) const {
  std::uint64_t bits = 0;
  for (int i = 0; i < rows_; ++i) bits |= ((rows_data_[i] >> j) & 1u) << i;
  return BitVector(rows_, bits);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (std::uint64_t w = rows_data_[i]; w != 0; w &= w - 1) {
      t.rows_data_[std::countr_zero(w)] |= std::uint64_t{1} << i;
    }
  }
  return t;
}

bool BitMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

bool BitMatrix::is_alternating() const {
  if (!is_symmetric()) return false;
  for (int i = 0; i < rows_; ++i) {
    if (at(i, i)) return false;
  }
  return true;
}

BitVector BitMatrix::apply(const BitVector& v) const {
  if (v.dim() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::uint64_t bits = 0;
  for (int i = 0; i < rows_; ++i) bits |= std::uint64_t{parity(rows_data_[i] & v.bits())} << i;
  return BitVector(rows_, bits);
}

bool BitMatrix::bilinear(const BitVector& u, const BitVector& v) const {
  return u.dot(apply(v));
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  BitMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t w = rows_data_[i]; w != 0; w &= w - 1) {
      acc ^= other.rows_data_[std::countr_zero(w)];
    }
    out.rows_data_[i] = acc;
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    if (i > 0) out += '\n';
    out += row(i).to_string();
  }
  return out;
}

int rank(const BitMatrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).bits());
  return static_cast<int>(row_reduce(rows, m.cols()).size());
}

int rank(const std::vector<BitVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(BitMatrix::from_rows(vectors));
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).bits());
  const std::vector<int> pivots = row_reduce(rows, m.cols());

  std::uint64_t pivot_mask = 0;
  for (int p : pivots) pivot_mask |= std::uint64_t{1} << p;

  std::vector<BitVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (pivot_mask >> free & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r] >> free & 1u) v |= std::uint64_t{1} << pivots[r];
    }
    basis.emplace_back(m.cols(), v);
  }
  return basis;
}

bool is_invertible(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("is_invertible: matrix is not square");
  return rank(m) == m.rows();
}

BitMatrix inverse(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const int n = m.rows();
  // Gauss-Jordan on [M | I], packed as two words per row.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> aug(n);
  for (int i = 0; i < n; ++i) aug[i] = {m.row(i).bits(), std::uint64_t{1} << i};
  for (int col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int found = col;
    while (found < n && !(aug[found].first & bit)) ++found;
    if (found == n) throw std::invalid_argument("inverse: matrix is singular");
    std::swap(aug[col], aug[found]);
    for (int r = 0; r < n; ++r) {
      if (r != col && (aug[r].first & bit)) {
        aug[r].first ^= aug[col].first;
        aug[r].second ^= aug[col].second;
      }
    }
  }
  std::vector<BitVector> rows;
  rows.reserve(n);
  for (const auto& [left, right] : aug) rows.emplace_back(n, right);
  return n == 0 ? BitMatrix(0, 0) : BitMatrix::from_rows(rows);
}

BitMatrix SymplecticBasis::as_matrix() const {
  std::vector<BitVector> columns;
  for (const auto& [a, b] : pairs) {
    columns.push_back(a);
    columns.push_back(b);
  }
  columns.insert(columns.end(), radical.begin(), radical.end());
  if (columns.empty()) return BitMatrix(0, 0);
  return BitMatrix::from_columns(columns);
}

SymplecticBasis symplectic_basis(const BitMatrix& b) {
  if (!b.is_alternating()) {
    throw std::invalid_argument("symplectic_basis: form is not alternating");
  }
  const int n = b.rows();
  std::vector<BitVector> work;
  work.reserve(n);
  for (int i = 0; i < n; ++i) work.push_back(BitVector::unit(n, i));

  SymplecticBasis out;
  for (;;) {
    std::size_t first = work.size();
    std::size_t second = work.size();
    for (std::size_t i = 0; i < work.size() && first == work.size(); ++i) {
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        if (b.bilinear(work[i], work[j])) {
          first = i;
          second = j;
          break;
        }
      }
    }
    if (first == work.size()) break;

    const BitVector a = work[first];
    const BitVector c = work[second];
    out.pairs.emplace_back(a, c);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(second));
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(first));
    // Project the rest onto the orthogonal complement of span(a, c).
    for (auto& x : work) {
      const bool with_c = b.bilinear(x, c);
      const bool with_a = b.bilinear(x, a);
      if (with_c) x += a;
      if (with_a) x += c;
    }
  }
  out.radical = std::move(work);
  return out;
}

}  // namespace gex2
