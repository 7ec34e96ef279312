#include "gex2/quadform.hpp"

#include <bit>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace gex2 {
namespace {

bool parity(std::uint64_t word) { return std::popcount(word) & 1; }

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void append_power(std::string& out, std::string_view atom, int count) {
  if (count <= 0) return;
  if (!out.empty()) out += " ⊕ ";
  out += atom;
  if (count > 1) out += "^" + std::to_string(count);
}

std::string_view field_value(std::string_view text, std::string_view key, std::size_t& pos) {
  const std::string prefix = std::string(key) + "=";
  if (text.substr(pos, prefix.size()) != prefix) {
    throw std::invalid_argument("form spec: expected field '" + std::string(key) + "'");
  }
  pos += prefix.size();
  const std::size_t end = std::min(text.find(';', pos), text.size());
  std::string_view value = text.substr(pos, end - pos);
  pos = end == text.size() ? end : end + 1;
  return value;
}

std::uint64_t parse_bits(std::string_view value, std::string_view key, std::size_t expected) {
  if (value.size() != expected) {
    throw std::invalid_argument("form spec: field '" + std::string(key) + "' needs " +
                                std::to_string(expected) + " bits, got " +
                                std::to_string(value.size()));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == '1') {
      bits |= bit(static_cast<int>(i));
    } else if (value[i] != '0') {
      throw std::invalid_argument("form spec: field '" + std::string(key) +
                                  "' has non-binary character '" + std::string(1, value[i]) + "'");
    }
  }
  return bits;
}

}  // namespace

QuadraticForm::QuadraticForm(int dim, std::uint64_t diag, std::vector<std::uint64_t> upper)
    : dim_(dim), diag_(diag), upper_(std::move(upper)) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("form dimension outside [0, 64]");
  if (static_cast<int>(upper_.size()) != dim) {
    throw std::invalid_argument("form needs one upper row per coordinate");
  }
  const std::uint64_t mask = dim == 64 ? ~std::uint64_t{0} : bit(dim) - 1;
  if (diag_ & ~mask) throw std::invalid_argument("form diagonal has bits beyond dim");
  for (int i = 0; i < dim; ++i) {
    const std::uint64_t above = i == 63 ? 0 : (mask & ~(bit(i + 1) - 1));
    if (upper_[i] & ~above) throw std::invalid_argument("form upper row has bits on or below the diagonal");
  }
}

QuadraticForm QuadraticForm::from_polar(const BitVector& diag, const BitMatrix& polar) {
  if (!polar.is_alternating()) throw std::invalid_argument("polar matrix is not alternating");
  if (polar.rows() != diag.dim()) throw std::invalid_argument("polar matrix / diagonal size mismatch");
  const int n = diag.dim();
  std::vector<std::uint64_t> upper(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (polar.at(i, j)) upper[i] |= bit(j);
    }
  }
  return QuadraticForm(n, diag.bits(), std::move(upper));
}

QuadraticForm QuadraticForm::zero(int n) {
  return QuadraticForm(n, 0, std::vector<std::uint64_t>(n, 0));
}

QuadraticForm QuadraticForm::h_plus() { return QuadraticForm(2, 0b00, {0b10, 0}); }

QuadraticForm QuadraticForm::h_minus() { return QuadraticForm(2, 0b11, {0b10, 0}); }

QuadraticForm QuadraticForm::q_one() { return QuadraticForm(1, 0b1, {0}); }

QuadraticForm QuadraticForm::parse(std::string_view text) {
  std::size_t pos = 0;
  const std::string_view l_text = field_value(text, "l", pos);
  int dim = -1;
  const auto [ptr, ec] = std::from_chars(l_text.data(), l_text.data() + l_text.size(), dim);
  if (ec != std::errc{} || ptr != l_text.data() + l_text.size() || dim < 0 || dim > kMaxDim) {
    throw std::invalid_argument("form spec: field 'l' must be an integer in [0, 64]");
  }
  const std::uint64_t diag = parse_bits(field_value(text, "d", pos), "d", dim);
  const std::size_t upper_count = static_cast<std::size_t>(dim) * (dim - (dim > 0)) / 2;
  const std::string_view u_text = field_value(text, "u", pos);
  if (pos != text.size()) throw std::invalid_argument("form spec: trailing text after field 'u'");
  if (u_text.size() != upper_count) {
    throw std::invalid_argument("form spec: field 'u' needs " + std::to_string(upper_count) +
                                " bits, got " + std::to_string(u_text.size()));
  }
  std::vector<std::uint64_t> upper(dim, 0);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j, ++k) {
      if (u_text[k] == '1') {
        upper[i] |= bit(j);
      } else if (u_text[k] != '0') {
        throw std::invalid_argument("form spec: field 'u' has non-binary character '" +
                                    std::string(1, u_text[k]) + "'");
      }
    }
  }
  return QuadraticForm(dim, diag, std::move(upper));
}

std::string QuadraticForm::to_string() const {
  std::string out = "l=" + std::to_string(dim_) + ";d=" + diag_vector().to_string() + ";u=";
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) out += (upper_[i] >> j & 1u) ? '1' : '0';
  }
  return out;
}

bool QuadraticForm::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("form coefficient index");
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return upper_[i] >> j & 1u;
}

bool QuadraticForm::eval(const BitVector& v) const {
  if (v.dim() != dim_) throw std::invalid_argument("eval: dimension mismatch");
  const std::uint64_t x = v.bits();
  bool acc = parity(diag_ & x);
  for (std::uint64_t w = x; w != 0; w &= w - 1) acc ^= parity(upper_[std::countr_zero(w)] & x);
  return acc;
}

bool QuadraticForm::bilinear(const BitVector& u, const BitVector& v) const {
  if (u.dim() != dim_ || v.dim() != dim_) throw std::invalid_argument("bilinear: dimension mismatch");
  // u^T (M + M^T) v with M the strictly upper part.
  bool acc = false;
  for (std::uint64_t w = u.bits(); w != 0; w &= w - 1) acc ^= parity(upper_[std::countr_zero(w)] & v.bits());
  for (std::uint64_t w = v.bits(); w != 0; w &= w - 1) acc ^= parity(upper_[std::countr_zero(w)] & u.bits());
  return acc;
}

BitMatrix QuadraticForm::polar() const {
  BitMatrix p(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (std::uint64_t w = upper_[i]; w != 0; w &= w - 1) {
      const int j = std::countr_zero(w);
      p.set(i, j, true);
      p.set(j, i, true);
    }
  }
  return p;
}

BitMatrix QuadraticForm::cocycle() const {
  BitMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (diag(i)) m.set(i, i, true);
    for (std::uint64_t w = upper_[i]; w != 0; w &= w - 1) m.set(i, std::countr_zero(w), true);
  }
  return m;
}

bool QuadraticForm::is_zero() const {
  if (diag_ != 0) return false;
  for (auto row : upper_) {
    if (row != 0) return false;
  }
  return true;
}

std::uint64_t form_count(int dim) {
  if (dim < 0 || dim > 10) throw std::invalid_argument("form_count: dimension outside [0, 10]");
  return std::uint64_t{1} << (dim * (dim + 1) / 2);
}

QuadraticForm form_from_index(int dim, std::uint64_t index) {
  if (index >= form_count(dim)) throw std::out_of_range("form_from_index: index out of range");
  const std::uint64_t diag = index & ((std::uint64_t{1} << dim) - 1);
  index >>= dim;
  std::vector<std::uint64_t> upper(dim, 0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j, index >>= 1) {
      if (index & 1u) upper[i] |= bit(j);
    }
  }
  return QuadraticForm(dim, diag, std::move(upper));
}

QuadraticForm direct_sum(const QuadraticForm& q, const QuadraticForm& r) {
  const int n = q.dim() + r.dim();
  if (n > kMaxDim) throw std::invalid_argument("direct_sum: combined dimension exceeds 64");
  const BitVector diag = q.diag_vector().concat(r.diag_vector());
  std::vector<std::uint64_t> upper(n, 0);
  for (int i = 0; i < q.dim(); ++i) {
    for (int j = i + 1; j < q.dim(); ++j) {
      if (q.coefficient(i, j)) upper[i] |= bit(j);
    }
  }
  for (int i = 0; i < r.dim(); ++i) {
    for (int j = i + 1; j < r.dim(); ++j) {
      if (r.coefficient(i, j)) upper[q.dim() + i] |= bit(q.dim() + j);
    }
  }
  return QuadraticForm(n, diag.bits(), std::move(upper));
}

QuadraticForm change_basis(const QuadraticForm& q, const BitMatrix& t) {
  if (!t.is_square() || t.rows() != q.dim()) throw std::invalid_argument("change_basis: map has wrong shape");
  if (!is_invertible(t)) throw std::invalid_argument("change_basis: map is not invertible");
  const int n = q.dim();
  std::vector<BitVector> cols;
  cols.reserve(n);
  for (int j = 0; j < n; ++j) cols.push_back(t.column(j));
  std::uint64_t diag = 0;
  std::vector<std::uint64_t> upper(n, 0);
  for (int i = 0; i < n; ++i) {
    if (q.eval(cols[i])) diag |= bit(i);
    for (int j = i + 1; j < n; ++j) {
      if (q.bilinear(cols[i], cols[j])) upper[i] |= bit(j);
    }
  }
  return QuadraticForm(n, diag, std::move(upper));
}

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Plus: return "Plus";
    case FormKind::Minus: return "Minus";
    case FormKind::QOne: return "QOne";
    case FormKind::Zero: return "Zero";
  }
  return "?";
}

std::string FormClass::name() const {
  std::string out;
  switch (kind) {
    case FormKind::Plus:
      append_power(out, "H+", m1);
      append_power(out, "0", m2);
      break;
    case FormKind::Minus:
      append_power(out, "H-", 1);
      append_power(out, "H+", m1 - 1);
      append_power(out, "0", m2);
      break;
    case FormKind::QOne:
      append_power(out, "H+", m1);
      append_power(out, "Q1", 1);
      append_power(out, "0", m2 - 1);
      break;
    case FormKind::Zero:
      append_power(out, "0", m2);
      break;
  }
  return out.empty() ? "0^0" : out;
}

FormClass classify(const QuadraticForm& q) {
  const SymplecticBasis basis = symplectic_basis(q.polar());
  FormClass out;
  out.dim = q.dim();
  out.m1 = static_cast<int>(basis.pairs.size());
  out.m2 = q.dim() - 2 * out.m1;

  // Q is additive on the radical, so testing a basis decides whether it vanishes there.
  bool nonzero_on_radical = false;
  for (const auto& r : basis.radical) nonzero_on_radical |= q.eval(r);

  if (nonzero_on_radical) {
    out.kind = FormKind::QOne;
  } else if (out.m1 == 0) {
    out.kind = FormKind::Zero;
  } else {
    bool arf = false;
    for (const auto& [a, b] : basis.pairs) arf ^= q.eval(a) && q.eval(b);
    out.kind = arf ? FormKind::Minus : FormKind::Plus;
  }
  return out;
}

QuadraticForm standard_form(const FormClass& cls) {
  if (2 * cls.m1 + cls.m2 != cls.dim || cls.m1 < 0 || cls.m2 < 0) {
    throw std::invalid_argument("form class dimensions are inconsistent");
  }
  QuadraticForm out;
  switch (cls.kind) {
    case FormKind::Plus:
      if (cls.m1 < 1) throw std::invalid_argument("Plus class needs m1 >= 1");
      for (int i = 0; i < cls.m1; ++i) out = direct_sum(out, QuadraticForm::h_plus());
      return direct_sum(out, QuadraticForm::zero(cls.m2));
    case FormKind::Minus:
      if (cls.m1 < 1) throw std::invalid_argument("Minus class needs m1 >= 1");
      out = QuadraticForm::h_minus();
      for (int i = 1; i < cls.m1; ++i) out = direct_sum(out, QuadraticForm::h_plus());
      return direct_sum(out, QuadraticForm::zero(cls.m2));
    case FormKind::QOne:
      if (cls.m2 < 1) throw std::invalid_argument("QOne class needs m2 >= 1");
      for (int i = 0; i < cls.m1; ++i) out = direct_sum(out, QuadraticForm::h_plus());
      out = direct_sum(out, QuadraticForm::q_one());
      return direct_sum(out, QuadraticForm::zero(cls.m2 - 1));
    case FormKind::Zero:
      if (cls.m1 != 0) throw std::invalid_argument("Zero class needs m1 == 0");
      return QuadraticForm::zero(cls.m2);
  }
  throw std::logic_error("unreachable form kind");
}

bool is_isometric(const QuadraticForm& q, const QuadraticForm& r) {
  return q.dim() == r.dim() && classify(q) == classify(r);
}

Isometry::Isometry(BitMatrix map) : map_(std::move(map)) {
  if (!map_.is_square() || !is_invertible(map_)) throw std::invalid_argument("isometry map is not invertible");
}

std::optional<Isometry> isometry_oracle(const QuadraticForm& q, const QuadraticForm& r) {
  if (q.dim() != r.dim()) throw std::invalid_argument("isometry_oracle: dimensions differ");
  if (q.dim() > kIsometryOracleMaxDim) {
    throw std::invalid_argument("isometry_oracle: dimension above " + std::to_string(kIsometryOracleMaxDim));
  }
  const int n = q.dim();
  const std::uint32_t size = 1u << n;
  std::vector<BitVector> columns;
  columns.reserve(n);

  // span[k] marks the 2^k elements spanned by the first k chosen columns.
  std::vector<std::vector<bool>> span(n + 1, std::vector<bool>(size, false));
  span[0][0] = true;

  std::function<bool(int)> search = [&](int k) -> bool {
    if (k == n) return true;
    for (std::uint32_t c = 1; c < size; ++c) {
      if (span[k][c]) continue;
      const BitVector col(n, c);
      if (r.eval(col) != q.diag(k)) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = r.bilinear(columns[i], col) == q.coefficient(i, k);
      if (!ok) continue;
      span[k + 1] = span[k];
      for (std::uint32_t x = 0; x < size; ++x) {
        if (span[k][x]) span[k + 1][x ^ c] = true;
      }
      columns.push_back(col);
      if (search(k + 1)) return true;
      columns.pop_back();
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  if (n == 0) return Isometry(BitMatrix(0, 0));
  return Isometry(BitMatrix::from_columns(columns));
}

Isometry normal_form_witness(const QuadraticForm& q) {
  const SymplecticBasis basis = symplectic_basis(q.polar());
  const int n = q.dim();

  // Normalize each hyperbolic pair to Q-values (0,0) or (1,1).
  std::vector<std::pair<BitVector, BitVector>> plus_pairs;
  std::vector<std::pair<BitVector, BitVector>> minus_pairs;
  for (const auto& [a, b] : basis.pairs) {
    const bool qa = q.eval(a);
    const bool qb = q.eval(b);
    if (qa && qb) {
      minus_pairs.emplace_back(a, b);
    } else if (!qa) {
      plus_pairs.emplace_back(a, qb ? a + b : b);
    } else {
      plus_pairs.emplace_back(b, a + b);
    }
  }

  // Radical: one vector with Q = 1 if any, the rest adjusted to Q = 0.
  std::optional<BitVector> anisotropic;
  std::vector<BitVector> null_radical;
  for (const auto& r : basis.radical) {
    if (!anisotropic && q.eval(r)) {
      anisotropic = r;
    } else {
      null_radical.push_back(r);
    }
  }
  if (anisotropic) {
    for (auto& r : null_radical) {
      if (q.eval(r)) r += *anisotropic;
    }
    // H- + Q1 is H+ + Q1: shifting both members by the radical vector kills their Q-values.
    for (const auto& [a, b] : minus_pairs) plus_pairs.emplace_back(a + *anisotropic, b + *anisotropic);
    minus_pairs.clear();
  }

  // H- + H- is H+ + H+.
  while (minus_pairs.size() >= 2) {
    const auto [a2, b2] = minus_pairs.back();
    minus_pairs.pop_back();
    const auto [a1, b1] = minus_pairs.back();
    minus_pairs.pop_back();
    plus_pairs.emplace_back(a1 + a2, a1 + a2 + b1);
    plus_pairs.emplace_back(b1 + b2, a2 + b1 + b2);
  }

  std::vector<BitVector> columns;
  columns.reserve(n);
  for (const auto& [a, b] : minus_pairs) {
    columns.push_back(a);
    columns.push_back(b);
  }
  for (const auto& [a, b] : plus_pairs) {
    columns.push_back(a);
    columns.push_back(b);
  }
  if (anisotropic) columns.push_back(*anisotropic);
  columns.insert(columns.end(), null_radical.begin(), null_radical.end());

  if (n == 0) return Isometry(BitMatrix(0, 0));
  return Isometry(BitMatrix::from_columns(columns));
}

}  // namespace gex2
