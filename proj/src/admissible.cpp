#include "gex2/admissible.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace gex2 {
namespace {

// e_i in 1-based notation, as used by the case constructions below.
BitVector e(int dim, int one_based) { return BitVector::unit(dim, one_based - 1); }

// H- + H+^(m-1) on F_2^(2m).
std::vector<BitVector> minus_case_basis(int dim, int m) {
  std::vector<BitVector> v;
  for (int k = 1; k <= m; ++k) v.push_back(e(dim, 2 * k - 1) + e(dim, 2 * k));
  v.push_back(e(dim, 1));
  for (int k = 2; k <= m; ++k) v.push_back(e(dim, 1) + e(dim, 2 * k - 1));
  return v;
}

// H+^m on F_2^(2m), m >= 2.
std::vector<BitVector> plus_case_basis(int dim, int m) {
  std::vector<BitVector> v;
  for (int k = 1; k <= m; ++k) v.push_back(e(dim, 2 * k - 1) + e(dim, 2 * k));
  v.push_back(e(dim, 1) + e(dim, 2 * m - 1) + e(dim, 2 * m));
  for (int k = 2; k <= m; ++k) v.push_back(e(dim, 2 * k - 3) + e(dim, 2 * k - 2) + e(dim, 2 * k));
  return v;
}

// Echelon insertion: returns false if v is in the span already.
bool insert_independent(std::vector<std::uint64_t>& echelon, std::uint64_t v) {
  for (std::uint64_t row : echelon) {
    if (v & (row & -row)) v ^= row;
  }
  if (v == 0) return false;
  for (auto& row : echelon) {
    if (row & (v & -v)) row ^= v;
  }
  echelon.push_back(v);
  return true;
}

}  // namespace

bool is_valid_admissible_basis(const QuadraticForm& q, const AdmissibleBasis& basis) {
  const auto& v = basis.vectors;
  if (static_cast<int>(v.size()) != q.dim()) return false;
  for (const auto& x : v) {
    if (x.dim() != q.dim() || !q.eval(x)) return false;
  }
  if (rank(v) != q.dim()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool partnered = false;
    for (std::size_t j = 0; j < v.size() && !partnered; ++j) partnered = q.bilinear(v[i], v[j]);
    if (!partnered) return false;
  }
  return true;
}

bool is_admissible(const QuadraticForm& q) {
  const FormClass cls = classify(q);
  switch (cls.kind) {
    case FormKind::Plus: return cls.m1 >= 2;
    case FormKind::Minus: return cls.m1 >= 1;
    case FormKind::QOne: return cls.m1 >= 2;
    case FormKind::Zero: return false;
  }
  return false;
}

AdmissibleBasis standard_admissible_basis(const FormClass& cls) {
  const int n = cls.dim;
  const int m = cls.m1;
  std::vector<BitVector> core;
  int core_dim = 2 * m;
  switch (cls.kind) {
    case FormKind::Minus:
      if (m < 1) throw std::invalid_argument("class is not admissible");
      core = minus_case_basis(n, m);
      break;
    case FormKind::Plus:
      if (m < 2) throw std::invalid_argument("class is not admissible");
      core = plus_case_basis(n, m);
      break;
    case FormKind::QOne:
      if (m < 2) throw std::invalid_argument("class is not admissible");
      core = plus_case_basis(n, m);
      core.push_back(e(n, 1) + e(n, 2 * m + 1));
      core_dim = 2 * m + 1;
      break;
    case FormKind::Zero:
      throw std::invalid_argument("class is not admissible");
  }
  // Zero summands: v_1 + w_j for each basis vector w_j of the null part.
  for (int j = core_dim + 1; j <= n; ++j) core.push_back(core.front() + e(n, j));
  return AdmissibleBasis{std::move(core)};
}

std::optional<AdmissibleBasis> admissible_witness(const QuadraticForm& q) {
  if (!is_admissible(q)) return std::nullopt;
  const BitMatrix t = normal_form_witness(q).map();
  AdmissibleBasis basis = standard_admissible_basis(classify(q));
  for (auto& v : basis.vectors) v = t.apply(v);
  return basis;
}

std::optional<AdmissibleBasis> is_admissible_bruteforce(const QuadraticForm& q) {
  const int n = q.dim();
  if (n > kBruteforceMaxDim) {
    throw std::invalid_argument("is_admissible_bruteforce: dimension above " +
                                std::to_string(kBruteforceMaxDim));
  }
  // The zero space has only the empty basis; it counts as inadmissible, matching the class lookup.
  if (n == 0) return std::nullopt;

  // Vectors with Q = 1 that pair with at least one other such vector; the
  // rest can never appear in an admissible basis.
  std::vector<BitVector> ones;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    const BitVector v(n, x);
    if (q.eval(v)) ones.push_back(v);
  }
  std::vector<BitVector> cand;
  for (const auto& v : ones) {
    for (const auto& w : ones) {
      if (q.bilinear(v, w)) {
        cand.push_back(v);
        break;
      }
    }
  }
  const std::size_t count = cand.size();

  // partners[i]: indices of candidates pairing with candidate i.
  std::vector<std::vector<std::size_t>> partners(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (q.bilinear(cand[i], cand[j])) partners[i].push_back(j);
    }
  }

  // suffix_echelon[k] spans cand[k..].
  std::vector<std::vector<std::uint64_t>> suffix_echelon(count + 1);
  for (std::size_t k = count; k-- > 0;) {
    suffix_echelon[k] = suffix_echelon[k + 1];
    insert_independent(suffix_echelon[k], cand[k].bits());
  }
  if (static_cast<int>(suffix_echelon[0].size()) < n) return std::nullopt;

  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> echelon;

  auto partner_available = [&](std::size_t i, std::size_t next) {
    for (std::size_t j : partners[i]) {
      if (j >= next) return true;
      for (std::size_t c : chosen) {
        if (c == j) return true;
      }
    }
    return false;
  };

  auto complete = [&] {
    for (std::size_t i : chosen) {
      bool ok = false;
      for (std::size_t j : chosen) ok = ok || q.bilinear(cand[i], cand[j]);
      if (!ok) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t next) -> bool {
    if (static_cast<int>(chosen.size()) == n) return complete();
    // Span of chosen + cand[next..] must still reach the whole space.
    {
      std::vector<std::uint64_t> probe = echelon;
      for (std::uint64_t row : suffix_echelon[next]) {
        if (static_cast<int>(probe.size()) == n) break;
        insert_independent(probe, row);
      }
      if (static_cast<int>(probe.size()) < n) return false;
    }
    for (std::size_t i : chosen) {
      if (!partner_available(i, next)) return false;
    }
    for (std::size_t k = next; k < count; ++k) {
      std::vector<std::uint64_t> saved = echelon;
      if (!insert_independent(echelon, cand[k].bits())) continue;
      chosen.push_back(k);
      if (search(k + 1)) return true;
      chosen.pop_back();
      echelon = std::move(saved);
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  AdmissibleBasis out;
  for (std::size_t i : chosen) out.vectors.push_back(cand[i]);
  return out;
}

}  // namespace gex2
