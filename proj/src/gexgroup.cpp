#include "gex2/gexgroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace gex2 {
namespace {

constexpr std::string_view kGroupPrefix = "gex:";
constexpr int kTableMaxOrder = 2048;

// clang-format off
constexpr std::uint16_t kQuaternionTable[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 1, 0, 6, 7, 5, 4},
    {3, 2, 0, 1, 7, 6, 4, 5},
    {4, 5, 7, 6, 1, 0, 2, 3},
    {5, 4, 6, 7, 0, 1, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};

constexpr std::uint16_t kDihedralTable[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 2, 3, 0, 5, 6, 7, 4},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 0, 1, 2, 7, 4, 5, 6},
    {4, 7, 6, 5, 0, 3, 2, 1},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 5, 4, 7, 2, 1, 0, 3},
    {7, 6, 5, 4, 3, 2, 1, 0},
};
// clang-format on

std::vector<std::uint16_t> flatten(const std::uint16_t (&t)[8][8]) {
  std::vector<std::uint16_t> out;
  for (const auto& row : t) out.insert(out.end(), std::begin(row), std::end(row));
  return out;
}

std::string power_token(std::string_view atom, int m) {
  std::string out(atom);
  if (m > 1) out += "^*" + std::to_string(m);
  return out;
}

}  // namespace

GexGroup::GexGroup(QuadraticForm q) : form_(std::move(q)) {
  if (form_.dim() > kGexMaxDim) {
    throw std::invalid_argument("group model: form dimension above " + std::to_string(kGexMaxDim));
  }
  cocycle_ = form_.cocycle();
}

void GexGroup::check(const GroupElement& g) const {
  if (g.vec.dim() != dim()) throw std::invalid_argument("group element has the wrong dimension");
}

GroupElement GexGroup::mul(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  return {g.vec + h.vec, static_cast<bool>(g.central ^ h.central ^ cocycle_.bilinear(g.vec, h.vec))};
}

GroupElement GexGroup::inv(const GroupElement& g) const {
  check(g);
  return {g.vec, static_cast<bool>(g.central ^ form_.eval(g.vec))};
}

GroupElement GexGroup::square(const GroupElement& g) const { return mul(g, g); }

GroupElement GexGroup::commutator(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

std::uint64_t GexGroup::index_of(const GroupElement& g) const {
  check(g);
  return (g.vec.bits() << 1) | static_cast<std::uint64_t>(g.central);
}

GroupElement GexGroup::element(std::uint64_t index) const {
  if (index >= order()) throw std::out_of_range("group element index");
  return {BitVector(dim(), index >> 1), static_cast<bool>(index & 1u)};
}

std::vector<GroupElement> GexGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::string GexGroup::to_string() const { return std::string(kGroupPrefix) + form_.to_string(); }

GexGroup GexGroup::parse(std::string_view text) {
  if (text.substr(0, kGroupPrefix.size()) != kGroupPrefix) {
    throw std::invalid_argument("group spec must start with 'gex:'");
  }
  return GexGroup(QuadraticForm::parse(text.substr(kGroupPrefix.size())));
}

GexGroup from_form(const QuadraticForm& q) { return GexGroup(q); }

std::vector<GroupElement> center(const GexGroup& g) {
  std::vector<GroupElement> out;
  // Enumerate the radical as the span of a kernel basis.
  const std::vector<BitVector> basis = kernel_basis(g.form().polar());
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    BitVector v(g.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (mask >> k & 1u) v += basis[k];
    }
    out.push_back({v, false});
    out.push_back({v, true});
  }
  std::sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) {
    return g.index_of(a) < g.index_of(b);
  });
  return out;
}

std::vector<GroupElement> commutator_subgroup(const GexGroup& g) {
  if (g.form().polar() == BitMatrix::zero(g.dim(), g.dim())) return {g.identity()};
  return {g.identity(), g.central_element()};
}

std::vector<GroupElement> squares_subgroup(const GexGroup& g) {
  if (g.form().is_zero()) return {g.identity()};
  return {g.identity(), g.central_element()};
}

std::vector<GroupElement> frattini(const GexGroup& g) {
  const auto squares = squares_subgroup(g);
  const auto commutators = commutator_subgroup(g);
  return squares.size() >= commutators.size() ? squares : commutators;
}

bool is_generalized_extraspecial(const GexGroup& g) {
  return g.form().polar() != BitMatrix::zero(g.dim(), g.dim());
}

QuadraticForm q_from_group(const GexGroup& g) {
  const int n = g.dim();
  std::uint64_t diag = 0;
  std::vector<std::uint64_t> upper(n, 0);
  for (int i = 0; i < n; ++i) {
    const GroupElement gi = g.generator(i);
    if (g.square(gi).central) diag |= std::uint64_t{1} << i;
    for (int j = i + 1; j < n; ++j) {
      if (g.commutator(gi, g.generator(j)).central) upper[i] |= std::uint64_t{1} << j;
    }
  }
  return QuadraticForm(n, diag, std::move(upper));
}

GexGroup central_product(const GexGroup& g1, const GexGroup& g2) {
  if (frattini(g1).size() < 2 || frattini(g2).size() < 2) {
    throw std::invalid_argument("central_product: a factor has trivial Frattini subgroup");
  }
  if (g1.dim() + g2.dim() > kGexMaxDim) throw std::invalid_argument("central_product: dimension cap exceeded");
  return GexGroup(direct_sum(g1.form(), g2.form()));
}

GexGroup direct_z2(const GexGroup& g, int n) {
  if (n < 0 || g.dim() + n > kGexMaxDim) throw std::invalid_argument("direct_z2: dimension cap exceeded");
  return GexGroup(direct_sum(g.form(), QuadraticForm::zero(n)));
}

GroupClass GroupClass::q8_power_z4(int m, int z2rank) {
  if (m == 0) return {GroupBase::CyclicFour, 0, z2rank};
  return {GroupBase::Q8PowerZ4, m, z2rank};
}

std::uint64_t GroupClass::order() const {
  std::uint64_t base_order = 2;
  switch (base) {
    case GroupBase::ElementaryAbelian: base_order = 2; break;
    case GroupBase::CyclicFour: base_order = 4; break;
    case GroupBase::Q8Power:
    case GroupBase::Q8PowerD8: base_order = std::uint64_t{2} << (2 * m); break;
    case GroupBase::Q8PowerZ4: base_order = std::uint64_t{4} << (2 * m); break;
  }
  return base_order << z2rank;
}

std::string GroupClass::to_string() const {
  std::string out;
  int extra = z2rank;
  switch (base) {
    case GroupBase::ElementaryAbelian:
      // The base is the line <c>; fold it into the Z2 power.
      out = "Z2";
      if (z2rank > 0) out += "^" + std::to_string(z2rank + 1);
      extra = 0;
      break;
    case GroupBase::CyclicFour: out = "Z4"; break;
    case GroupBase::Q8Power: out = power_token("Q8", m); break;
    case GroupBase::Q8PowerD8: out = m == 1 ? "D8" : power_token("Q8", m - 1) + "*D8"; break;
    case GroupBase::Q8PowerZ4: out = power_token("Q8", m) + "*Z4"; break;
  }
  if (extra == 1) out += "xZ2";
  if (extra > 1) out += "xZ2^" + std::to_string(extra);
  return out;
}

GroupClass classify_group(const GexGroup& g) { return group_class(classify(g.form())); }

GroupClass group_class(const FormClass& cls) {
  switch (cls.kind) {
    case FormKind::Zero:
      return GroupClass::elementary_abelian(cls.m2);
    case FormKind::QOne:
      return GroupClass::q8_power_z4(cls.m1, cls.m2 - 1);
    case FormKind::Plus:
      // Q8^{*m} has form H+^m for m even; Q8^{*(m-1)} * D8 has it for m odd.
      return cls.m1 % 2 == 0 ? GroupClass::q8_power(cls.m1, cls.m2) : GroupClass::q8_power_d8(cls.m1, cls.m2);
    case FormKind::Minus:
      // Q8^{*m} has form H- + H+^(m-1) for m odd; Q8^{*(m-1)} * D8 for m even.
      return cls.m1 % 2 == 1 ? GroupClass::q8_power(cls.m1, cls.m2) : GroupClass::q8_power_d8(cls.m1, cls.m2);
  }
  throw std::logic_error("unreachable form kind");
}

TableGroup::TableGroup(int order, std::vector<std::uint16_t> table, int central)
    : order_(order), table_(std::move(table)), inverse_(order, -1), central_(central) {
  if (order < 1 || order > kTableMaxOrder) throw std::invalid_argument("table group order out of range");
  if (table_.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("table group: table size is not order^2");
  }
  for (auto x : table_) {
    if (x >= order) throw std::invalid_argument("table group: entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < order && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("table group: no identity element");
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw std::invalid_argument("table group: element without inverse");
  }
  if (central_ >= order) throw std::invalid_argument("table group: central index out of range");
}

TableGroup TableGroup::from_model(const GexGroup& g) {
  if (g.order() > static_cast<std::uint64_t>(kTableMaxOrder)) {
    throw std::invalid_argument("table group: model too large to tabulate");
  }
  const int n = static_cast<int>(g.order());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  const auto elems = g.elements();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(g.index_of(g.mul(elems[a], elems[b])));
    }
  }
  return TableGroup(n, std::move(table), static_cast<int>(g.index_of(g.central_element())));
}

TableGroup TableGroup::quaternion() { return TableGroup(8, flatten(kQuaternionTable), 1); }

TableGroup TableGroup::dihedral() { return TableGroup(8, flatten(kDihedralTable), 2); }

TableGroup TableGroup::cyclic_four() {
  std::vector<std::uint16_t> table(16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = static_cast<std::uint16_t>((a + b) % 4);
  }
  return TableGroup(4, std::move(table), 2);
}

int TableGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool TableGroup::is_associative() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  return true;
}

std::vector<int> TableGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<int> TableGroup::generated(const std::vector<int>& gens) const {
  std::vector<bool> seen(order_, false);
  std::vector<int> out{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s : gens) {
      const int y = mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TableGroup::commutator_subgroup() const {
  std::vector<int> gens;
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) gens.push_back(mul(mul(a, b), mul(inv(a), inv(b))));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated(gens);
}

std::vector<int> TableGroup::squares_subgroup() const {
  std::vector<int> gens;
  for (int a = 0; a < order_; ++a) gens.push_back(mul(a, a));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated(gens);
}

std::vector<int> TableGroup::frattini() const {
  std::vector<int> gens = squares_subgroup();
  const std::vector<int> comm = commutator_subgroup();
  gens.insert(gens.end(), comm.begin(), comm.end());
  return generated(gens);
}

QuadraticForm q_from_table(const TableGroup& g) {
  const int c = g.central();
  const int e = g.identity();
  if (c < 0 || c == e || g.mul(c, c) != e) throw std::invalid_argument("q_from_table: no central involution");
  for (int a = 0; a < g.order(); ++a) {
    if (g.mul(a, c) != g.mul(c, a)) throw std::invalid_argument("q_from_table: designated element is not central");
    const int sq = g.mul(a, a);
    if (sq != e && sq != c) throw std::invalid_argument("q_from_table: quotient is not elementary abelian");
  }

  // Greedy basis of G/<c>: lifts taken in index order.
  std::vector<int> lifts;
  std::vector<int> span = g.generated({c});
  std::vector<int> gens{c};
  for (int a = 0; a < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    lifts.push_back(a);
    gens.push_back(a);
    span = g.generated(gens);
  }
  if (span.size() != static_cast<std::size_t>(g.order())) throw std::logic_error("q_from_table: lifts do not span");
  if ((std::size_t{2} << lifts.size()) != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("q_from_table: quotient is not elementary abelian");
  }

  const int n = static_cast<int>(lifts.size());
  std::uint64_t diag = 0;
  std::vector<std::uint64_t> upper(n, 0);
  for (int i = 0; i < n; ++i) {
    const int gi = lifts[i];
    if (g.mul(gi, gi) == c) diag |= std::uint64_t{1} << i;
    for (int j = i + 1; j < n; ++j) {
      const int gj = lifts[j];
      const int comm = g.mul(g.mul(gi, gj), g.mul(g.inv(gi), g.inv(gj)));
      if (comm == c) {
        upper[i] |= std::uint64_t{1} << j;
      } else if (comm != e) {
        throw std::invalid_argument("q_from_table: commutator outside <c>");
      }
    }
  }
  return QuadraticForm(n, diag, std::move(upper));
}

namespace {

struct Signature {
  int order;
  int centralizer;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const TableGroup& g) {
  std::vector<Signature> out(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int commuting = 0;
    for (int b = 0; b < g.order(); ++b) commuting += g.mul(a, b) == g.mul(b, a);
    out[a] = {g.element_order(a), commuting};
  }
  return out;
}

}  // namespace

bool iso_oracle(const TableGroup& a, const TableGroup& b) {
  if (a.order() > kIsoOracleMaxOrder || b.order() > kIsoOracleMaxOrder) {
    throw std::invalid_argument("iso_oracle: order above " + std::to_string(kIsoOracleMaxOrder));
  }
  if (a.order() != b.order()) return false;
  const int n = a.order();

  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    auto sorted_a = sig_a;
    auto sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
  }

  // Generators of a: lowest index outside the subgroup generated so far.
  std::vector<int> gens;
  for (std::vector<int> span = a.generated({}); static_cast<int>(span.size()) < n;) {
    int next = 0;
    while (std::binary_search(span.begin(), span.end(), next)) ++next;
    gens.push_back(next);
    span = a.generated(gens);
  }

  struct State {
    std::vector<int> phi;
    std::vector<bool> used;
    std::vector<int> mapped;
  };
  State root{std::vector<int>(n, -1), std::vector<bool>(n, false), {a.identity()}};
  root.phi[a.identity()] = b.identity();
  root.used[b.identity()] = true;

  std::vector<int> images;
  // Closes phi under right multiplication by gens[0..k], checking consistency and injectivity.
  auto extend = [&](State& s, std::size_t k) {
    for (std::size_t q = 0; q < s.mapped.size(); ++q) {
      const int x = s.mapped[q];
      for (std::size_t t = 0; t <= k; ++t) {
        const int y = a.mul(x, gens[t]);
        const int fy = b.mul(s.phi[x], images[t]);
        if (s.phi[y] < 0) {
          if (s.used[fy]) return false;
          s.phi[y] = fy;
          s.used[fy] = true;
          s.mapped.push_back(y);
        } else if (s.phi[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(const State&, std::size_t)> search = [&](const State& s, std::size_t k) -> bool {
    if (k == gens.size()) return static_cast<int>(s.mapped.size()) == n;
    for (int cand = 0; cand < n; ++cand) {
      if (s.used[cand] || !(sig_b[cand] == sig_a[gens[k]])) continue;
      State next = s;
      images.push_back(cand);
      const bool ok = extend(next, k) && search(next, k + 1);
      images.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return search(root, 0);
}

bool iso_oracle(const GexGroup& a, const GexGroup& b) {
  if (a.order() > kIsoOracleMaxOrder || b.order() > kIsoOracleMaxOrder) {
    throw std::invalid_argument("iso_oracle: order above " + std::to_string(kIsoOracleMaxOrder));
  }
  return iso_oracle(TableGroup::from_model(a), TableGroup::from_model(b));
}

}  // namespace gex2
