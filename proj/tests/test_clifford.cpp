#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "gex2/clifford.hpp"

namespace gex2 {
namespace {

// Reduces a word in the generators by adjacent swaps (each flips the sign)
// and cancellations e_i e_i = -1.
CliffordElement reduce_word(std::vector<int> word, bool negative) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        negative = !negative;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        word.erase(word.begin() + k, word.begin() + k + 2);
        negative = !negative;
        changed = true;
        break;
      }
    }
  }
  std::uint32_t subset = 0;
  for (int i : word) subset |= std::uint32_t{1} << (i - 1);
  return {negative, subset};
}

std::vector<int> word_of(std::uint32_t subset) {
  std::vector<int> w;
  for (int i = 0; i < 32; ++i) {
    if ((subset >> i) & 1) w.push_back(i + 1);
  }
  return w;
}

CliffordElement mul_by_words(const CliffordElement& a, const CliffordElement& b) {
  std::vector<int> w = word_of(a.subset);
  const auto tail = word_of(b.subset);
  w.insert(w.end(), tail.begin(), tail.end());
  return reduce_word(w, a.negative != b.negative);
}

CliffordElement blade(std::initializer_list<int> gens, bool negative = false) {
  std::uint32_t s = 0;
  for (int i : gens) s |= std::uint32_t{1} << (i - 1);
  return {negative, s};
}

TEST(CliffordMul, SpecExamples) {
  EXPECT_EQ(clifford_mul(blade({1, 2}), blade({1, 2}), 2), blade({}, true));
  for (std::uint32_t s = 0; s < 16; ++s) {
    EXPECT_EQ(clifford_mul(blade({}), {false, s}, 4), (CliffordElement{false, s}));
    EXPECT_EQ(clifford_mul({true, s}, blade({}), 4), (CliffordElement{true, s}));
  }
  EXPECT_THROW(clifford_mul(blade({3}), blade({}), 2), std::invalid_argument);
}

TEST(CliffordMul, DefiningRelations) {
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(clifford_mul(blade({i}), blade({i}), 6), blade({}, true));
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      CliffordElement ij = clifford_mul(blade({i}), blade({j}), 6);
      CliffordElement ji = clifford_mul(blade({j}), blade({i}), 6);
      ji.negative = !ji.negative;
      EXPECT_EQ(ij, ji);
    }
  }
}

TEST(CliffordMul, AgreesWithWordReduction) {
  for (std::uint32_t s = 0; s < 64; ++s) {
    for (std::uint32_t t = 0; t < 64; ++t) {
      for (bool sign : {false, true}) {
        const CliffordElement a{sign, s}, b{false, t};
        ASSERT_EQ(clifford_mul(a, b, 6), mul_by_words(a, b));
      }
    }
  }
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const CliffordElement a{static_cast<bool>(rng() & 1), static_cast<std::uint32_t>(rng() & 0x1ffff)};
    const CliffordElement b{static_cast<bool>(rng() & 1), static_cast<std::uint32_t>(rng() & 0x1ffff)};
    ASSERT_EQ(clifford_mul(a, b, 17), mul_by_words(a, b));
  }
}

TEST(CliffordMul, AssociativeExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t full = std::uint32_t{1} << n;
    for (std::uint32_t a = 0; a < full; ++a) {
      for (std::uint32_t b = 0; b < full; ++b) {
        const CliffordElement ab = clifford_mul({false, a}, {false, b}, n);
        for (std::uint32_t c = 0; c < full; ++c) {
          ASSERT_EQ(clifford_mul(ab, {false, c}, n), clifford_mul({false, a}, clifford_mul({false, b}, {false, c}, n), n));
        }
      }
    }
  }
}

TEST(CliffordMul, ReorderSign) {
  EXPECT_EQ(reorder_sign(0b11, 0b11) % 2, 1);
  EXPECT_EQ(reorder_sign(0b10, 0b01), 1);
  EXPECT_EQ(reorder_sign(0b01, 0b10), 0);
  EXPECT_EQ(reorder_sign(0b1, 0b1), 1);
}

TEST(CliffordElement, Basics) {
  EXPECT_EQ(blade({1, 2}).to_string(), "+e1e2");
  EXPECT_EQ(blade({}, true).to_string(), "-1");
  EXPECT_EQ(blade({}).to_string(), "+1");
  EXPECT_EQ(blade({1, 3, 4}).grade(), 3);
  EXPECT_TRUE(blade({2, 5}).is_even());
}

TEST(EGroup, OrderAndClosure) {
  for (int n = 2; n <= 12; ++n) {
    const EGroup e(n);
    const auto elems = e.elements();
    EXPECT_EQ(elems.size(), e.order());
    EXPECT_EQ(e.order(), std::uint64_t{1} << n);
    if (n <= 7) {
      for (const auto& a : elems) {
        for (const auto& b : elems) ASSERT_TRUE(e.contains(e.mul(a, b)));
      }
    }
  }
  EXPECT_EQ(EGroup(17).order(), std::uint64_t{1} << 17);
  EXPECT_EQ(e_group(3).order(), 8u);
  EXPECT_THROW(EGroup(1), std::invalid_argument);
  EXPECT_THROW(EGroup(18), std::invalid_argument);
  EXPECT_FALSE(EGroup(3).contains(blade({1})));
  EXPECT_FALSE(EGroup(3).contains(blade({1, 4})));
}

TEST(EGroup, TwoIsCyclicOfOrderFour) {
  const EGroup e(2);
  const CliffordElement g = blade({1, 2});
  std::set<std::pair<bool, std::uint32_t>> powers;
  CliffordElement x = blade({});
  for (int k = 0; k < 4; ++k) {
    powers.insert({x.negative, x.subset});
    x = e.mul(x, g);
  }
  EXPECT_EQ(x, blade({}));
  EXPECT_EQ(powers.size(), 4u);
}

TEST(EGroup, ThreeIsQuaternion) {
  const EGroup e(3);
  const auto elems = e.elements();
  std::vector<std::uint16_t> t(64);
  const auto index = [&](const CliffordElement& x) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == x) return static_cast<std::uint16_t>(i);
    }
    return std::uint16_t{0xffff};
  };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) t[i * 8 + j] = index(e.mul(elems[i], elems[j]));
  }
  const TableGroup table(8, t, index(blade({}, true)));
  EXPECT_TRUE(iso_oracle(table, TableGroup::quaternion()));
  EXPECT_TRUE(is_isometric(q_from_table(table), QuadraticForm::h_minus()));
}

TEST(G0Form, SpecExamples) {
  EXPECT_EQ(g0_form(2), QuadraticForm::h_minus());
  EXPECT_EQ(g0_form(1), QuadraticForm::q_one());
  EXPECT_EQ(classify(g0_form(3)), (FormClass{3, 1, FormKind::Minus, 1}));
  EXPECT_THROW(g0_form(0), std::invalid_argument);
  EXPECT_THROW(g0_form(17), std::invalid_argument);
}

TEST(G0Form, ModelSatisfiesPresentation) {
  for (int k = 1; k <= 8; ++k) {
    const GexGroup g(g0_form(k));
    for (int i = 0; i < k; ++i) {
      EXPECT_EQ(g.square(g.generator(i)), g.central_element());
      for (int j = 0; j < k; ++j) {
        if (i != j) EXPECT_EQ(g.commutator(g.generator(i), g.generator(j)), g.central_element());
      }
    }
  }
}

TEST(Psi, SpecExamples) {
  const int one[] = {1};
  const int twelve[] = {1, 2};
  EXPECT_EQ(psi(one, 5), blade({1, 5}));
  EXPECT_EQ(psi(std::span<const int>{}, 5), blade({}));
  EXPECT_EQ(psi(twelve, 5), blade({1, 2}));
  const int twice[] = {2, 2};
  EXPECT_EQ(psi(twice, 4), blade({}, true));
  const int bad[] = {5};
  EXPECT_THROW(psi(bad, 5), std::out_of_range);
  const int zero[] = {0};
  EXPECT_THROW(psi(zero, 5), std::out_of_range);
}

TEST(Psi, GeneratorImagesSatisfyRelations) {
  for (int n = 2; n <= 10; ++n) {
    const EGroup e(n);
    for (int i = 1; i < n; ++i) {
      const int wi[] = {i};
      const CliffordElement a = psi(wi, n);
      EXPECT_EQ(e.mul(a, a), blade({}, true));
      for (int j = 1; j < n; ++j) {
        if (i == j) continue;
        const int wj[] = {j};
        const CliffordElement b = psi(wj, n);
        CliffordElement ba = e.mul(b, a);
        ba.negative = !ba.negative;
        EXPECT_EQ(e.mul(a, b), ba);
      }
    }
  }
}

TEST(Psi, VerifyExhaustive) {
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(verify_psi(n)) << n;
  EXPECT_THROW(verify_psi(1), std::invalid_argument);
  EXPECT_THROW(verify_psi(11), std::invalid_argument);
}

TEST(Psi, VerifySampled) {
  EXPECT_TRUE(verify_psi_sampled(9, 1000, 1));
  EXPECT_TRUE(verify_psi_sampled(10, 1000, 2));
  EXPECT_TRUE(verify_psi_sampled(14, 500, 3));
}

TEST(EnTable, SpecExamples) {
  EXPECT_EQ(en_expected_class(3), GroupClass::q8_power(1, 1));
  EXPECT_EQ(en_expected_class(8), GroupClass::q8_power_d8(3, 2));
  EXPECT_EQ(en_expected_class(5), GroupClass::q8_power_d8(2, 1));
  EXPECT_EQ(en_expected_class(4), GroupClass::q8_power(1, 2));
  EXPECT_EQ(en_expected_class(2), GroupClass::q8_power_z4(0, 1));
  EXPECT_THROW(en_expected_class(1), std::invalid_argument);
}

TEST(EnTable, EveryRowPasses) {
  const auto rows = verify_en_table(17);
  ASSERT_EQ(rows.size(), 16u);
  std::set<int> residues;
  for (const auto& row : rows) {
    EXPECT_TRUE(row.pass()) << row.to_string();
    residues.insert(row.n % 8);
  }
  EXPECT_EQ(residues.size(), 8u);
  EXPECT_EQ(rows[1].to_string(), "n=3 residue=3 computed=Q8xZ2 expected=Q8xZ2 PASS");
}

// E(n) x Z2 from the Clifford table itself, against the predicted class.
TEST(EnTable, CliffordTablesMatchPrediction) {
  for (int n = 2; n <= 4; ++n) {
    const EGroup e(n);
    const auto elems = e.elements();
    const int size = static_cast<int>(elems.size());
    std::vector<std::uint16_t> t(4 * size * size);
    const auto index = [&](const CliffordElement& x) {
      for (int i = 0; i < size; ++i) {
        if (elems[i] == x) return i;
      }
      return -1;
    };
    for (int i = 0; i < 2 * size; ++i) {
      for (int j = 0; j < 2 * size; ++j) {
        const int p = index(e.mul(elems[i % size], elems[j % size]));
        const int z = (i / size) ^ (j / size);
        t[i * 2 * size + j] = static_cast<std::uint16_t>(p + z * size);
      }
    }
    const TableGroup table(2 * size, t, index(blade({}, true)));
    const GexGroup model(direct_sum(standard_form(classify(g0_form(n - 1))), QuadraticForm::zero(1)));
    EXPECT_TRUE(iso_oracle(table, TableGroup::from_model(model))) << n;
    EXPECT_EQ(classify_group(model), en_expected_class(n));
  }
}

}  // namespace
}  // namespace gex2
