#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gex2/f2linalg.hpp"
#include "gex2/random.hpp"

namespace gex2 {
namespace {

BitMatrix triangle() { return BitMatrix::from_rows(std::vector<std::string>{"011", "101", "110"}); }

// Rank by brute force: the size of the span of the rows is 2^rank.
int span_rank(const BitMatrix& m) {
  std::vector<std::uint64_t> span{0};
  for (int i = 0; i < m.rows(); ++i) {
    const std::uint64_t r = m.row(i).bits();
    if (std::find(span.begin(), span.end(), r) != span.end()) continue;
    const std::size_t n = span.size();
    for (std::size_t k = 0; k < n; ++k) span.push_back(span[k] ^ r);
  }
  int r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

BitMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j : random_vector(cols, rng).support()) m.set(i, j, true);
  }
  return m;
}

BitMatrix random_alternating(int n, std::mt19937_64& rng) {
  BitMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1) {
        b.set(i, j, true);
        b.set(j, i, true);
      }
    }
  }
  return b;
}

TEST(BitVector, MasksBitsBeyondDim) {
  const BitVector v(3, 0xff);
  EXPECT_EQ(v.bits(), 0x7u);
  EXPECT_EQ(v, BitVector::parse("111"));
  EXPECT_EQ(v.weight(), 3);
}

TEST(BitVector, ParseAndPrintCoordinateZeroFirst) {
  const BitVector v = BitVector::parse("0110");
  EXPECT_EQ(v.dim(), 4);
  EXPECT_FALSE(v[0]);
  EXPECT_TRUE(v[1]);
  EXPECT_EQ(v.to_string(), "0110");
  EXPECT_EQ(v.support(), (std::vector<int>{1, 2}));
  EXPECT_THROW(BitVector::parse("01x"), std::invalid_argument);
}

TEST(BitVector, Arithmetic) {
  const BitVector a = BitVector::parse("1100");
  const BitVector b = BitVector::parse("1010");
  EXPECT_EQ(a + b, BitVector::parse("0110"));
  EXPECT_TRUE(a.dot(b));
  EXPECT_FALSE(a.dot(BitVector::parse("0011")));
  EXPECT_EQ(a.concat(BitVector::parse("1")), BitVector::parse("11001"));
  EXPECT_EQ(a.with(3, true), BitVector::parse("1101"));
  EXPECT_THROW(a + BitVector::parse("11"), std::invalid_argument);
}

TEST(BitVector, DimensionCap) {
  EXPECT_NO_THROW(BitVector(64, ~std::uint64_t{0}));
  EXPECT_THROW(BitVector(65), std::invalid_argument);
  EXPECT_THROW(BitVector(-1), std::invalid_argument);
  EXPECT_EQ(BitVector(64, ~std::uint64_t{0}).weight(), 64);
}

TEST(BitMatrix, DimensionCap) {
  EXPECT_NO_THROW(BitMatrix(64, 64));
  EXPECT_THROW(BitMatrix(65, 1), std::invalid_argument);
  EXPECT_THROW(BitMatrix(1, 65), std::invalid_argument);
}

TEST(BitMatrix, ApplyTransposeProduct) {
  const BitMatrix m = BitMatrix::from_rows(std::vector<std::string>{"110", "011"});
  EXPECT_EQ(m.apply(BitVector::parse("101")), BitVector::parse("11"));
  EXPECT_EQ(m.transpose(), BitMatrix::from_rows(std::vector<std::string>{"10", "11", "01"}));
  EXPECT_EQ(m.column(1), BitVector::parse("11"));
  EXPECT_EQ(m * BitMatrix::identity(3), m);
  EXPECT_EQ(BitMatrix::from_columns({m.column(0), m.column(1), m.column(2)}), m);
  EXPECT_TRUE(triangle().is_alternating());
  EXPECT_FALSE(BitMatrix::identity(2).is_alternating());
  EXPECT_TRUE(BitMatrix::identity(2).is_symmetric());
}

TEST(BitMatrix, BilinearMatchesDefinition) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const BitMatrix m = random_matrix(5, 5, rng);
    const BitVector u = random_vector(5, rng);
    const BitVector v = random_vector(5, rng);
    EXPECT_EQ(m.bilinear(u, v), u.dot(m.apply(v)));
  }
}

TEST(Rank, SpecExamples) {
  EXPECT_EQ(rank(BitMatrix::identity(3)), 3);
  EXPECT_EQ(rank(BitMatrix::zero(4, 4)), 0);
  EXPECT_EQ(rank(triangle()), 2);
  EXPECT_EQ(rank(BitMatrix(0, 0)), 0);
}

TEST(Rank, AgreesWithSpanSize) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 7);
    const int c = 1 + static_cast<int>(rng() % 7);
    const BitMatrix m = random_matrix(r, c, rng);
    const int k = rank(m);
    EXPECT_EQ(k, span_rank(m));
    EXPECT_LE(k, std::min(r, c));
    EXPECT_EQ(k, rank(m.transpose()));
  }
}

TEST(Rank, InvariantUnderPermutation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const BitMatrix m = random_matrix(n, n, rng);
    std::vector<int> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    BitMatrix p(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) p.set(i, j, m.at(rows[i], cols[j]));
    }
    EXPECT_EQ(rank(p), rank(m));
  }
}

TEST(KernelBasis, SpecExamples) {
  EXPECT_EQ(kernel_basis(BitMatrix::zero(2, 2)).size(), 2u);
  EXPECT_TRUE(kernel_basis(BitMatrix::identity(3)).empty());
  const auto k = kernel_basis(triangle());
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], BitVector::parse("111"));
}

TEST(KernelBasis, VectorsAreIndependentAndAnnihilated) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 8);
    const int c = 1 + static_cast<int>(rng() % 8);
    const BitMatrix m = random_matrix(r, c, rng);
    const auto k = kernel_basis(m);
    EXPECT_EQ(static_cast<int>(k.size()), c - rank(m));
    EXPECT_EQ(rank(k), static_cast<int>(k.size()));
    for (const auto& v : k) EXPECT_TRUE(m.apply(v).is_zero());
  }
}

TEST(Invertible, SpecExamples) {
  EXPECT_TRUE(is_invertible(BitMatrix::identity(4)));
  EXPECT_FALSE(is_invertible(BitMatrix::zero(3, 3)));
  EXPECT_TRUE(is_invertible(BitMatrix::from_rows(std::vector<std::string>{"11", "01"})));
  EXPECT_THROW(is_invertible(BitMatrix(2, 3)), std::invalid_argument);
}

TEST(Invertible, InverseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const BitMatrix t = random_invertible(n, rng);
    EXPECT_EQ(t * inverse(t), BitMatrix::identity(n));
    EXPECT_EQ(inverse(t) * t, BitMatrix::identity(n));
  }
  EXPECT_THROW(inverse(triangle()), std::invalid_argument);
}

TEST(Invertible, CountOfGl2) {
  int count = 0;
  for (int bits = 0; bits < 16; ++bits) {
    BitMatrix m(2, 2);
    for (int k = 0; k < 4; ++k) m.set(k / 2, k % 2, (bits >> k) & 1);
    count += is_invertible(m);
  }
  EXPECT_EQ(count, 6);
}

TEST(SymplecticBasis, SpecExamples) {
  const auto zero = symplectic_basis(BitMatrix::zero(3, 3));
  EXPECT_TRUE(zero.pairs.empty());
  EXPECT_EQ(zero.radical.size(), 3u);

  const auto h = symplectic_basis(BitMatrix::from_rows(std::vector<std::string>{"01", "10"}));
  EXPECT_EQ(h.pairs.size(), 1u);
  EXPECT_TRUE(h.radical.empty());

  const auto t = symplectic_basis(triangle());
  ASSERT_EQ(t.pairs.size(), 1u);
  ASSERT_EQ(t.radical.size(), 1u);
  EXPECT_EQ(t.radical[0], BitVector::parse("111"));
}

TEST(SymplecticBasis, RejectsNonAlternating) {
  EXPECT_THROW(symplectic_basis(BitMatrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(symplectic_basis(BitMatrix::from_rows(std::vector<std::string>{"01", "00"})), std::invalid_argument);
  EXPECT_THROW(symplectic_basis(BitMatrix(2, 3)), std::invalid_argument);
}

TEST(SymplecticBasis, GramMatrixIsBlockHyperbolic) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const BitMatrix b = random_alternating(n, rng);
    const SymplecticBasis sb = symplectic_basis(b);
    const BitMatrix t = sb.as_matrix();
    ASSERT_TRUE(is_invertible(t));
    const int m = static_cast<int>(sb.pairs.size());
    EXPECT_EQ(2 * m, rank(b));

    BitMatrix expected(n, n);
    for (int k = 0; k < m; ++k) {
      expected.set(2 * k, 2 * k + 1, true);
      expected.set(2 * k + 1, 2 * k, true);
    }
    EXPECT_EQ(t.transpose() * b * t, expected);
  }
}

}  // namespace
}  // namespace gex2
