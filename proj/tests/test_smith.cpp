#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polynil/smith.hpp"

using namespace polynil;

namespace {

void expect_valid_snf(const IntMatrix& a, const SNFResult& r) {
  ASSERT_EQ(r.u * a * r.v, r.d) << "A = " << a;
  EXPECT_EQ(absolute(oracle::determinant(r.u)), 1);
  EXPECT_EQ(absolute(oracle::determinant(r.v)), 1);
  for (std::size_t i = 0; i < r.d.rows(); ++i)
    for (std::size_t j = 0; j < r.d.cols(); ++j)
      if (i != j) {
        EXPECT_EQ(r.d(i, j), 0);
      }
  auto diag = r.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(diag[i], 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) {
        EXPECT_EQ(diag[i + 1], 0);
      } else {
        EXPECT_EQ(diag[i + 1] % diag[i], 0);
      }
    }
  }
}

}  // namespace

TEST(SmithNormalForm, AlreadyDiagonal) {
  IntMatrix a{{2}};
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.d, IntMatrix{{2}});
  EXPECT_EQ(r.u, IntMatrix{{1}});
  EXPECT_EQ(r.v, IntMatrix{{1}});
}

TEST(SmithNormalForm, RelationMatrixOfQuotient) {
  IntMatrix a{{4, 0}, {0, 2}, {2, 1}};
  // minor gcds: D1 = 1, D2 = gcd(8, 4, -4) = 4
  ASSERT_EQ(oracle::invariant_factors_by_minors(a), (std::vector<Integer>{1, 4}));
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.diagonal(), (std::vector<Integer>{1, 4}));
  expect_valid_snf(a, r);
}

TEST(SmithNormalForm, ZeroMatrix) {
  IntMatrix a(2, 2);
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.diagonal(), (std::vector<Integer>{0, 0}));
  expect_valid_snf(a, r);
}

TEST(SmithNormalForm, EmptyMatrices) {
  for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}}) {
    IntMatrix a(rows, cols);
    auto r = smith_normal_form(a);
    EXPECT_TRUE(r.diagonal().empty());
    EXPECT_EQ(r.u.rows(), rows);
    EXPECT_EQ(r.v.rows(), cols);
    EXPECT_EQ(r.u * a * r.v, r.d);
  }
}

TEST(SmithNormalForm, NegativeEntriesGivePositiveDiagonal) {
  IntMatrix a{{-6, 0}, {0, -4}};
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.diagonal(), (std::vector<Integer>{2, 12}));
  expect_valid_snf(a, r);
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
  Integer big = Integer(1) << 200;
  IntMatrix a(2, 2, {big, big + 1, big * 3, big * 3 + 2});
  auto r = smith_normal_form(a);
  expect_valid_snf(a, r);
  // det = -2^200, so both factors are nonzero
  EXPECT_EQ(r.diagonal(), oracle::invariant_factors_by_minors(a));
}

TEST(SmithNormalForm, RandomPropertiesAndMinorLadder) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-50, 50);
  std::uniform_int_distribution<int> sparsity(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    const bool sparse = sparsity(rng) == 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = sparse && entry(rng) % 3 ? 0 : entry(rng);
    auto r = smith_normal_form(a);
    expect_valid_snf(a, r);

    auto diag = r.diagonal();
    std::vector<Integer> nonzero;
    for (auto& d : diag)
      if (d != 0) nonzero.push_back(d);
    EXPECT_EQ(nonzero, oracle::invariant_factors_by_minors(a)) << "A = " << a;
  }
}
