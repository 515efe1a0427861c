#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "polynil/abelian.hpp"
#include "polynil/multiplier.hpp"

using namespace polynil;

namespace {

FGAbelianGroup finite_group(std::vector<Integer> moduli) { return canonicalize(0, moduli); }

// Cyclic factors of a multiplier, with repetition, in chain order.
std::vector<Integer> cyclic_factors(const MultiplierStructure& m) {
  std::vector<Integer> out;
  for (const auto& l : m.layers)
    for (Integer i = 0; i < l.multiplicity; ++i) out.push_back(l.modulus);
  return out;
}

// Schur multiplier of Z_{n_1} + ... + Z_{n_k} with n_{i+1} | n_i:
// the i-th factor (1-based) contributes i - 1 copies of Z_{n_i}.
std::vector<Integer> classical_schur_factors(const FGAbelianGroup& g) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < g.torsion_length(); ++i)
    for (std::size_t c = 0; c < i; ++c) out.push_back(g.torsion()[i]);
  return out;
}

const ClassRow kAbelian({1});
const ClassRow kMetabelian({1, 1});

}  // namespace

TEST(PolynilpotentMultiplier, TwoEqualFactorsUnderRowOne) {
  for (int n = 2; n <= 9; ++n) {
    auto m = polynilpotent_multiplier(finite_group({n, n}), kAbelian);
    EXPECT_EQ(m, (MultiplierStructure{0, {{n, 1}}})) << n;
  }
}

TEST(PolynilpotentMultiplier, TwoGeneratorGroupsVanishForMetabelianRow) {
  for (int n = 2; n <= 9; ++n) EXPECT_TRUE(polynilpotent_multiplier(finite_group({n, n}), kMetabelian).is_trivial());
}

TEST(PolynilpotentMultiplier, ThreeEqualFactorsForMetabelianRow) {
  for (int n = 2; n <= 7; ++n)
    EXPECT_EQ(polynilpotent_multiplier(finite_group({n, n, n}), kMetabelian), (MultiplierStructure{0, {{n, 3}}}));
}

TEST(PolynilpotentMultiplier, KleinFourClassTwo) {
  auto m = polynilpotent_multiplier(finite_group({2, 2}), ClassRow({2}));
  EXPECT_EQ(m, (MultiplierStructure{0, {{2, 2}}}));
  EXPECT_EQ(to_string(m), "Z_2^(2)");
}

TEST(PolynilpotentMultiplier, FiniteNilpotentLikeShapeSkipsLeadingFactor) {
  // For finite G and t = 1 or c_1 >= 2: Z_{n_2}^(f_2) + Z_{n_3}^(f_3 - f_2) + ...
  for (const ClassRow& row : {ClassRow({1}), ClassRow({2}), ClassRow({2, 1}), ClassRow({3, 1})}) {
    auto g = finite_group({12, 6, 2});
    std::vector<MultiplierLayer> layers{{6, chi_chain(row, 2)}, {2, chi_chain(row, 3) - chi_chain(row, 2)}};
    EXPECT_EQ(polynilpotent_multiplier(g, row), normalize(MultiplierStructure{0, layers})) << row.str();
  }
}

TEST(PolynilpotentMultiplier, ClassicalSchurMultiplierUpToOrder64) {
  for (const auto& g : enumerate_abelian_groups(64))
    EXPECT_EQ(cyclic_factors(polynilpotent_multiplier(g, kAbelian)), classical_schur_factors(g)) << g;
}

TEST(PolynilpotentMultiplier, CyclicGroupsHaveTrivialMultiplierOutsideSolvableCase) {
  for (const ClassRow& row : {ClassRow({1}), ClassRow({2}), ClassRow({3}), ClassRow({2, 1}), ClassRow({1, 1}),
                              ClassRow({1, 2})})
    for (int n = 2; n <= 30; ++n) EXPECT_TRUE(polynilpotent_multiplier(finite_group({n}), row).is_trivial());
}

TEST(PolynilpotentMultiplier, SolvableLikeRowsKillAllTwoGeneratorGroups) {
  for (const ClassRow& row : {ClassRow({1, 1}), ClassRow({1, 2}), ClassRow({1, 1, 1}), ClassRow({1, 3, 2})})
    for (const auto& g : enumerate_abelian_groups(100))
      if (g.torsion_length() <= 2) {
        EXPECT_TRUE(polynilpotent_multiplier(g, row).is_trivial()) << g;
      }
}

TEST(PolynilpotentMultiplier, NormalizationMergesEqualModuli) {
  // f for row (1): 0, 0, 1, 3, 6 -> layers Z_4^0, Z_4^1, Z_2^2, Z_2^3 -> Z_4 + Z_2^(5)
  auto m = polynilpotent_multiplier(finite_group({4, 4, 2, 2}), kAbelian);
  EXPECT_EQ(m, (MultiplierStructure{0, {{4, 1}, {2, 5}}}));
  EXPECT_EQ(to_string(m), "Z_4 + Z_2^(5)");
}

TEST(MultiplierOrder, Examples) {
  EXPECT_EQ(multiplier_order(MultiplierStructure{}), MultiplierOrder{});
  MultiplierStructure s{0, {{4, 2}, {2, 1}}};
  EXPECT_EQ(multiplier_order(s), (MultiplierOrder{false, {{2, 5}}}));
  EXPECT_EQ(to_string(multiplier_order(s)), "2^5");
  EXPECT_TRUE(multiplier_order(MultiplierStructure{3, {{4, 2}}}).infinite);
}

TEST(MultiplierOrder, MatchesDirectProductOnSmallInstances) {
  for (const ClassRow& row : {ClassRow({1}), ClassRow({2}), ClassRow({1, 1}), ClassRow({2, 1})})
    for (const auto& g : enumerate_abelian_groups(48)) {
      auto m = polynilpotent_multiplier(g, row);
      Integer direct = 1;
      for (const auto& l : m.layers) direct *= boost::multiprecision::pow(l.modulus, static_cast<unsigned>(l.multiplicity));
      Integer from_factors = 1;
      for (const auto& [p, e] : multiplier_order(m).factors) {
        EXPECT_GE(e, 1);
        if (direct % p != 0) ADD_FAILURE() << "prime " << p << " does not divide " << direct;
        from_factors *= boost::multiprecision::pow(p, static_cast<unsigned>(e));
      }
      EXPECT_EQ(from_factors, direct) << g << " row " << row.str();
    }
}

TEST(TorsionFreeRank, Examples) {
  EXPECT_EQ(multiplier_torsion_free_rank(polynilpotent_multiplier(FGAbelianGroup::free(3), kAbelian)), 3);
  for (const auto& g : enumerate_abelian_groups(30))
    EXPECT_EQ(multiplier_torsion_free_rank(polynilpotent_multiplier(g, ClassRow({1, 2}))), 0);
  EXPECT_EQ(multiplier_torsion_free_rank(polynilpotent_multiplier(FGAbelianGroup::free(2), kMetabelian)), 0);
}

TEST(TorsionPart, Examples) {
  MultiplierStructure t{0, {{6, 2}}};
  EXPECT_EQ(torsion_part(t), t);
  EXPECT_TRUE(torsion_part(MultiplierStructure{5, {}}).is_trivial());

  auto m = polynilpotent_multiplier(canonicalize(3, {2}), kAbelian);
  EXPECT_EQ(m.free_rank, 3);
  EXPECT_EQ(torsion_part(m), (MultiplierStructure{0, {{2, 3}}}));
}

TEST(PolynilpotentMultiplier, QuotientOrdersDivideOnSubgroupChains) {
  for (const ClassRow& row : {ClassRow({1}), ClassRow({1, 1}), ClassRow({2})})
    for (const auto& g : enumerate_abelian_groups(64)) {
      const auto whole = multiplier_order(polynilpotent_multiplier(g, row));
      for (const auto& x : elements(g)) {
        const auto part = multiplier_order(polynilpotent_multiplier(quotient_by_subgroup(g, {x}), row));
        for (const auto& [p, e] : part.factors) {
          auto it = whole.factors.find(p);
          ASSERT_NE(it, whole.factors.end()) << g << " / <" << x << ">";
          EXPECT_LE(e, it->second);
        }
      }
    }
}
