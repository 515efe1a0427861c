#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polynil/abelian.hpp"
#include "polynil/multiplier.hpp"
#include "polynil/witt.hpp"

namespace polynil {

/// Which decision path produced a verdict.
enum class Rule {
  kTrivialGroup,          // E = 1 witnesses capability directly
  kBaer,                  // row (1): capable iff m >= 2, or m = 0, k >= 2, n_1 = n_2
  kNilpotentLikeFinite,   // t = 1 or c_1 >= 2, finite: k >= 2 and n_1 = n_2
  kNilpotentLikeInfinite, // t = 1 or c_1 >= 2, infinite: m >= 2
  kSolvableLikeFinite,    // t >= 2 and c_1 = 1, finite: k >= 3 and n_1 = n_2 = n_3
  kSolvableLikeInfinite,  // t >= 2 and c_1 = 1, infinite: m >= 3
  kOracle,                // exhaustive cyclic-quotient injectivity search
};

inline std::string_view rule_tag(Rule r) {
  switch (r) {
    case Rule::kTrivialGroup: return "trivial-group";
    case Rule::kBaer: return "baer";
    case Rule::kNilpotentLikeFinite: return "nilpotent-like-finite";
    case Rule::kNilpotentLikeInfinite: return "nilpotent-like-infinite";
    case Rule::kSolvableLikeFinite: return "solvable-like-finite";
    case Rule::kSolvableLikeInfinite: return "solvable-like-infinite";
    case Rule::kOracle: return "oracle";
  }
  throw std::logic_error("rule_tag: unknown rule");
}

/// Human-readable statement of the criterion a rule applies.
inline std::string_view rule_criterion(Rule r) {
  switch (r) {
    case Rule::kTrivialGroup: return "the trivial group is always capable";
    case Rule::kBaer: return "capable iff m >= 2, or m = 0, k >= 2 and n1 = n2";
    case Rule::kNilpotentLikeFinite: return "capable iff k >= 2 and n1 = n2";
    case Rule::kNilpotentLikeInfinite: return "capable iff m >= 2";
    case Rule::kSolvableLikeFinite: return "capable iff k >= 3 and n1 = n2 = n3";
    case Rule::kSolvableLikeInfinite: return "capable iff m >= 3";
    case Rule::kOracle: return "capable iff no cyclic quotient preserves the multiplier order";
  }
  throw std::logic_error("rule_criterion: unknown rule");
}

struct CapabilityVerdict {
  bool capable = false;
  Rule rule = Rule::kOracle;
  /// First element x (in enumeration order) with VM(G) -> VM(G/<x>) injective.
  /// Only the oracle fills this, and only for non-capable groups.
  std::optional<GroupElement> witness;
};

/// Closed-form classification of finitely generated abelian groups.
inline CapabilityVerdict is_capable_closed_form(const FGAbelianGroup& g, const ClassRow& row) {
  if (g.is_trivial()) return {true, Rule::kTrivialGroup, std::nullopt};

  const std::size_t m = g.rank();
  const std::size_t k = g.torsion_length();
  const bool baer = row.length() == 1 && row.first() == 1;

  if (row.is_solvable_like()) {
    if (m > 0) return {m >= 3, Rule::kSolvableLikeInfinite, std::nullopt};
    const bool capable = k >= 3 && g.torsion()[0] == g.torsion()[1] && g.torsion()[1] == g.torsion()[2];
    return {capable, Rule::kSolvableLikeFinite, std::nullopt};
  }
  if (m > 0) return {m >= 2, baer ? Rule::kBaer : Rule::kNilpotentLikeInfinite, std::nullopt};
  const bool capable = k >= 2 && g.torsion()[0] == g.torsion()[1];
  return {capable, baer ? Rule::kBaer : Rule::kNilpotentLikeFinite, std::nullopt};
}

/// Whether VM(g) -> VM(g / <gens>) is injective, decided by comparing the
/// (finite) multiplier orders. Throws Unsupported for infinite g.
inline bool injectivity_test(const FGAbelianGroup& g, const std::vector<GroupElement>& gens, const ClassRow& row) {
  if (!g.is_finite()) throw Unsupported("injectivity_test: the order criterion needs a finite group");
  for (const auto& x : gens)
    if (!contains(g, x)) throw InvalidInput("injectivity_test: generator is not an element of the group");
  const auto whole = multiplier_order(polynilpotent_multiplier(g, row));
  const auto quotient = multiplier_order(polynilpotent_multiplier(quotient_by_subgroup(g, gens), row));
  return whole == quotient;
}

/// Exhaustive check: g is capable iff no non-identity cyclic subgroup <x> has
/// an injective natural map VM(g) -> VM(g/<x>). Throws Unsupported for infinite g.
inline CapabilityVerdict is_capable_oracle(const FGAbelianGroup& g, const ClassRow& row) {
  if (!g.is_finite()) throw Unsupported("is_capable_oracle: cannot enumerate cyclic subgroups of an infinite group");
  const auto whole = multiplier_order(polynilpotent_multiplier(g, row));
  for (const auto& x : elements(g)) {
    if (x.is_identity()) continue;
    const auto q = multiplier_order(polynilpotent_multiplier(quotient_by_subgroup(g, {x}), row));
    if (q == whole) return {false, Rule::kOracle, x};
  }
  return {true, Rule::kOracle, std::nullopt};
}

/// V**(G) computed pointwise, with the largest capable quotient G / V**(G).
struct EpicenterResult {
  std::vector<GroupElement> members;
  FGAbelianGroup structure;
  FGAbelianGroup quotient;
};

inline EpicenterResult epicenter(const FGAbelianGroup& g, const ClassRow& row) {
  if (!g.is_finite()) throw Unsupported("epicenter: only finite groups are supported");
  const auto whole = multiplier_order(polynilpotent_multiplier(g, row));
  EpicenterResult out;
  for (const auto& x : elements(g)) {
    if (x.is_identity() ||
        multiplier_order(polynilpotent_multiplier(quotient_by_subgroup(g, {x}), row)) == whole)
      out.members.push_back(x);
  }

  const std::set<GroupElement> member_set(out.members.begin(), out.members.end());
  for (const auto& x : out.members) {
    if (!member_set.contains(negate(g, x)))
      throw std::logic_error("epicenter: member set is not closed under negation");
    for (const auto& y : out.members)
      if (!member_set.contains(add(g, x, y)))
        throw std::logic_error("epicenter: member set is not closed under addition");
  }

  out.structure = subgroup_generated(g, out.members);
  out.quotient = quotient_by_subgroup(g, out.members);
  return out;
}

inline FGAbelianGroup largest_capable_quotient(const FGAbelianGroup& g, const ClassRow& row) {
  return epicenter(g, row).quotient;
}

}  // namespace polynil
