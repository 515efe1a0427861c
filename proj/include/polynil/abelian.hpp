#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polynil/integer.hpp"
#include "polynil/int_matrix.hpp"
#include "polynil/smith.hpp"

namespace polynil {

inline std::strong_ordering compare(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

/// Z^rank + Z_{torsion[0]} + ... + Z_{torsion[k-1]} in invariant-factor form:
/// every torsion entry is >= 2 and torsion[i+1] divides torsion[i].
///
/// Only canonicalize() and the named constructors produce values, so the
/// invariants hold for every FGAbelianGroup in circulation.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t torsion_length() const { return torsion_.size(); }
  /// The i-th invariant factor (0-based), or 1 past the end of the chain.
  Integer factor(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Integer(1); }

  bool is_finite() const { return rank_ == 0; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
  friend std::strong_ordering operator<=>(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return compare(a.torsion_, b.torsion_);
  }

 private:
  FGAbelianGroup(std::size_t rank, std::vector<Integer> torsion) : rank_(rank), torsion_(std::move(torsion)) {}
  friend FGAbelianGroup canonicalize(std::size_t rank, const std::vector<Integer>& moduli);

  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// An element of a specific FGAbelianGroup: integer coordinates on the free
/// summands and reduced residues 0 <= a_i < n_i on the cyclic ones.
struct GroupElement {
  std::vector<Integer> free_part;
  std::vector<Integer> torsion_part;

  bool is_identity() const {
    auto zero = [](const Integer& x) { return x == 0; };
    return std::all_of(free_part.begin(), free_part.end(), zero) &&
           std::all_of(torsion_part.begin(), torsion_part.end(), zero);
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = compare(a.free_part, b.free_part); c != 0) return c;
    return compare(a.torsion_part, b.torsion_part);
  }
};

/// Mathematical floor-mod: result in [0, n).
inline Integer reduce_mod(const Integer& x, const Integer& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

/// Builds an element of g, reducing torsion coordinates modulo the invariant factors.
inline GroupElement make_element(const FGAbelianGroup& g, std::vector<Integer> free_part,
                                 std::vector<Integer> torsion_part) {
  if (free_part.size() != g.rank() || torsion_part.size() != g.torsion_length())
    throw InvalidInput("make_element: coordinate counts do not match the group");
  for (std::size_t i = 0; i < torsion_part.size(); ++i)
    torsion_part[i] = reduce_mod(torsion_part[i], g.torsion()[i]);
  return GroupElement{std::move(free_part), std::move(torsion_part)};
}

inline GroupElement identity_element(const FGAbelianGroup& g) {
  return GroupElement{std::vector<Integer>(g.rank()), std::vector<Integer>(g.torsion_length())};
}

inline bool contains(const FGAbelianGroup& g, const GroupElement& x) {
  if (x.free_part.size() != g.rank() || x.torsion_part.size() != g.torsion_length()) return false;
  for (std::size_t i = 0; i < x.torsion_part.size(); ++i)
    if (x.torsion_part[i] < 0 || x.torsion_part[i] >= g.torsion()[i]) return false;
  return true;
}

inline GroupElement add(const FGAbelianGroup& g, const GroupElement& x, const GroupElement& y) {
  GroupElement out = x;
  for (std::size_t i = 0; i < out.free_part.size(); ++i) out.free_part[i] += y.free_part[i];
  for (std::size_t i = 0; i < out.torsion_part.size(); ++i)
    out.torsion_part[i] = reduce_mod(out.torsion_part[i] + y.torsion_part[i], g.torsion()[i]);
  return out;
}

inline GroupElement negate(const FGAbelianGroup& g, const GroupElement& x) {
  GroupElement out = x;
  for (auto& c : out.free_part) c = -c;
  for (std::size_t i = 0; i < out.torsion_part.size(); ++i)
    out.torsion_part[i] = reduce_mod(-out.torsion_part[i], g.torsion()[i]);
  return out;
}

inline GroupElement scale(const FGAbelianGroup& g, const Integer& k, const GroupElement& x) {
  GroupElement out = x;
  for (auto& c : out.free_part) c *= k;
  for (std::size_t i = 0; i < out.torsion_part.size(); ++i)
    out.torsion_part[i] = reduce_mod(out.torsion_part[i] * k, g.torsion()[i]);
  return out;
}

/// Normalizes Z^rank + (+) Z_{moduli} into invariant-factor form via the Smith
/// form of diag(moduli). Unit moduli vanish. Throws InvalidInput on modulus <= 0.
inline FGAbelianGroup canonicalize(std::size_t rank, const std::vector<Integer>& moduli) {
  for (const auto& n : moduli)
    if (n <= 0) throw InvalidInput("canonicalize: modulus must be positive, got " + n.str());
  auto snf = smith_normal_form(IntMatrix::diagonal(moduli));
  std::vector<Integer> torsion;
  for (auto& d : snf.diagonal())
    if (d > 1) torsion.push_back(d);
  std::reverse(torsion.begin(), torsion.end());
  return FGAbelianGroup(rank, std::move(torsion));
}

// Keeps canonicalize(0, {0}) from resolving to the C library's canonicalize(double*, const double*).
template <std::integral T>
FGAbelianGroup canonicalize(std::size_t rank, std::initializer_list<T> moduli) {
  return canonicalize(rank, std::vector<Integer>(moduli.begin(), moduli.end()));
}

inline FGAbelianGroup canonicalize(const FGAbelianGroup& g) { return canonicalize(g.rank(), g.torsion()); }

/// |G|; infinite whenever the rank is positive.
class Cardinality {
 public:
  static Cardinality infinite() { return Cardinality(); }
  static Cardinality finite(Integer n) { return Cardinality(std::move(n)); }

  bool is_infinite() const { return infinite_; }
  const Integer& value() const {
    if (infinite_) throw Unsupported("Cardinality::value: group is infinite");
    return value_;
  }
  std::string str() const { return infinite_ ? "infinite" : value_.str(); }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;

 private:
  Cardinality() : infinite_(true) {}
  explicit Cardinality(Integer n) : infinite_(false), value_(std::move(n)) {}

  bool infinite_;
  Integer value_;
};

inline Cardinality order(const FGAbelianGroup& g) {
  if (g.rank() > 0) return Cardinality::infinite();
  Integer n = 1;
  for (const auto& f : g.torsion()) n *= f;
  return Cardinality::finite(std::move(n));
}

/// g / <gens>, computed as the cokernel of the stacked relation matrix
/// (the diagonal relations of g, then one row per generator).
inline FGAbelianGroup quotient_by_subgroup(const FGAbelianGroup& g, const std::vector<GroupElement>& gens) {
  const std::size_t m = g.rank();
  const std::size_t k = g.torsion_length();
  for (const auto& x : gens)
    if (x.free_part.size() != m || x.torsion_part.size() != k)
      throw InvalidInput("quotient_by_subgroup: generator shape does not match the group");

  IntMatrix rel(k + gens.size(), m + k);
  for (std::size_t i = 0; i < k; ++i) rel(i, m + i) = g.torsion()[i];
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t j = 0; j < m; ++j) rel(k + r, j) = gens[r].free_part[j];
    for (std::size_t j = 0; j < k; ++j) rel(k + r, m + j) = gens[r].torsion_part[j];
  }

  std::size_t nonzero = 0;
  std::vector<Integer> moduli;
  for (auto& d : smith_normal_form(rel).diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    moduli.push_back(d);
  }
  return canonicalize(m + k - nonzero, moduli);
}

/// Lexicographic walk over the elements of a finite group, identity first,
/// last coordinate varying fastest.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GroupElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const GroupElement*;
    using reference = const GroupElement&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      const auto& n = group_->torsion();
      auto& a = current_.torsion_part;
      std::size_t i = a.size();
      while (i > 0) {
        --i;
        if (++a[i] < n[i]) return *this;
        a[i] = 0;
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.current_ == b.current_;
    }

   private:
    friend class ElementRange;
    iterator(const FGAbelianGroup* g, bool done) : group_(g), current_(identity_element(*g)), done_(done) {}

    const FGAbelianGroup* group_ = nullptr;
    GroupElement current_;
    bool done_ = true;
  };

  explicit ElementRange(FGAbelianGroup g) : group_(std::move(g)) {}

  iterator begin() const { return iterator(&group_, false); }
  iterator end() const { return iterator(&group_, true); }

 private:
  FGAbelianGroup group_;
};

/// Every element of a finite group exactly once. Throws Unsupported for rank >= 1.
inline ElementRange elements(const FGAbelianGroup& g) {
  if (!g.is_finite()) throw Unsupported("elements: cannot enumerate an infinite group");
  return ElementRange(g);
}

namespace detail {

// Invariant factors of a finite abelian group given as an explicit element
// set. For each prime p, log_p #{h : p^j h = 0} = sum_i min(e_i, j), so
// successive differences count the cyclic p-factors of exponent >= j.
inline FGAbelianGroup type_of_element_set(const FGAbelianGroup& g, const std::set<GroupElement>& members) {
  const Integer size(members.size());
  std::vector<Integer> moduli;
  for (const auto& [p, total] : factor(size)) {
    std::vector<std::size_t> at_least;  // at_least[j-1] = # p-factors with exponent >= j
    std::size_t prev_log = 0;
    Integer pj = 1;
    for (std::size_t j = 1;; ++j) {
      pj *= p;
      std::size_t killed = 0;
      for (const auto& h : members)
        if (scale(g, pj, h).is_identity()) ++killed;
      const auto prime = static_cast<std::size_t>(p);
      std::size_t exponent_sum = 0;
      for (std::size_t c = killed; c > 1 && c % prime == 0; c /= prime) ++exponent_sum;
      if (exponent_sum == prev_log) break;
      at_least.push_back(exponent_sum - prev_log);
      prev_log = exponent_sum;
    }
    // Conjugate partition: factor r has exponent #{j : at_least[j] > r}.
    for (std::size_t r = 0; !at_least.empty() && r < at_least.front(); ++r) {
      Integer q = 1;
      for (std::size_t c : at_least)
        if (c > r) q *= p;
      moduli.push_back(q);
    }
  }
  return canonicalize(0, moduli);
}

}  // namespace detail

/// Isomorphism type of <gens>, by closure under addition. The ambient group may
/// be infinite only if every generator has zero free part.
inline FGAbelianGroup subgroup_generated(const FGAbelianGroup& g, const std::vector<GroupElement>& gens) {
  for (const auto& x : gens) {
    if (!contains(g, x)) throw InvalidInput("subgroup_generated: generator is not an element of the group");
    for (const auto& c : x.free_part)
      if (c != 0) throw Unsupported("subgroup_generated: generator has a nonzero free part");
  }
  std::set<GroupElement> members{identity_element(g)};
  std::vector<GroupElement> frontier{identity_element(g)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& h : frontier)
      for (const auto& x : gens) {
        auto s = add(g, h, x);
        if (members.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return detail::type_of_element_set(g, members);
}

/// Necessary shape condition for h to embed in g as a finite subgroup:
/// h is finite, no longer than g, and m_i | n_i along the chains.
inline bool is_valid_subgroup_shape(const FGAbelianGroup& h, const FGAbelianGroup& g) {
  if (!h.is_finite()) return false;
  if (h.torsion_length() > g.torsion_length()) return false;
  for (std::size_t i = 0; i < h.torsion_length(); ++i)
    if (g.torsion()[i] % h.torsion()[i] != 0) return false;
  return true;
}

namespace detail {

inline void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& prefix,
                       std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Integer partitions of n as non-increasing part lists, largest-first order.
inline std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  detail::partitions(n, n, prefix, out);
  return out;
}

/// All finite abelian groups of a given order, one per isomorphism type,
/// sorted by canonical form.
inline std::vector<FGAbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw InvalidInput("abelian_groups_of_order: order must be positive");
  std::vector<std::vector<Integer>> chains{{}};
  for (const auto& [p, e] : factor(Integer(n))) {
    std::vector<std::vector<Integer>> next;
    for (const auto& lambda : integer_partitions(static_cast<std::size_t>(e)))
      for (const auto& chain : chains) {
        // Merge the p-part exponents into the descending chain position-wise.
        std::vector<Integer> merged(std::max(chain.size(), lambda.size()), Integer(1));
        for (std::size_t i = 0; i < chain.size(); ++i) merged[i] = chain[i];
        for (std::size_t i = 0; i < lambda.size(); ++i) merged[i] *= boost::multiprecision::pow(p, static_cast<unsigned>(lambda[i]));
        next.push_back(std::move(merged));
      }
    chains = std::move(next);
  }
  std::vector<FGAbelianGroup> out;
  out.reserve(chains.size());
  for (const auto& c : chains) out.push_back(canonicalize(0, c));
  std::sort(out.begin(), out.end());
  return out;
}

/// Every isomorphism type of finite abelian group of order <= order_bound,
/// ordered by group order and then canonical form.
inline std::vector<FGAbelianGroup> enumerate_abelian_groups(std::uint64_t order_bound) {
  if (order_bound == 0) throw InvalidInput("enumerate_abelian_groups: bound must be positive");
  std::vector<FGAbelianGroup> out;
  for (std::uint64_t n = 1; n <= order_bound; ++n) {
    auto groups = abelian_groups_of_order(n);
    out.insert(out.end(), std::make_move_iterator(groups.begin()), std::make_move_iterator(groups.end()));
  }
  return out;
}

/// "Z^2 + Z12 + Z2"; the trivial group prints as "1".
inline std::string to_string(const FGAbelianGroup& g) {
  if (g.is_trivial()) return "1";
  std::string out;
  auto term = [&](const std::string& t) { out += (out.empty() ? "" : " + ") + t; };
  if (g.rank() == 1) term("Z");
  else if (g.rank() > 1) term("Z^" + std::to_string(g.rank()));
  for (const auto& n : g.torsion()) term("Z" + n.str());
  return out;
}

/// "(2, 0)" for finite groups; free coordinates come first, separated by ';'.
inline std::string to_string(const GroupElement& x) {
  auto join = [](const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s;
  };
  if (x.free_part.empty()) return "(" + join(x.torsion_part) + ")";
  if (x.torsion_part.empty()) return "(" + join(x.free_part) + ")";
  return "(" + join(x.free_part) + "; " + join(x.torsion_part) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const FGAbelianGroup& g) { return os << to_string(g); }
inline std::ostream& operator<<(std::ostream& os, const GroupElement& x) { return os << to_string(x); }

}  // namespace polynil
