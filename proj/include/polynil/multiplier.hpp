#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynil/abelian.hpp"
#include "polynil/integer.hpp"
#include "polynil/witt.hpp"

namespace polynil {

/// Z_modulus^(multiplicity)
struct MultiplierLayer {
  Integer modulus;
  Integer multiplicity;

  friend bool operator==(const MultiplierLayer&, const MultiplierLayer&) = default;
};

/// Shape of a polynilpotent multiplier: Z^(free_rank) plus torsion layers.
///
/// Normalized form (what every function here returns): no layer with
/// multiplicity 0 or modulus 1, moduli strictly decreasing along the chain,
/// equal moduli merged. Structural equality is then isomorphism.
struct MultiplierStructure {
  Integer free_rank = 0;
  std::vector<MultiplierLayer> layers;

  bool is_trivial() const { return free_rank == 0 && layers.empty(); }

  friend bool operator==(const MultiplierStructure&, const MultiplierStructure&) = default;
};

inline MultiplierStructure normalize(MultiplierStructure m) {
  std::vector<MultiplierLayer> kept;
  for (auto& layer : m.layers) {
    if (layer.multiplicity < 0) throw std::logic_error("normalize: negative layer multiplicity");
    if (layer.multiplicity == 0 || layer.modulus == 1) continue;
    if (!kept.empty() && kept.back().modulus == layer.modulus) {
      kept.back().multiplicity += layer.multiplicity;
      continue;
    }
    kept.push_back(std::move(layer));
  }
  m.layers = std::move(kept);
  return m;
}

/// Prime -> exponent; every stored exponent is >= 1.
using FactoredOrder = std::map<Integer, Integer>;

/// |VM(G)| in factored form, or infinite when the multiplier has free rank.
struct MultiplierOrder {
  bool infinite = false;
  FactoredOrder factors;

  friend bool operator==(const MultiplierOrder&, const MultiplierOrder&) = default;
};

/// The polynilpotent multiplier of g for the variety with class row `row`:
/// Z^(f_m) + Z_{n_1}^(f_{m+1} - f_m) + ... + Z_{n_k}^(f_{m+k} - f_{m+k-1}).
inline MultiplierStructure polynilpotent_multiplier(const FGAbelianGroup& g, const ClassRow& row) {
  const Integer m(g.rank());
  MultiplierStructure out;
  out.free_rank = chi_chain(row, m);
  Integer prev = out.free_rank;
  for (std::size_t i = 0; i < g.torsion_length(); ++i) {
    Integer f = chi_chain(row, m + i + 1);
    if (f < prev) throw std::logic_error("polynilpotent_multiplier: f_i decreased along the chain");
    out.layers.push_back({g.torsion()[i], f - prev});
    prev = std::move(f);
  }
  return normalize(std::move(out));
}

inline MultiplierOrder multiplier_order(const MultiplierStructure& m) {
  MultiplierOrder out;
  if (m.free_rank > 0) {
    out.infinite = true;
    return out;
  }
  for (const auto& layer : m.layers)
    for (const auto& [p, e] : factor(layer.modulus)) out.factors[p] += e * layer.multiplicity;
  return out;
}

inline Integer multiplier_torsion_free_rank(const MultiplierStructure& m) { return m.free_rank; }

inline MultiplierStructure torsion_part(MultiplierStructure m) {
  m.free_rank = 0;
  return m;
}

/// "Z^(3) + Z_4^(2) + Z_2"; the trivial multiplier prints as "0".
inline std::string to_string(const MultiplierStructure& m) {
  if (m.is_trivial()) return "0";
  std::string out;
  auto term = [&](const std::string& t) { out += (out.empty() ? "" : " + ") + t; };
  if (m.free_rank == 1) term("Z");
  else if (m.free_rank > 1) term("Z^(" + m.free_rank.str() + ")");
  for (const auto& layer : m.layers)
    term("Z_" + layer.modulus.str() + (layer.multiplicity == 1 ? "" : "^(" + layer.multiplicity.str() + ")"));
  return out;
}

/// "2^5 * 3"; order 1 prints as "1".
inline std::string to_string(const MultiplierOrder& o) {
  if (o.infinite) return "infinite";
  if (o.factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : o.factors) {
    if (!out.empty()) out += " * ";
    out += p.str();
    if (e != 1) out += "^" + e.str();
  }
  return out;
}

}  // namespace polynil
