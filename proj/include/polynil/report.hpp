#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "polynil/abelian.hpp"
#include "polynil/capability.hpp"
#include "polynil/multiplier.hpp"
#include "polynil/witt.hpp"

namespace polynil {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
inline Json integer_json(const Integer& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json integers_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

inline Json to_json(const FGAbelianGroup& g) {
  return Json{{"rank", g.rank()}, {"torsion", integers_json(g.torsion())}};
}

inline Json to_json(const Cardinality& c) { return c.is_infinite() ? Json("infinite") : integer_json(c.value()); }

inline Json to_json(const GroupElement& x) {
  return Json{{"free", integers_json(x.free_part)}, {"torsion", integers_json(x.torsion_part)}};
}

inline Json to_json(const ClassRow& row) { return Json(row.classes()); }

inline Json to_json(const MultiplierStructure& m) {
  Json layers = Json::array();
  for (const auto& l : m.layers)
    layers.push_back(Json{{"modulus", integer_json(l.modulus)}, {"multiplicity", integer_json(l.multiplicity)}});
  return Json{{"free_rank", integer_json(m.free_rank)}, {"layers", layers}, {"text", to_string(m)}};
}

inline Json to_json(const MultiplierOrder& o) {
  Json factors = Json::object();
  for (const auto& [p, e] : o.factors) factors[p.str()] = integer_json(e);
  return Json{{"infinite", o.infinite}, {"factors", factors}, {"text", to_string(o)}};
}

inline Json to_json(const CapabilityVerdict& v) {
  return Json{{"capable", v.capable},
              {"rule", std::string(rule_tag(v.rule))},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

inline Json to_json(const EpicenterResult& e) {
  Json members = Json::array();
  for (const auto& x : e.members) members.push_back(to_json(x));
  return Json{{"members", members},
              {"structure", to_json(e.structure)},
              {"structure_text", to_string(e.structure)},
              {"quotient", to_json(e.quotient)},
              {"quotient_text", to_string(e.quotient)}};
}

/// One (group, class row) line of a census file.
struct CensusRecord {
  FGAbelianGroup group;
  ClassRow row;
  MultiplierStructure multiplier;
  MultiplierOrder multiplier_order;
  CapabilityVerdict closed_form;
  CapabilityVerdict oracle;

  bool agree() const { return closed_form.capable == oracle.capable; }
};

inline Json to_json(const CensusRecord& r) {
  return Json{{"group", to_json(r.group)},
              {"text", to_string(r.group)},
              {"order", to_json(order(r.group))},
              {"row", to_json(r.row)},
              {"multiplier", to_json(r.multiplier)},
              {"multiplier_order", to_json(r.multiplier_order)},
              {"closed_form", to_json(r.closed_form)},
              {"oracle", to_json(r.oracle)},
              {"agree", r.agree()}};
}

inline CensusRecord census_record(const FGAbelianGroup& g, const ClassRow& row) {
  CensusRecord r{g, row, {}, {}, {}, {}};
  r.multiplier = polynilpotent_multiplier(g, row);
  r.multiplier_order = multiplier_order(r.multiplier);
  r.closed_form = is_capable_closed_form(g, row);
  r.oracle = is_capable_oracle(g, row);
  return r;
}

struct RowSummary {
  ClassRow row;
  std::size_t groups = 0;
  std::size_t capable = 0;
};

struct CensusSummary {
  std::vector<RowSummary> rows;
  std::vector<CensusRecord> disagreements;
  std::size_t records = 0;
};

/// Runs both decision paths on every finite abelian group of order <=
/// order_bound and every row, writing one JSON line per (group, row) to
/// `out`. Work is spread over `threads` workers; lines are emitted in
/// (order, canonical form, row) order regardless of scheduling.
inline CensusSummary run_census(std::uint64_t order_bound, std::vector<ClassRow> rows, std::ostream& out,
                                unsigned threads = 1) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const auto groups = enumerate_abelian_groups(order_bound);

  const std::size_t total = groups.size() * rows.size();
  std::vector<std::optional<CensusRecord>> slots(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < total; i = next++)
        slots[i] = census_record(groups[i / rows.size()], rows[i % rows.size()]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = total;
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CensusSummary summary;
  for (const auto& row : rows) summary.rows.push_back(RowSummary{row});
  for (std::size_t i = 0; i < total; ++i) {
    const auto& r = *slots[i];
    out << to_json(r).dump() << '\n';
    auto& s = summary.rows[i % rows.size()];
    ++s.groups;
    if (r.closed_form.capable) ++s.capable;
    if (!r.agree()) summary.disagreements.push_back(r);
  }
  summary.records = total;
  return summary;
}

}  // namespace polynil
