#pragma once

// Command-line front end for polynil, kept in a header so the test suite can
// drive it in-process. tools/polynil.cpp is the thin main().

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "polynil/abelian.hpp"
#include "polynil/capability.hpp"
#include "polynil/group_spec.hpp"
#include "polynil/multiplier.hpp"
#include "polynil/report.hpp"
#include "polynil/witt.hpp"

namespace polynil::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kUnsupported = 3,
  kDisagreement = 4,
};

/// Worker count for the census: POLYNIL_THREADS if set, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("POLYNIL_THREADS"); env && *env) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw InvalidInput(std::string("POLYNIL_THREADS must be a positive integer, got '") + env + "'");
    return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::string verdict_line(const CapabilityVerdict& v) {
  std::string out = v.capable ? "capable" : "not capable";
  out += " (" + std::string(rule_tag(v.rule)) + ": " + std::string(rule_criterion(v.rule)) + ")";
  return out;
}

inline std::string reproduction_line(const CensusRecord& r) {
  return "polynil capable \"" + to_string(r.group) + "\" --variety " + r.row.str() + " --oracle";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynilpotent multipliers and capability of finitely generated abelian groups", "polynil"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string variety = "1";
  bool json = false;
  bool oracle = false;
  std::uint64_t order_bound = 16;
  std::vector<std::string> census_rows;
  std::string output_path;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("group", spec_text, "Group spec, e.g. \"Z^2 + Z12 + Z6\" or '{\"rank\":0,\"torsion\":[4,2]}'")->required();
    sub->add_flag("--json", json, "Emit JSON instead of text");
  };
  auto add_variety = [&](CLI::App* sub) {
    sub->add_option("--variety", variety, "Class row c1,c2,...,ct of the polynilpotent variety")->capture_default_str();
  };

  auto* canon = app.add_subcommand("canonicalize", "Print the invariant-factor form of a group");
  add_spec(canon);
  auto* mult = app.add_subcommand("multiplier", "Polynilpotent multiplier of a group");
  add_spec(mult);
  add_variety(mult);
  auto* cap = app.add_subcommand("capable", "Decide capability with respect to a polynilpotent variety");
  add_spec(cap);
  add_variety(cap);
  cap->add_flag("--oracle", oracle, "Also run the exhaustive oracle and require agreement");
  auto* epi = app.add_subcommand("epicenter", "Epicenter and largest capable quotient of a finite group");
  add_spec(epi);
  add_variety(epi);
  auto* census = app.add_subcommand("census", "Cross-check closed form against the oracle on all small groups");
  census->add_option("output", output_path, "Path of the JSON Lines file to write")->required();
  census->add_option("--order-bound", order_bound, "Largest group order to include")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  census->add_option("--variety", census_rows, "Class row (repeatable); default: 1, 2, 3, 1,1, 1,2, 2,1, 1,1,1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*census) {
      std::vector<ClassRow> rows;
      if (census_rows.empty()) census_rows = {"1", "2", "3", "1,1", "1,2", "2,1", "1,1,1"};
      for (const auto& r : census_rows) rows.push_back(ClassRow::parse(r));
      const unsigned threads = thread_count();

      std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "polynil: cannot open '" << output_path << "' for writing\n";
        return kInternalError;
      }
      const auto summary = run_census(order_bound, rows, file, threads);
      file.close();
      if (!file) {
        err << "polynil: failed writing '" << output_path << "'\n";
        return kInternalError;
      }

      out << "census: " << summary.records << " records, groups of order <= " << order_bound << " -> "
          << output_path << '\n';
      for (const auto& s : summary.rows)
        out << "  row (" << s.row.str() << "): " << s.capable << " of " << s.groups << " groups capable\n";
      out << "disagreements: " << summary.disagreements.size() << '\n';
      if (!summary.disagreements.empty()) {
        for (const auto& r : summary.disagreements) err << "disagreement: " << reproduction_line(r) << '\n';
        return kDisagreement;
      }
      return kOk;
    }

    const GroupSpec spec = parse_group_spec(spec_text);
    const FGAbelianGroup g = spec.canonical();
    const ClassRow row = ClassRow::parse(variety);

    if (*canon) {
      if (json)
        out << Json{{"group", to_json(g)}, {"text", to_string(g)}, {"order", to_json(order(g))}}.dump() << '\n';
      else
        out << to_string(g) << '\n';
      return kOk;
    }

    if (*mult) {
      const auto m = polynilpotent_multiplier(g, row);
      if (json)
        out << Json{{"group", to_json(g)},
                    {"row", to_json(row)},
                    {"multiplier", to_json(m)},
                    {"multiplier_order", to_json(multiplier_order(m))}}
                   .dump()
            << '\n';
      else
        out << to_string(m) << '\n';
      return kOk;
    }

    if (*cap) {
      const auto closed = is_capable_closed_form(g, row);
      if (!oracle) {
        if (json)
          out << Json{{"group", to_json(g)}, {"row", to_json(row)}, {"closed_form", to_json(closed)}}.dump() << '\n';
        else
          out << verdict_line(closed) << '\n';
        return kOk;
      }
      const auto checked = is_capable_oracle(g, row);
      const bool agree = closed.capable == checked.capable;
      if (json) {
        out << Json{{"group", to_json(g)},
                    {"row", to_json(row)},
                    {"closed_form", to_json(closed)},
                    {"oracle", to_json(checked)},
                    {"agree", agree}}
                   .dump()
            << '\n';
      } else {
        out << verdict_line(closed) << '\n';
        out << "oracle: " << (checked.capable ? "capable" : "not capable");
        if (checked.witness) out << ", witness " << to_string(*checked.witness);
        out << '\n';
      }
      if (!agree) {
        err << "polynil: oracle and closed form disagree for " << to_string(g) << " under (" << row.str() << ")\n";
        return kDisagreement;
      }
      return kOk;
    }

    if (*epi) {
      const auto e = epicenter(g, row);
      if (json) {
        out << Json{{"group", to_json(g)}, {"row", to_json(row)}, {"epicenter", to_json(e)}}.dump() << '\n';
      } else {
        out << "epicenter: " << to_string(e.structure) << '\n';
        out << "members:";
        for (const auto& x : e.members) out << ' ' << to_string(x);
        out << '\n';
        out << "largest capable quotient: " << to_string(e.quotient) << '\n';
      }
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "polynil: " << e.what() << '\n';
    return kUsageError;
  } catch (const Unsupported& e) {
    err << "polynil: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "polynil: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace polynil::cli
