#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balance/cases.hpp"
#include "balance/exact.hpp"
#include "balance/family.hpp"
#include "balance/grid.hpp"
#include "balance/poset.hpp"
#include "balance/search.hpp"

// Command-line driver.  Exit codes: 0 success, 1 malformed input or usage,
// 2 a mathematical claim failed verification.

namespace balance {

namespace detail {

inline Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw input_error("cannot open file: " + path);
  return parse_poset_text(in);
}

inline GridDiagram grid_for(const Poset& p) {
  const WidthResult w = width_and_decompose(p);
  if (w.width > 2) throw input_error("poset width exceeds 2; grid methods unavailable");
  return build_grid(p, *w.decomposition);
}

inline std::string witness_cell_text(const BalanceReport& rep) {
  if (!rep.witness) return "none";
  return "(a" + std::to_string(rep.witness->first) + ", b" + std::to_string(rep.witness->second) + ")";
}

inline std::string witness_element_text(const BalanceReport& rep) {
  if (!rep.witness) return "none";
  return "(" + std::to_string(rep.witness->first) + ", " + std::to_string(rep.witness->second) + ")";
}

inline int print_appendix_report(const AppendixReport& rep, bool json, std::ostream& out) {
  if (json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const AppendixCheck& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"m", c.m}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << nlohmann::json{{"n", rep.n}, {"pass", rep.pass}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const AppendixCheck& c : rep.checks) {
      out << "CHECK " << c.name << " " << c.m << " " << (c.pass ? "PASS" : "FAIL");
      if (!c.pass && !c.detail.empty()) out << " " << c.detail;
      out << "\n";
    }
    out << "RESULT " << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? 0 : 2;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact balance constants of width-2 posets"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit one JSON object instead of text");

  std::string delta_file;
  std::string method = "grid";
  CLI::App* cmd_delta = app.add_subcommand("delta", "balance constant of a poset file");
  cmd_delta->fallthrough();
  cmd_delta->add_option("file", delta_file, "poset file")->required();
  cmd_delta->add_option("--method", method, "grid, oracle, or both")
      ->check(CLI::IsMember({"grid", "oracle", "both"}));

  std::string prob_file;
  CLI::App* cmd_prob = app.add_subcommand("probabilities", "exact pair probability matrix");
  cmd_prob->fallthrough();
  cmd_prob->add_option("file", prob_file, "poset file")->required();

  std::string grid_file;
  CLI::App* cmd_grid = app.add_subcommand("grid", "ASCII grid diagram with the small-probability boundary");
  cmd_grid->fallthrough();
  cmd_grid->add_option("file", grid_file, "poset file")->required();

  int tn_n = 0;
  bool tn_verify = false;
  CLI::App* cmd_tn = app.add_subcommand("tn", "balance constant of the n-th family member");
  cmd_tn->fallthrough();
  cmd_tn->add_option("--n", tn_n, "family index (>= 1)")->required();
  cmd_tn->add_flag("--verify", tn_verify, "also re-derive the tabulated facts");

  int app_n = 0;
  CLI::App* cmd_appendix = app.add_subcommand("verify-appendix", "re-derive the tabulated family facts");
  cmd_appendix->fallthrough();
  cmd_appendix->add_option("--n", app_n, "family index (>= 1)")->required();

  CLI::App* cmd_cases = app.add_subcommand("verify-cases", "solve and certify the nine case systems");
  cmd_cases->fallthrough();

  int search_n = 0;
  int search_jobs = 1;
  std::string search_cache;
  CLI::App* cmd_search = app.add_subcommand("search", "sweep all width-2 posets up to a size bound");
  cmd_search->fallthrough();
  cmd_search->add_option("--max-size", search_n, "largest element count")->required();
  cmd_search->add_option("--jobs", search_jobs, "worker threads");
  cmd_search->add_option("--cache", search_cache, "append-only result cache file");

  std::string oracle_file;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "count linear extensions by brute force");
  cmd_oracle->fallthrough();
  cmd_oracle->add_option("file", oracle_file, "poset file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("balance");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_delta) {
      const Poset p = detail::load_poset(delta_file);
      BalanceReport rep;
      bool cell_witness = true;
      if (method == "grid") {
        rep = delta_grid(detail::grid_for(p));
      } else if (method == "oracle") {
        rep = delta_oracle(p);
        cell_witness = false;
      } else {
        rep = delta_grid(detail::grid_for(p));
        const BalanceReport oracle = delta_oracle(p);
        if (!(oracle.delta == rep.delta) || oracle.extension_count != rep.extension_count) {
          throw verification_error("grid and oracle disagree: " + to_string(rep.delta) + " vs " +
                                   to_string(oracle.delta));
        }
      }
      const std::string witness =
          cell_witness ? detail::witness_cell_text(rep) : detail::witness_element_text(rep);
      if (json) {
        nlohmann::json j{{"method", method},
                         {"delta", to_string(rep.delta)},
                         {"decimal", decimal_string(rep.delta, 6)},
                         {"extensions", rep.extension_count.get_str()}};
        if (rep.witness) {
          j["witness"] = witness;
        } else {
          j["witness"] = nullptr;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "delta = " << to_string(rep.delta) << " (~" << decimal_string(rep.delta, 6)
            << "), witness " << witness << "\n";
      }
      return 0;
    }

    if (*cmd_prob) {
      const Poset p = detail::load_poset(prob_file);
      const auto matrix = probability_matrix(detail::grid_for(p));
      if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : matrix) {
          nlohmann::json r = nlohmann::json::array();
          for (const Rational& v : row) r.push_back(to_string(v));
          rows.push_back(std::move(r));
        }
        out << nlohmann::json{{"rows", matrix.size()},
                              {"cols", matrix.empty() ? 0 : matrix[0].size()},
                              {"matrix", rows}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& row : matrix) {
          for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << "\t";
            out << to_string(row[j]);
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (*cmd_grid) {
      const Poset p = detail::load_poset(grid_file);
      const GridDiagram g = detail::grid_for(p);
      const SRegion s = s_region(g);
      if (json) {
        nlohmann::json boundary = nlohmann::json::array();
        for (auto [i, j] : s.boundary_path) boundary.push_back({i, j});
        out << nlohmann::json{{"rows", g.m},
                              {"cols", g.n},
                              {"render", ascii_render(g, &s)},
                              {"s_boundary", boundary}}
                   .dump(2)
            << "\n";
      } else {
        out << ascii_render(g, &s);
      }
      return 0;
    }

    if (*cmd_tn) {
      const TnFamily fam = build_tn(tn_n);
      const Rational d = tn_delta(fam);
      AppendixReport rep;
      if (tn_verify) rep = verify_appendix(tn_n);
      if (json) {
        nlohmann::json j{{"n", tn_n},
                         {"delta", to_string(d)},
                         {"decimal", decimal_string(d, 6)},
                         {"extensions", fam.state.extensions.get_str()}};
        if (tn_verify) {
          nlohmann::json checks = nlohmann::json::array();
          for (const AppendixCheck& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"m", c.m}, {"pass", c.pass}, {"detail", c.detail}});
          }
          j["verify"] = {{"pass", rep.pass}, {"checks", checks}};
        }
        out << j.dump(2) << "\n";
        return tn_verify && !rep.pass ? 2 : 0;
      }
      out << "delta(T_" << tn_n << ") = " << to_string(d) << " (~" << decimal_string(d, 6) << ")\n";
      if (tn_verify) return detail::print_appendix_report(rep, false, out);
      return 0;
    }

    if (*cmd_appendix) {
      return detail::print_appendix_report(verify_appendix(app_n), json, out);
    }

    if (*cmd_cases) {
      const std::vector<CaseOutcome> outcomes = verify_all_cases();
      bool all = true;
      for (const CaseOutcome& co : outcomes) all = all && co.pass;
      if (json) {
        nlohmann::json cases = nlohmann::json::array();
        for (const CaseOutcome& co : outcomes) {
          cases.push_back({{"k", co.k}, {"bound", co.bound_text}, {"pass", co.pass}, {"detail", co.detail}});
        }
        out << nlohmann::json{{"cases", cases}, {"pass", all}}.dump(2) << "\n";
      } else {
        for (const CaseOutcome& co : outcomes) {
          out << "CASE " << co.k << " BOUND " << co.bound_text << " STATUS "
              << (co.pass ? "PASS" : "FAIL");
          if (!co.pass && !co.detail.empty()) out << " " << co.detail;
          out << "\n";
        }
      }
      return all ? 0 : 2;
    }

    if (*cmd_search) {
      const SpectrumReport rep = gap_report(search_n, search_jobs, search_cache);
      if (json) {
        nlohmann::json records = nlohmann::json::array();
        for (const SpectrumRecord& rec : rep.records) {
          records.push_back({{"key", rec.key}, {"delta", to_string(rec.delta)}, {"aigner", rec.is_aigner}});
        }
        nlohmann::json spectrum = nlohmann::json::array();
        for (const Rational& v : rep.spectrum) spectrum.push_back(to_string(v));
        nlohmann::json j{{"max_size", rep.max_size},
                         {"posets", rep.records.size()},
                         {"records", records},
                         {"spectrum", spectrum}};
        if (rep.min_non_aigner) {
          j["min_non_aigner"] = {{"key", rep.min_non_aigner->key},
                                 {"delta", to_string(rep.min_non_aigner->delta)}};
        } else {
          j["min_non_aigner"] = nullptr;
        }
        out << j.dump(2) << "\n";
      } else {
        for (const SpectrumRecord& rec : rep.records) out << spectrum_line(rec) << "\n";
        out << "# max-size " << rep.max_size << "\n";
        out << "# posets " << rep.records.size() << "\n";
        out << "# distinct-deltas " << rep.spectrum.size() << "\n";
        out << "# spectrum";
        for (const Rational& v : rep.spectrum) out << " " << to_string(v);
        out << "\n";
        if (rep.min_non_aigner) {
          out << "# min-non-aigner " << to_string(rep.min_non_aigner->delta) << " key="
              << rep.min_non_aigner->key << "\n";
        } else {
          out << "# min-non-aigner none\n";
        }
      }
      return 0;
    }

    if (*cmd_oracle) {
      const Poset p = detail::load_poset(oracle_file);
      const Integer count = count_extensions_oracle(p);
      if (json) {
        out << nlohmann::json{{"extensions", count.get_str()}}.dump(2) << "\n";
      } else {
        out << "extensions = " << count.get_str() << "\n";
      }
      return 0;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const verification_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace balance
