// Command-line front end: survey, enumerate, classify, check, show-table.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 invariant
// violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gwa/catalog.hpp"
#include "gwa/iso.hpp"
#include "gwa/json_io.hpp"
#include "gwa/structure.hpp"
#include "gwa/survey.hpp"

namespace {

  constexpr int kOk         = 0;
  constexpr int kUsage      = 1;
  constexpr int kCompute    = 2;
  constexpr int kInvariant  = 3;

  int exit_code_for(gwa::ErrorCode c) {
    using gwa::ErrorCode;
    switch (c) {
      case ErrorCode::UnknownId:
      case ErrorCode::UnsupportedHeavy:
      case ErrorCode::IndexOutOfRange:
      case ErrorCode::InvalidArgument:
        return kUsage;
      case ErrorCode::InvariantViolation:
        return kInvariant;
      default:
        return kCompute;
    }
  }

  gwa::GroupPtr load_group(int order, int index, bool heavy) {
    return std::make_shared<gwa::Group const>(gwa::catalog(order, index, heavy));
  }

  gwa::GroupWithAction load_object(int order, int index, std::size_t hom, bool heavy) {
    auto                         g = load_group(order, index, heavy);
    gwa::AutomorphismGroup const aut(*g);
    auto const                   homs = gwa::action_homs(*g, aut);
    if (hom >= homs.size()) {
      throw gwa::Error(gwa::ErrorCode::IndexOutOfRange,
                       "HOM_INDEX " + std::to_string(hom) + " but " + gwa::to_string({order, index})
                           + " has " + std::to_string(homs.size()) + " actions");
    }
    return gwa::gwa_from_aut_indices(g, aut, homs[hom]);
  }

  void write_out(std::string const& text, std::string const& path) {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
    } else {
      gwa::write_text_file(path, text);
    }
  }

  std::string list_1based(std::vector<std::size_t> const& xs) {
    std::string s = "[ ";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += (i ? ", " : "") + std::to_string(xs[i] + 1);
    }
    return s + " ]";
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups acting on themselves: enumeration, structure and survey"};
  app.require_subcommand(1);

  // survey
  auto*                   survey = app.add_subcommand("survey", "Compute survey rows");
  int                     max_order = 31;
  std::vector<int>        group_id;
  std::string             format = "md";
  std::string             out_path;
  unsigned                jobs = 1;
  bool                    include_heavy = false;
  std::string             cache_dir;
  bool                    verbose = false;
  survey->add_option("--max-order", max_order, "Largest group order")->check(CLI::Range(1, 31));
  survey->add_option("--group", group_id, "Single group ORDER INDEX")->expected(2);
  survey->add_option("--format", format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  survey->add_option("--out", out_path, "Output path (default stdout)");
  survey->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  survey->add_flag("--include-heavy", include_heavy, "Include gated ids (16,14), (27,5)");
  survey->add_option("--cache-dir", cache_dir, "Row cache directory (GWA_CACHE_DIR overrides)");
  survey->add_flag("-v,--verbose", verbose, "Per-row timing on stderr");

  // enumerate
  auto*       enumerate = app.add_subcommand("enumerate", "List every action on a group");
  int         order = 0, index = 0;
  std::string emit_path;
  enumerate->add_option("ORDER", order)->required();
  enumerate->add_option("INDEX", index)->required();
  enumerate->add_option("--emit-actions", emit_path, "Write all objects as JSON");
  enumerate->add_flag("--include-heavy", include_heavy);

  // classify
  auto* classify = app.add_subcommand("classify", "Isomorphism families of the actions");
  bool  classify_json = false;
  classify->add_option("ORDER", order)->required();
  classify->add_option("INDEX", index)->required();
  classify->add_flag("--json", classify_json, "Print the partition as JSON (0-based)");
  classify->add_flag("--include-heavy", include_heavy);

  // check
  auto*       check = app.add_subcommand("check", "Analyse one action");
  std::size_t hom   = 0;
  std::string props = "ideals,center,c1,nilpotency";
  check->add_option("ORDER", order)->required();
  check->add_option("INDEX", index)->required();
  check->add_option("HOM_INDEX", hom, "0-based action index")->required();
  check->add_option("--props", props, "Comma-separated: ideals,center,c1,nilpotency");
  check->add_flag("--include-heavy", include_heavy);

  // show-table
  auto* show = app.add_subcommand("show-table", "Render an action table");
  show->add_option("ORDER", order)->required();
  show->add_option("INDEX", index)->required();
  show->add_option("HOM_INDEX", hom, "0-based action index")->required();
  show->add_flag("--include-heavy", include_heavy);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*survey) {
      gwa::SurveyOptions opt;
      opt.max_order     = max_order;
      opt.include_heavy = include_heavy;
      opt.jobs          = jobs;
      if (!group_id.empty()) {
        opt.only = gwa::GapId{group_id[0], group_id[1]};
      }
      if (!cache_dir.empty()) {
        opt.cache_dir = cache_dir;
      }
      gwa::SurveyReport const report = gwa::survey_range(opt);
      if (verbose) {
        for (auto const& r : report.rows) {
          std::cerr << gwa::to_string(r.id) << ' ' << r.name << ": " << r.n_gwa
                    << " actions, " << r.n_classes << " families, "
                    << (r.from_cache ? std::string("cached") : std::to_string(r.seconds) + " s")
                    << '\n';
        }
      }
      gwa::Format const f = format == "csv"    ? gwa::Format::Csv
                            : format == "json" ? gwa::Format::Json
                                               : gwa::Format::Markdown;
      write_out(gwa::render(report, f), out_path);

      for (auto const& fail : report.failures) {
        std::cerr << "failed " << gwa::to_string(fail.id) << ": " << fail.message << '\n';
      }
      auto const viol = report.violations();
      if (!viol.empty()) {
        std::cerr << viol.size()
                  << " nilpotent famil" << (viol.size() == 1 ? "y has" : "ies have")
                  << " class above 2; first offending object:\n"
                  << viol.front().object.dump() << '\n';
        return kInvariant;
      }
      return report.failures.empty() ? kOk : kCompute;
    }

    if (*enumerate) {
      auto       g    = load_group(order, index, include_heavy);
      auto const objs = gwa::all_gwa_on_group(g);
      std::cout << gwa::to_string({order, index}) << ' ' << g->name() << ": "
                << objs.size() << " actions\n";
      if (!emit_path.empty()) {
        gwa::Json arr = gwa::Json::array();
        for (auto const& a : objs) {
          arr.push_back(gwa::gwa_to_json(a));
        }
        write_out(arr.dump() + "\n", emit_path);
      }
      return kOk;
    }

    if (*classify) {
      auto                         g = load_group(order, index, include_heavy);
      gwa::AutomorphismGroup const aut(*g);
      auto const                   homs = gwa::action_homs(*g, aut);
      auto const                   part = gwa::iso_families_of_homs(aut, homs);
      if (classify_json) {
        std::cout << gwa::partition_to_json(part).dump() << '\n';
      } else {
        std::cout << gwa::to_string({order, index}) << ' ' << g->name() << ": "
                  << homs.size() << " actions, " << part.families.size() << " families\n";
        for (auto const& fam : part.families) {
          std::cout << fam.size() << " => " << list_1based(fam) << '\n';
        }
      }
      return kOk;
    }

    if (*check) {
      auto const a = load_object(order, index, hom, include_heavy);
      gwa::Json  j;
      j["gap_id"]    = gwa::Json::array({order, index});
      j["hom_index"] = hom;
      std::stringstream ss(props);
      std::string       p;
      while (std::getline(ss, p, ',')) {
        if (p == "ideals") {
          j["n_ideals"] = gwa::all_ideals(a).size();
        } else if (p == "center") {
          j["center_size"] = gwa::center(a).size();
          j["singular"]    = gwa::is_singular(a);
        } else if (p == "c1") {
          j["condition1"] = gwa::condition1(a);
        } else if (p == "nilpotency") {
          auto const n    = gwa::nilpotency_class(a);
          j["nilpotency"] = n.is_nilpotent() ? gwa::Json(n.value()) : gwa::Json("none");
        } else {
          std::cerr << "unknown property '" << p << "'\n";
          return kUsage;
        }
      }
      std::cout << j.dump() << '\n';
      return kOk;
    }

    if (*show) {
      std::cout << gwa::action_table_render(load_object(order, index, hom, include_heavy));
      return kOk;
    }
  } catch (gwa::Error const& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (std::exception const& e) {
    std::cerr << e.what() << '\n';
    return kCompute;
  }
  return kOk;
}
