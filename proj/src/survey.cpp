#include "gwa/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "gwa/catalog.hpp"
#include "gwa/reference_table.hpp"

namespace gwa {

  namespace {

    Json id_json(GapId id) {
      return Json::array({id.order, id.index});
    }

    GapId id_from_json(Json const& j) {
      if (!j.is_array() || j.size() != 2) {
        throw Error(ErrorCode::ParseError, "gap id must be [order, index]");
      }
      return {j[0].get<int>(), j[1].get<int>()};
    }

    Json hist_json(Histogram const& h) {
      Json out = Json::array();
      for (auto [k, m] : h) {
        out.push_back(Json::array({k, m}));
      }
      return out;
    }

    Histogram hist_from_json(Json const& j) {
      Histogram h;
      for (auto const& p : j) {
        h[p.at(0).get<int>()] = p.at(1).get<std::size_t>();
      }
      return h;
    }

    Json nilpotency_json(NilpotencyResult r) {
      return r.is_nilpotent() ? Json(r.value()) : Json("none");
    }

    NilpotencyResult nilpotency_from_json(Json const& j) {
      if (j.is_string() && j.get<std::string>() == "none") {
        return NilpotencyResult::not_nilpotent();
      }
      return NilpotencyResult::of_class(j.get<int>());
    }

    std::filesystem::path cache_file(std::filesystem::path const& dir, GapId id) {
      return dir / kToolVersion
             / (std::to_string(id.order) + "_" + std::to_string(id.index) + ".json");
    }

    std::optional<SurveyRow> load_cached(std::filesystem::path const& file, GapId id) {
      std::error_code ec;
      if (!std::filesystem::exists(file, ec)) {
        return std::nullopt;
      }
      try {
        SurveyRow row = row_from_json(Json::parse(read_text_file(file)));
        if (row.id != id || !row_is_consistent(row)) {
          return std::nullopt;
        }
        row.from_cache = true;
        return row;
      } catch (std::exception const&) {
        // corrupt entries are recomputed
        return std::nullopt;
      }
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return out + "\"";
    }

    std::string id_md(GapId id) {
      return "[ " + std::to_string(id.order) + ", " + std::to_string(id.index) + " ]";
    }

  }  // namespace

  Histogram merge_high_classes(Histogram const& h) {
    Histogram out;
    for (auto [k, m] : h) {
      out[k > 2 ? 0 : k] += m;
    }
    return out;
  }

  std::vector<TheoremMainViolation> SurveyReport::violations() const {
    std::vector<TheoremMainViolation> out;
    for (auto const& r : rows) {
      out.insert(out.end(), r.violations.begin(), r.violations.end());
    }
    return out;
  }

  SurveyRow survey_group(GapId id, bool allow_heavy) {
    auto const start = std::chrono::steady_clock::now();
    auto gp = std::make_shared<Group const>(catalog(id.order, id.index, allow_heavy));
    AutomorphismGroup const aut(*gp);
    auto const              homs   = action_homs(*gp, aut);
    IsoPartition const      part   = iso_families_of_homs(aut, homs);
    auto const              normal = normal_subgroups(*gp);

    SurveyRow row;
    row.id        = id;
    row.name      = gp->name();
    row.n_gwa     = homs.size();
    row.n_classes = part.families.size();
    for (auto const& fam : part.families) {
      GroupWithAction const a = gwa_from_aut_indices(gp, aut, homs[fam.front()]);
      FamilyRecord          f;
      f.size           = fam.size();
      f.representative = fam.front();
      f.n_ideals       = count_ideals(a, normal);
      f.center_size    = center(a).size();
      f.condition1     = condition1(a);
      f.nilpotency     = nilpotency_class(a);
      row.n_c1_classes += f.condition1 ? 1 : 0;
      ++row.ideals_hist[static_cast<int>(f.n_ideals)];
      ++row.nilp_hist[f.nilpotency.paper_value()];
      if (gp->order() > 1 && f.nilpotency.is_nilpotent()
          && f.nilpotency.value() != 1 && f.nilpotency.value() != 2) {
        row.violations.push_back(
            {id, f.representative, f.nilpotency.value(), gwa_to_json(a)});
      }
      row.families.push_back(f);
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    return row;
  }

  bool row_is_consistent(SurveyRow const& row) {
    auto sum = [](Histogram const& h) {
      std::size_t s = 0;
      for (auto [k, m] : h) {
        s += m;
      }
      return s;
    };
    std::size_t members = 0;
    for (auto const& f : row.families) {
      members += f.size;
    }
    return sum(row.ideals_hist) == row.n_classes && sum(row.nilp_hist) == row.n_classes
           && row.n_c1_classes <= row.n_classes && row.families.size() == row.n_classes
           && members == row.n_gwa;
  }

  SurveyReport survey_range(SurveyOptions const& options) {
    std::vector<GapId> ids;
    SurveyReport       report;
    if (options.only) {
      catalog_entry(*options.only);
      ids.push_back(*options.only);
    } else {
      for (auto const& e : catalog_entries()) {
        if (e.id.order > options.max_order) {
          continue;
        }
        if (e.heavy && !options.include_heavy) {
          report.skipped.push_back(e.id);
        } else {
          ids.push_back(e.id);
        }
      }
    }

    std::optional<std::filesystem::path> cache = options.cache_dir;
    if (char const* env = std::getenv("GWA_CACHE_DIR"); env != nullptr && *env) {
      cache = std::filesystem::path(env);
    }

    std::vector<std::optional<SurveyRow>> rows(ids.size());
    std::vector<std::optional<std::string>> errors(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < ids.size(); i = next++) {
        GapId const id = ids[i];
        try {
          if (cache) {
            if (auto hit = load_cached(cache_file(*cache, id), id)) {
              rows[i] = std::move(hit);
              continue;
            }
          }
          SurveyRow row = survey_group(id, options.include_heavy);
          if (cache) {
            write_text_file(cache_file(*cache, id), row_to_json(row).dump(1) + "\n");
          }
          rows[i] = std::move(row);
        } catch (std::exception const& e) {
          errors[i] = e.what();
        }
      }
    };
    unsigned const n_threads =
        std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(ids.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (rows[i]) {
        report.rows.push_back(std::move(*rows[i]));
      } else {
        report.failures.push_back({ids[i], errors[i].value_or("unknown failure")});
      }
    }
    return report;
  }

  Json row_to_json(SurveyRow const& row) {
    Json j;
    j["gap_id"]       = id_json(row.id);
    j["name"]         = row.name;
    j["n_gwa"]        = row.n_gwa;
    j["n_classes"]    = row.n_classes;
    j["n_c1_classes"] = row.n_c1_classes;
    j["ideals_hist"]  = hist_json(row.ideals_hist);
    j["nilp_hist"]    = hist_json(row.nilp_hist);
    Json fams         = Json::array();
    for (auto const& f : row.families) {
      Json fj;
      fj["size"]           = f.size;
      fj["representative"] = f.representative;
      fj["n_ideals"]       = f.n_ideals;
      fj["center_size"]    = f.center_size;
      fj["condition1"]     = f.condition1;
      fj["nilpotency"]     = nilpotency_json(f.nilpotency);
      fams.push_back(std::move(fj));
    }
    j["families"] = std::move(fams);
    Json viol     = Json::array();
    for (auto const& v : row.violations) {
      Json vj;
      vj["hom_index"]        = v.hom_index;
      vj["nilpotency_class"] = v.nilpotency_class;
      vj["object"]           = v.object;
      viol.push_back(std::move(vj));
    }
    j["theorem_main_violations"] = std::move(viol);
    return j;
  }

  SurveyRow row_from_json(Json const& j) {
    SurveyRow row;
    row.id           = id_from_json(j.at("gap_id"));
    row.name         = j.at("name").get<std::string>();
    row.n_gwa        = j.at("n_gwa").get<std::size_t>();
    row.n_classes    = j.at("n_classes").get<std::size_t>();
    row.n_c1_classes = j.at("n_c1_classes").get<std::size_t>();
    row.ideals_hist  = hist_from_json(j.at("ideals_hist"));
    row.nilp_hist    = hist_from_json(j.at("nilp_hist"));
    for (auto const& fj : j.at("families")) {
      FamilyRecord f;
      f.size           = fj.at("size").get<std::size_t>();
      f.representative = fj.at("representative").get<std::size_t>();
      f.n_ideals       = fj.at("n_ideals").get<std::size_t>();
      f.center_size    = fj.at("center_size").get<std::size_t>();
      f.condition1     = fj.at("condition1").get<bool>();
      f.nilpotency     = nilpotency_from_json(fj.at("nilpotency"));
      row.families.push_back(f);
    }
    for (auto const& vj : j.at("theorem_main_violations")) {
      row.violations.push_back({row.id, vj.at("hom_index").get<std::size_t>(),
                                vj.at("nilpotency_class").get<int>(), vj.at("object")});
    }
    return row;
  }

  Q8Remark check_q8_remark() {
    auto      q8 = std::make_shared<Group const>(catalog(8, 4));
    Q8Remark  r;
    for (auto const& a : all_gwa_on_group(q8)) {
      ++r.total;
      NilpotencyResult const n  = nilpotency_class(a);
      bool const             c1 = condition1(a);
      if (!n.is_nilpotent()) {
        ++r.non_nilpotent;
        r.c1_among_non_nilpotent += c1 ? 1 : 0;
      }
      if (!n.is_nilpotent() || n.value() > 2) {
        ++r.class_over_2_or_none;
        r.c1_among_class_over_2_or_none += c1 ? 1 : 0;
      }
    }
    return r;
  }

  std::string hist_csv(Histogram const& h) {
    std::string out;
    for (auto [k, m] : h) {
      out += (out.empty() ? "" : ";") + std::to_string(k) + ":" + std::to_string(m);
    }
    return out;
  }

  std::string hist_md(Histogram const& h) {
    std::string out;
    for (auto [k, m] : h) {
      out += (out.empty() ? "" : ", ") + std::string("[ ") + std::to_string(k) + ", "
             + std::to_string(m) + " ]";
    }
    return out;
  }

  std::string render(SurveyReport const& report, Format format) {
    std::ostringstream os;
    switch (format) {
      case Format::Csv: {
        os << "order,index,name,n_gwa,n_classes,n_c1_classes,ideals_hist,nilp_hist\n";
        for (auto const& r : report.rows) {
          os << r.id.order << ',' << r.id.index << ',' << csv_field(r.name) << ','
             << r.n_gwa << ',' << r.n_classes << ',' << r.n_c1_classes << ','
             << hist_csv(r.ideals_hist) << ',' << hist_csv(r.nilp_hist) << '\n';
        }
        break;
      }
      case Format::Json: {
        Json j;
        j["tool_version"] = report.tool_version;
        Json rows         = Json::array();
        for (auto const& r : report.rows) {
          rows.push_back(row_to_json(r));
        }
        j["rows"]    = std::move(rows);
        Json skipped = Json::array();
        for (GapId id : report.skipped) {
          skipped.push_back(id_json(id));
        }
        j["skipped"]  = std::move(skipped);
        Json failures = Json::array();
        for (auto const& f : report.failures) {
          failures.push_back({{"gap_id", id_json(f.id)}, {"error", f.message}});
        }
        j["failures"] = std::move(failures);
        os << j.dump(1) << '\n';
        break;
      }
      case Format::Markdown: {
        os << "# Groups with action on groups of small order\n\n";
        os << "| GAP id | Name | Actions | Families | Condition 1 families "
              "| Ideals per family | Nilpotency class per family |\n";
        os << "|---|---|---|---|---|---|---|\n";
        for (auto const& r : report.rows) {
          os << "| " << id_md(r.id) << " | " << r.name << " | " << r.n_gwa << " | "
             << r.n_classes << " | " << r.n_c1_classes << " | " << hist_md(r.ideals_hist)
             << " | " << hist_md(r.nilp_hist) << " |\n";
        }
        os << "\nClass 0 counts families that are not nilpotent, and the trivial "
              "group's single object.\n";

        if (!report.skipped.empty()) {
          os << "\n## Skipped\n\n";
          for (GapId id : report.skipped) {
            os << "- " << id_md(id) << " (gated; enable heavy ids to include)\n";
          }
        }
        if (!report.failures.empty()) {
          os << "\n## Failures\n\n";
          for (auto const& f : report.failures) {
            os << "- " << id_md(f.id) << ": " << f.message << '\n';
          }
        }

        os << "\n## Differences from the published table\n\n";
        std::size_t n_diff = 0;
        for (auto const& r : report.rows) {
          auto const ref = reference_row(r.id);
          if (!ref) {
            continue;
          }
          std::vector<std::string> cols;
          auto num = [&cols](char const* name, std::size_t ours, std::size_t theirs) {
            if (ours != theirs) {
              cols.push_back(std::string(name) + ": computed " + std::to_string(ours)
                             + ", published " + std::to_string(theirs));
            }
          };
          num("actions", r.n_gwa, ref->n_gwa);
          num("families", r.n_classes, ref->n_classes);
          num("condition 1 families", r.n_c1_classes, ref->n_c1_classes);
          if (r.ideals_hist != ref->ideals_hist) {
            cols.push_back("ideals: computed " + hist_md(r.ideals_hist) + "; published "
                           + hist_md(ref->ideals_hist));
          }
          if (r.nilp_hist != ref->nilp_hist) {
            std::string note = merge_high_classes(r.nilp_hist) == ref->nilp_hist
                                   ? " (equal once classes above 2 are put in bucket 0)"
                                   : "";
            cols.push_back("nilpotency: computed " + hist_md(r.nilp_hist)
                           + "; published " + hist_md(ref->nilp_hist) + note);
          }
          if (cols.empty()) {
            continue;
          }
          ++n_diff;
          os << "- " << id_md(r.id) << ' ' << r.name << '\n';
          for (auto const& c : cols) {
            os << "  - " << c << '\n';
          }
        }
        if (n_diff == 0) {
          os << "None.\n";
        }

        auto const viol = report.violations();
        os << "\n## Nilpotent families of class above 2\n\n";
        if (viol.empty()) {
          os << "None.\n";
        } else {
          os << "| GAP id | Action index | Class |\n|---|---|---|\n";
          for (auto const& v : viol) {
            os << "| " << id_md(v.id) << " | " << v.hom_index << " | "
               << v.nilpotency_class << " |\n";
          }
        }
        break;
      }
    }
    return os.str();
  }

  void emit(SurveyReport const& report, Format format, std::ostream& out) {
    out << render(report, format);
    if (!out) {
      throw Error(ErrorCode::IoError, "write to output stream failed");
    }
  }

  void emit(SurveyReport const&          report,
            Format                       format,
            std::filesystem::path const& destination) {
    write_text_file(destination, render(report, format));
  }

}  // namespace gwa
