#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gwa/json_io.hpp"
#include "gwa/structure.hpp"

namespace gwa {

  inline constexpr char const* kToolVersion = "1.0.0";

  using Histogram = std::map<int, std::size_t>;

  struct FamilyRecord {
    std::size_t      size           = 0;
    std::size_t      representative = 0;  // index into the action list
    std::size_t      n_ideals       = 0;
    std::size_t      center_size    = 0;
    bool             condition1     = false;
    NilpotencyResult nilpotency     = NilpotencyResult::not_nilpotent();
  };

  // A nilpotent object of a nontrivial group whose class is not 1 or 2.
  struct TheoremMainViolation {
    GapId       id;
    std::size_t hom_index = 0;
    int         nilpotency_class = 0;
    Json        object;
  };

  struct SurveyRow {
    GapId       id;
    std::string name;
    std::size_t n_gwa        = 0;
    std::size_t n_classes    = 0;
    std::size_t n_c1_classes = 0;
    Histogram   ideals_hist;
    // Key 0 holds both "not nilpotent" and the trivial object's class 0.
    Histogram                 nilp_hist;
    std::vector<FamilyRecord> families;
    std::vector<TheoremMainViolation> violations;  // one per family
    double                    seconds    = 0;
    bool                      from_cache = false;
  };

  struct SurveyFailure {
    GapId       id;
    std::string message;
  };

  struct SurveyReport {
    std::vector<SurveyRow>     rows;
    std::vector<GapId>         skipped;
    std::vector<SurveyFailure> failures;
    std::string                tool_version = kToolVersion;

    std::vector<TheoremMainViolation> violations() const;
  };

  struct SurveyOptions {
    int                                  max_order = 31;
    std::optional<GapId>                 only;
    bool                                 include_heavy = false;
    unsigned                             jobs          = 1;
    std::optional<std::filesystem::path> cache_dir;
  };

  SurveyRow    survey_group(GapId id, bool allow_heavy = false);
  SurveyReport survey_range(SurveyOptions const& options);

  // Checks the row invariants (histogram sums, family sizes).
  bool row_is_consistent(SurveyRow const& row);

  Json      row_to_json(SurveyRow const& row);
  SurveyRow row_from_json(Json const& j);

  struct Q8Remark {
    std::size_t total                  = 0;
    std::size_t non_nilpotent          = 0;
    std::size_t c1_among_non_nilpotent = 0;
    // Same counts when nilpotent objects of class >= 3 are also counted as
    // not nilpotent, which is what the published table does.
    std::size_t class_over_2_or_none          = 0;
    std::size_t c1_among_class_over_2_or_none = 0;
  };

  Q8Remark check_q8_remark();

  enum class Format { Markdown, Csv, Json };

  std::string render(SurveyReport const& report, Format format);
  void        emit(SurveyReport const& report, Format format, std::ostream& out);
  void        emit(SurveyReport const&          report,
                   Format                       format,
                   std::filesystem::path const& destination);

  // Nilpotency histogram with classes above 2 moved into bucket 0, the
  // convention of the published table.
  Histogram merge_high_classes(Histogram const& h);

  std::string hist_csv(Histogram const& h);
  std::string hist_md(Histogram const& h);

}  // namespace gwa
