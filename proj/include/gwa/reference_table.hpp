#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwa/group.hpp"

namespace gwa {

  // One row of the published survey table for orders below 32.
  struct ReferenceRow {
    GapId                    id;
    std::string              name;
    std::size_t              n_gwa;
    std::size_t              n_classes;
    std::size_t              n_c1_classes;
    std::map<int, std::size_t> ideals_hist;
    std::map<int, std::size_t> nilp_hist;
  };

  std::vector<ReferenceRow> const& reference_rows();
  std::optional<ReferenceRow>      reference_row(GapId id);

}  // namespace gwa
