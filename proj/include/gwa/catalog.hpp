#pragma once

#include <string>
#include <vector>

#include "gwa/group.hpp"

namespace gwa {

  struct CatalogEntry {
    GapId       id;
    std::string name;
    // Elementary abelian groups whose action enumeration is out of reach.
    bool heavy = false;
  };

  // Every group of order 1..31, sorted by (order, index).
  std::vector<CatalogEntry> const& catalog_entries();

  // Ids with order <= max_order; heavy ids are left out unless requested.
  std::vector<GapId> catalog_ids(int max_order, bool include_heavy = false);

  CatalogEntry const& catalog_entry(GapId id);

  // Builds the group from its recipe.  Throws UnknownId for ids outside the
  // table and UnsupportedHeavy for gated ids unless allow_heavy is set.
  Group catalog(int order, int index, bool allow_heavy = false);

}  // namespace gwa
