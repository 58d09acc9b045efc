#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "gwa/gwa.hpp"
#include "gwa/iso.hpp"

namespace gwa {

  // Key order is insertion order, so emitted files are stable.
  using Json = nlohmann::ordered_json;

  // {"order", "name", "gap_id": [n, k] | null, "cayley"}
  Json  group_to_json(Group const& g);
  // Revalidates the table; shape errors throw ParseError.
  Group group_from_json(Json const& j);

  // {"group": <group>, "action": [[int]]}, action[g][h] = g^h
  Json            gwa_to_json(GroupWithAction const& a);
  // Re-runs the action axioms; throws NotAGwa on failure.
  GroupWithAction gwa_from_json(Json const& j);

  // {"families": [[int]], "sizes": [int]}
  Json partition_to_json(IsoPartition const& p);

  // Per-object analysis record.
  Json analysis_record(GroupWithAction const& a,
                       std::optional<GapId>   id,
                       std::size_t            hom_index);

  std::string read_text_file(std::filesystem::path const& path);
  // Writes through a temporary file and a rename.
  void write_text_file(std::filesystem::path const& path, std::string const& text);

}  // namespace gwa
