#include "gwa/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gwa/ideal.hpp"
#include "gwa/structure.hpp"

namespace gwa {

  namespace {

    CayleyTable matrix_from_json(Json const& j, char const* what) {
      if (!j.is_array()) {
        throw Error(ErrorCode::ParseError, std::string(what) + " is not an array");
      }
      CayleyTable out;
      for (auto const& row : j) {
        if (!row.is_array()) {
          throw Error(ErrorCode::ParseError,
                      std::string(what) + " has a non-array row");
        }
        std::vector<int> r;
        for (auto const& v : row) {
          if (!v.is_number_integer()) {
            throw Error(ErrorCode::ParseError,
                        std::string(what) + " has a non-integer entry");
          }
          r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
      }
      return out;
    }

  }  // namespace

  Json group_to_json(Group const& g) {
    Json j;
    j["order"] = g.order();
    j["name"]  = g.name();
    if (g.gap_id()) {
      j["gap_id"] = Json::array({g.gap_id()->order, g.gap_id()->index});
    } else {
      j["gap_id"] = nullptr;
    }
    j["cayley"] = g.cayley();
    return j;
  }

  Group group_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("cayley")) {
      throw Error(ErrorCode::ParseError, "group object needs a \"cayley\" field");
    }
    CayleyTable const t = matrix_from_json(j.at("cayley"), "cayley");
    if (j.contains("order") && (!j.at("order").is_number_integer()
                                || j.at("order").get<std::size_t>() != t.size())) {
      throw Error(ErrorCode::ParseError, "\"order\" disagrees with the table");
    }
    std::string name;
    if (j.contains("name") && j.at("name").is_string()) {
      name = j.at("name").get<std::string>();
    }
    std::optional<GapId> id;
    if (j.contains("gap_id") && !j.at("gap_id").is_null()) {
      auto const& p = j.at("gap_id");
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer()
          || !p[1].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "\"gap_id\" must be [order, index]");
      }
      id = GapId{p[0].get<int>(), p[1].get<int>()};
    }
    return validate_group(t, std::move(name), id);
  }

  Json gwa_to_json(GroupWithAction const& a) {
    Json j;
    j["group"]  = group_to_json(a.group());
    j["action"] = a.action_matrix();
    return j;
  }

  GroupWithAction gwa_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("action")) {
      throw Error(ErrorCode::ParseError,
                  "object needs \"group\" and \"action\" fields");
    }
    auto g = std::make_shared<Group const>(group_from_json(j.at("group")));
    return make_gwa(g, matrix_from_json(j.at("action"), "action"));
  }

  Json partition_to_json(IsoPartition const& p) {
    Json j;
    j["families"] = p.families;
    j["sizes"]    = p.sizes();
    return j;
  }

  Json analysis_record(GroupWithAction const& a,
                       std::optional<GapId>   id,
                       std::size_t            hom_index) {
    Json j;
    if (id) {
      j["gap_id"] = Json::array({id->order, id->index});
    } else {
      j["gap_id"] = nullptr;
    }
    j["hom_index"]   = hom_index;
    j["n_ideals"]    = all_ideals(a).size();
    j["center_size"] = center(a).size();
    j["singular"]    = is_singular(a);
    auto const nil   = nilpotency_class(a);
    if (nil.is_nilpotent()) {
      j["nilpotency"] = nil.value();
    } else {
      j["nilpotency"] = "none";
    }
    j["condition1"] = condition1(a);
    return j;
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::IoError, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_text_file(std::filesystem::path const& path, std::string const& text) {
    std::error_code ec;
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path(), ec);
    }
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
      }
      out << text;
      if (!out) {
        throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      throw Error(ErrorCode::IoError,
                  "cannot move " + tmp.string() + " into place: " + ec.message());
    }
  }

}  // namespace gwa
