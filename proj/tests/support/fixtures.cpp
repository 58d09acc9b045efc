#include "fixtures.hpp"

#include <fstream>
#include <stdexcept>

namespace fixtures {

  using namespace gwa;

  GroupPtr share(Group g) {
    return std::make_shared<Group const>(std::move(g));
  }

  GroupPtr catalog_ptr(int order, int index, bool allow_heavy) {
    return share(catalog(order, index, allow_heavy));
  }

  CayleyTable from_printed(Labelled const& l, std::vector<std::vector<int>> const& rows) {
    std::size_t const n = l.group->order();
    CayleyTable       out(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        // entry (i, j) is a_j acted on by a_i
        out[l.elems[j]][l.elems[i]] = l.elems[static_cast<std::size_t>(rows[i][j])];
      }
    }
    return out;
  }

  Labelled klein() {
    CayleyTable const t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Group g = validate_group(t, "C2xC2", GapId{4, 2}).relabeled({"e", "a", "b", "ab"});
    return {share(std::move(g)), {0, 1, 2, 3}};
  }

  std::vector<std::vector<int>> const& klein_eps_rows(int i) {
    static std::vector<std::vector<std::vector<int>>> const tables = {
        {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 1, 3, 2}},
        {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}},
        {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}},
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 1, 3}, {0, 1, 2, 3}},
    };
    return tables.at(static_cast<std::size_t>(i - 1));
  }

  GroupWithAction klein_eps(int i) {
    Labelled const l = klein();
    return make_gwa(l.group, from_printed(l, klein_eps_rows(i)));
  }

  Labelled q8() {
    GroupPtr g = catalog_ptr(8, 4);
    auto     order4 = [&](Element x) { return element_order(*g, x) == 4; };
    Element  a = 0;
    Element  b = 0;
    for (Element x = 1; x < 8 && a == 0; ++x) {
      if (order4(x)) {
        a = x;
      }
    }
    for (Element x = 1; x < 8 && b == 0; ++x) {
      if (order4(x) && g->op(a, x) != g->op(x, a)) {
        b = x;
      }
    }
    Element const c = g->op(a, a);
    return {g, {0, a, b, c, g->op(a, b), g->op(a, c), g->op(b, c), g->op(g->op(a, b), c)}};
  }

  std::vector<std::vector<int>> const& q8_example_rows() {
    static std::vector<int> const id = {0, 1, 2, 3, 4, 5, 6, 7};
    static std::vector<int> const t  = {0, 5, 7, 3, 6, 1, 4, 2};
    static std::vector<std::vector<int>> const rows = {id, id, t, id, t, id, t, t};
    return rows;
  }

  GroupWithAction q8_example() {
    Labelled const l = q8();
    return make_gwa(l.group, from_printed(l, q8_example_rows()));
  }

  Labelled s3() {
    GroupPtr g = catalog_ptr(6, 1);
    Element  a = 0;
    Element  b = 0;
    for (Element x = 1; x < 6; ++x) {
      if (a == 0 && element_order(*g, x) == 2) {
        a = x;
      }
      if (b == 0 && element_order(*g, x) == 3) {
        b = x;
      }
    }
    Element const b2 = g->op(b, b);
    return {g, {0, a, b, g->op(a, b), b2, g->op(a, b2)}};
  }

  std::vector<std::vector<int>> const& s3_session_rows() {
    static std::vector<int> const id = {0, 1, 2, 3, 4, 5};
    static std::vector<int> const t  = {0, 1, 4, 5, 2, 3};
    static std::vector<std::vector<int>> const rows = {id, t, id, t, id, t};
    return rows;
  }

  GroupWithAction s3_session() {
    Labelled const l = s3();
    return make_gwa(l.group, from_printed(l, s3_session_rows()));
  }

  nlohmann::json const& oracle() {
    static nlohmann::json const data = [] {
      std::ifstream in(std::string(GWA_TEST_DATA_DIR) + "/oracle.json");
      if (!in) {
        throw std::runtime_error("cannot open oracle.json");
      }
      return nlohmann::json::parse(in);
    }();
    return data;
  }

  void for_each_object(int max_order,
                       std::function<void(GapId, std::size_t, GroupWithAction const&)> const& f) {
    for (GapId id : catalog_ids(max_order)) {
      std::vector<GroupWithAction> const all = all_gwa_on_group(catalog_ptr(id.order, id.index));
      for (std::size_t k = 0; k < all.size(); ++k) {
        f(id, k, all[k]);
      }
    }
  }

  std::vector<GroupWithAction> objects(int order, int index) {
    return all_gwa_on_group(catalog_ptr(order, index));
  }

}  // namespace fixtures
