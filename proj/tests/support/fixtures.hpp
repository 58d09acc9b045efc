#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwa/catalog.hpp"
#include "gwa/gwa.hpp"

namespace fixtures {

  using gwa::CayleyTable;
  using gwa::Element;
  using gwa::GapId;
  using gwa::Group;
  using gwa::GroupPtr;
  using gwa::GroupWithAction;

  GroupPtr share(Group g);
  GroupPtr catalog_ptr(int order, int index, bool allow_heavy = false);

  // A group together with the elements named by a printed table, listed in
  // the order of the printed header.
  struct Labelled {
    GroupPtr             group;
    std::vector<Element> elems;
  };

  // Converts a printed action table (row i = actor a_i, entry (i, j) =
  // a_j^{a_i}, entries given as header positions) to storage orientation.
  CayleyTable from_printed(Labelled const& l, std::vector<std::vector<int>> const& rows);

  // Klein four from its printed multiplication table; header e, a, b, ab.
  Labelled klein();
  // The four printed actions eps_1 .. eps_4 on the Klein four group.
  std::vector<std::vector<int>> const& klein_eps_rows(int i);
  GroupWithAction                      klein_eps(int i);

  // Q8 with header e, a, b, c, ab, ac, bc, abc bound to catalog (8,4):
  // a, b non-commuting of order 4, c = a + a.
  Labelled                             q8();
  std::vector<std::vector<int>> const& q8_example_rows();
  GroupWithAction                      q8_example();

  // S3 with header e, a, b, ab, b^2, ab^2 bound to catalog (6,1).
  Labelled                             s3();
  std::vector<std::vector<int>> const& s3_session_rows();
  GroupWithAction                      s3_session();

  // Frozen output of tests/oracles/oracle.py.
  nlohmann::json const& oracle();

  // Every enumerated object over catalog groups with order <= max_order
  // (heavy ids skipped), in catalog then enumeration order.
  void for_each_object(int max_order,
                       std::function<void(GapId, std::size_t, GroupWithAction const&)> const& f);

  // All objects of one catalog group.
  std::vector<GroupWithAction> objects(int order, int index);

}  // namespace fixtures
