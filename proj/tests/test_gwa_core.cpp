#include <doctest.h>

#include <set>
#include <sstream>

#include "gwa/catalog.hpp"
#include "gwa/gwa.hpp"
#include "gwa/json_io.hpp"
#include "support/fixtures.hpp"

using namespace gwa;

namespace {

  bool throws_code(ErrorCode code, auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code() == code;
    }
    return false;
  }

  CayleyTable identity_columns(std::size_t n) {
    CayleyTable t(n, std::vector<int>(n));
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        t[g][h] = static_cast<int>(g);
      }
    }
    return t;
  }

  Group aut_as_group(AutomorphismGroup const& aut) {
    CayleyTable t(aut.size(), std::vector<int>(aut.size()));
    for (std::uint32_t a = 0; a < aut.size(); ++a) {
      for (std::uint32_t b = 0; b < aut.size(); ++b) {
        t[a][b] = static_cast<int>(aut.op(a, b));
      }
    }
    return validate_group(t);
  }

  // Rows of a rendered table, split on whitespace, header and rule removed.
  std::vector<std::vector<std::string>> rendered_rows(std::string const& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream                    in(text);
    std::string                           line;
    int                                   k = 0;
    while (std::getline(in, line)) {
      if (k++ < 2) {
        continue;
      }
      std::istringstream       ls(line.substr(line.find('|') + 1));
      std::vector<std::string> row;
      for (std::string w; ls >> w;) {
        row.push_back(w);
      }
      rows.push_back(row);
    }
    return rows;
  }

}  // namespace

TEST_CASE("is_gwa on identity columns and the printed Klein actions") {
  for (GapId id : catalog_ids(12)) {
    Group const g = catalog(id.order, id.index);
    CHECK(is_gwa(g, identity_columns(g.order())));
  }
  fixtures::Labelled const k = fixtures::klein();
  for (int i = 1; i <= 4; ++i) {
    CAPTURE(i);
    CHECK(is_gwa(*k.group, fixtures::from_printed(k, fixtures::klein_eps_rows(i))));
  }

  CayleyTable bad = identity_columns(4);
  bad[0][1]       = 1;
  GwaCheck const c = check_gwa(*k.group, bad);
  CHECK_FALSE(c.ok);
  CHECK(c.axiom == "zero-fixed");

  CHECK(throws_code(ErrorCode::DimensionMismatch,
                    [&] { is_gwa(*k.group, identity_columns(3)); }));
  CHECK(throws_code(ErrorCode::NotAGwa, [&] { make_gwa(k.group, bad); }));

  // a non-automorphism column
  CayleyTable swap = identity_columns(4);
  swap[1][2]       = 2;
  swap[2][2]       = 1;
  CHECK_FALSE(is_gwa(*k.group, swap));
}

TEST_CASE("gwa_from_hom") {
  GroupPtr g = fixtures::catalog_ptr(6, 1);
  std::vector<Permutation> const id(6, Permutation::identity(6));
  CHECK(gwa_from_hom(g, id) == trivial_gwa(g));

  std::vector<Permutation> inner;
  for (Element h = 0; h < 6; ++h) {
    std::vector<Element> img(6);
    for (Element x = 0; x < 6; ++x) {
      img[x] = g->conjugate(x, h);
    }
    inner.emplace_back(img);
  }
  CHECK(gwa_from_hom(g, inner) == conjugation_gwa(g));

  // left conjugation is an anti-homomorphism
  std::vector<Permutation> left;
  for (Element h = 0; h < 6; ++h) {
    left.push_back(inner[g->neg(h)]);
  }
  CHECK(throws_code(ErrorCode::NotIntoAut, [&] { gwa_from_hom(g, left); }));
}

TEST_CASE("every enumerated object satisfies the axioms") {
  for (GapId id : catalog_ids(12)) {
    CAPTURE(to_string(id));
    GroupPtr                           g   = fixtures::catalog_ptr(id.order, id.index);
    std::vector<GroupWithAction> const all = all_gwa_on_group(g);
    AutomorphismGroup const            aut(*g);
    CHECK(all.size() == action_homs(*g, aut).size());
    if (aut.size() <= kMaxOrder) {
      CHECK(all.size() == homomorphisms(*g, aut_as_group(aut)).size());
    }
    std::set<CayleyTable> distinct;
    bool                  has_trivial = false;
    bool                  has_conj    = false;
    for (GroupWithAction const& a : all) {
      CHECK(is_gwa(*g, a.action_matrix()));
      distinct.insert(a.action_matrix());
      has_trivial = has_trivial || a == trivial_gwa(g);
      has_conj    = has_conj || a == conjugation_gwa(g);
      for (Element h = 0; h < g->order(); ++h) {
        std::vector<Element> col(g->order());
        for (Element x = 0; x < g->order(); ++x) {
          col[x] = a.act(x, h);
        }
        CHECK(is_homomorphism(*g, *g, col));
        CHECK(a.act(h, 0) == h);
      }
    }
    CHECK(distinct.size() == all.size());
    CHECK(has_trivial);
    CHECK(has_conj);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(all_gwa_on_group(fixtures::catalog_ptr(4, 2)).size() == 10);
  CHECK(all_gwa_on_group(fixtures::catalog_ptr(6, 1)).size() == 10);
  CHECK(all_gwa_on_group(fixtures::catalog_ptr(8, 4)).size() == 52);
  auto const& actions = fixtures::oracle().at("actions");
  for (auto it = actions.begin(); it != actions.end(); ++it) {
    int const o = std::stoi(it.key());
    int const i = std::stoi(it.key().substr(it.key().find(',') + 1));
    CAPTURE(it.key());
    CHECK(all_gwa_on_group(fixtures::catalog_ptr(o, i)).size() ==
          it.value().at("n_gwa").get<std::size_t>());
  }
}

TEST_CASE("trivial and conjugation objects") {
  GroupPtr c6 = fixtures::catalog_ptr(6, 2);
  CHECK(conjugation_gwa(c6) == trivial_gwa(c6));
  GroupPtr s3 = fixtures::catalog_ptr(6, 1);
  CHECK_FALSE(conjugation_gwa(s3) == trivial_gwa(s3));
  GroupWithAction const t = trivial_gwa(s3);
  GroupWithAction const c = conjugation_gwa(s3);
  for (Element g = 0; g < 6; ++g) {
    for (Element h = 0; h < 6; ++h) {
      CHECK(t.act(g, h) == g);
      CHECK(t.bracket(g, h) == 0);
      CHECK(c.act(g, h) == s3->conjugate(g, h));
      CHECK(c.bracket(g, h) == c.comm(g, h));
    }
  }
}

TEST_CASE("element operators") {
  GroupWithAction const e3 = fixtures::klein_eps(3);
  Element const         a = 1, b = 2, ab = 3;
  CHECK(act(e3, a, a) == ab);
  CHECK(bracket(e3, a, a) == b);
  CHECK(comm(e3, a, b) == 0);
  for (Element g = 0; g < 4; ++g) {
    CHECK(act(e3, g, 0) == g);
  }
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [&] { act(e3, 4, 0); }));
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [&] { bracket(e3, 0, 9); }));
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [&] { comm(e3, 7, 7); }));
}

TEST_CASE("action table rendering") {
  GroupPtr   s3 = fixtures::catalog_ptr(6, 1);
  auto const rows = rendered_rows(action_table_render(trivial_gwa(s3)));
  REQUIRE(rows.size() == 6);
  for (auto const& r : rows) {
    CHECK(r == s3->labels());
  }

  // printed tables come back unchanged
  auto check_printed = [](fixtures::Labelled const& l, GroupWithAction const& obj,
                          std::vector<std::vector<int>> const& printed) {
    auto const out = rendered_rows(action_table_render(obj));
    for (std::size_t i = 0; i < printed.size(); ++i) {
      for (std::size_t j = 0; j < printed.size(); ++j) {
        Element const want = l.elems[static_cast<std::size_t>(printed[i][j])];
        CHECK(out[l.elems[i]][l.elems[j]] == obj.group().label(want));
      }
    }
  };
  check_printed(fixtures::klein(), fixtures::klein_eps(1), fixtures::klein_eps_rows(1));
  check_printed(fixtures::s3(), fixtures::s3_session(), fixtures::s3_session_rows());
  check_printed(fixtures::q8(), fixtures::q8_example(), fixtures::q8_example_rows());

  // Klein eps_1 exactly as printed, labels included
  auto const k1 = rendered_rows(action_table_render(fixtures::klein_eps(1)));
  CHECK(k1[2] == std::vector<std::string>{"e", "a", "ab", "b"});
}

TEST_CASE("printed fixtures are valid objects") {
  for (int i = 1; i <= 4; ++i) {
    CHECK_NOTHROW(fixtures::klein_eps(i));
  }
  CHECK_NOTHROW(fixtures::q8_example());
  CHECK_NOTHROW(fixtures::s3_session());
  // the session object is one of the enumerated S3 objects
  std::vector<GroupWithAction> const all = all_gwa_on_group(fixtures::s3().group);
  CHECK(std::count(all.begin(), all.end(), fixtures::s3_session()) == 1);
}

TEST_CASE("gwa JSON round trip") {
  GroupWithAction const a    = fixtures::q8_example();
  Json const            j    = gwa_to_json(a);
  GroupWithAction const back = gwa_from_json(j);
  CHECK(back == a);
  CHECK(j.at("action")[1][2].get<int>() == a.act(1, 2));

  Json broken              = j;
  broken["action"][0][1]   = 1;
  CHECK(throws_code(ErrorCode::NotAGwa, [&] { gwa_from_json(broken); }));
  Json shape = j;
  shape["group"]["cayley"] = "x";
  CHECK(throws_code(ErrorCode::ParseError, [&] { gwa_from_json(shape); }));

  Group const g = catalog(12, 3);
  CHECK(group_from_json(group_to_json(g)) == g);
  CHECK(group_from_json(group_to_json(g)).name() == "A4");
}
