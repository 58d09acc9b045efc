#include "gwa/ideal.hpp"

#include <algorithm>

namespace gwa {

  namespace {

    // The three ideal conditions of s inside ambient b, without the subgroup
    // check.
    bool ideal_conditions(GroupWithAction const& a, ElementSet s, ElementSet b) {
      Group const& G  = a.group();
      bool         ok = true;
      s.for_each([&](Element x) {
        b.for_each([&](Element g) {
          if (!ok) {
            return;
          }
          ok = s.contains(G.conjugate(x, g)) && s.contains(a.act(x, g))
               && s.contains(a.bracket(g, x));
        });
      });
      return ok;
    }

  }  // namespace

  bool is_subobject(GroupWithAction const& a, ElementSet s) {
    if (!is_subgroup(a.group(), s)) {
      return false;
    }
    bool ok = true;
    s.for_each([&](Element x) {
      s.for_each([&](Element y) { ok = ok && s.contains(a.act(x, y)); });
    });
    return ok;
  }

  bool is_ideal(GroupWithAction const& a, ElementSet s) {
    return is_ideal_in(a, s, a.group().all_elements());
  }

  bool is_ideal_in(GroupWithAction const& a, ElementSet s, ElementSet ambient) {
    return s.subset_of(ambient) && is_subgroup(a.group(), s)
           && ideal_conditions(a, s, ambient);
  }

  ElementSet subobject_closure(GroupWithAction const& a, ElementSet s) {
    ElementSet cur = s | ElementSet::identity_only();
    while (true) {
      ElementSet next = subgroup_closure(a.group(), cur);
      ElementSet acted = next;
      next.for_each([&](Element x) {
        next.for_each([&](Element y) { acted.insert(a.act(x, y)); });
      });
      if (acted == cur) {
        return cur;
      }
      cur = acted;
    }
  }

  Subobject ideal_closure(GroupWithAction const& a,
                          ElementSet             seed,
                          ElementSet             ambient) {
    if (!seed.subset_of(ambient)) {
      throw Error(ErrorCode::SeedOutsideAmbient,
                  "seed has elements outside the ambient subobject");
    }
    Group const& G   = a.group();
    ElementSet   cur = seed | ElementSet::identity_only();
    while (true) {
      ElementSet next = subgroup_closure(G, cur);
      ElementSet grown = next;
      next.for_each([&](Element x) {
        ambient.for_each([&](Element g) {
          grown.insert(G.conjugate(x, g));
          grown.insert(a.act(x, g));
          grown.insert(a.bracket(g, x));
        });
      });
      if (grown == cur) {
        return {cur, true};
      }
      cur = grown;
    }
  }

  Subobject ideal_closure(GroupWithAction const& a, ElementSet seed) {
    return ideal_closure(a, seed, a.group().all_elements());
  }

  std::vector<Subobject> all_ideals(GroupWithAction const&         a,
                                    std::vector<ElementSet> const* normal) {
    std::vector<ElementSet> own;
    if (normal == nullptr) {
      own    = normal_subgroups(a.group());
      normal = &own;
    }
    ElementSet const       all = a.group().all_elements();
    std::vector<Subobject> out;
    for (ElementSet s : *normal) {
      if (ideal_conditions(a, s, all)) {
        out.push_back({s, true});
      }
    }
    std::sort(out.begin(), out.end(), [](Subobject const& x, Subobject const& y) {
      return size_then_lex_less(x.elements, y.elements);
    });
    return out;
  }

  std::size_t count_ideals(GroupWithAction const&         a,
                           std::vector<ElementSet> const& normal) {
    ElementSet const all = a.group().all_elements();
    return static_cast<std::size_t>(
        std::count_if(normal.begin(), normal.end(), [&](ElementSet s) {
          return ideal_conditions(a, s, all);
        }));
  }

  Subobject ideal_sum(GroupWithAction const& a, ElementSet i, ElementSet j) {
    if (!is_ideal(a, i) || !is_ideal(a, j)) {
      throw Error(ErrorCode::NotAnIdeal, "ideal_sum needs two ideals");
    }
    Group const& G = a.group();
    ElementSet   sum;
    i.for_each([&](Element x) {
      j.for_each([&](Element y) { sum.insert(G.op(x, y)); });
    });
    if (!is_ideal(a, sum)) {
      throw Error(ErrorCode::InvariantViolation, "sum of ideals is not an ideal");
    }
    return {sum, true};
  }

  QuotientGwa quotient_gwa(GroupWithAction const& a, ElementSet i) {
    if (!is_ideal(a, i)) {
      throw Error(ErrorCode::NotAnIdeal,
                  "subset of size " + std::to_string(i.size())
                      + " is not an ideal");
    }
    QuotientGroup     q = quotient_group(a.group(), i);
    std::size_t const k = q.group.order();
    std::size_t const n = a.order();
    constexpr Element kUnset = 0xffff;
    std::vector<Element> action(k * k, kUnset);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t h = 0; h < n; ++h) {
        Element const  cx = q.projection[x], ch = q.projection[h];
        Element const  v  = q.projection[a.act(Element(x), Element(h))];
        Element&       slot = action[cx * k + ch];
        if (slot == kUnset) {
          slot = v;
        } else if (slot != v) {
          throw Error(ErrorCode::InducedActionIllDefined,
                      "cosets of " + std::to_string(x) + " and "
                          + std::to_string(h));
        }
      }
    }
    auto qg = std::make_shared<Group const>(std::move(q.group));
    return {make_gwa_unchecked(std::move(qg), std::move(action)),
            std::move(q.projection)};
  }

}  // namespace gwa
