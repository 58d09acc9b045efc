#include "gwa/gwa.hpp"

#include <algorithm>
#include <sstream>

#include "gwa/detail/hom_search.hpp"

namespace gwa {

  namespace {

    std::string tuple_str(std::initializer_list<std::size_t> xs) {
      std::string s = "(";
      bool        first = true;
      for (std::size_t x : xs) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
      return s + ")";
    }

    std::vector<Element> flatten_checked(Group const& g, CayleyTable const& action) {
      std::size_t const n = g.order();
      if (action.size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "action has " + std::to_string(action.size())
                        + " rows, group order is " + std::to_string(n));
      }
      std::vector<Element> flat(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        if (action[x].size() != n) {
          throw Error(ErrorCode::DimensionMismatch,
                      "action row " + std::to_string(x) + " has "
                          + std::to_string(action[x].size()) + " entries");
        }
        for (std::size_t y = 0; y < n; ++y) {
          int const v = action[x][y];
          // out-of-range entries are reported by check_gwa as closure failures
          flat[x * n + y] = (v < 0 || static_cast<std::size_t>(v) >= n)
                                ? static_cast<Element>(0xffff)
                                : static_cast<Element>(v);
        }
      }
      return flat;
    }

    // Adapts AutomorphismGroup to the search target interface.
    class AutTarget {
     public:
      explicit AutTarget(AutomorphismGroup const& aut) : aut_(aut) {}
      std::uint32_t size() const {
        return aut_.size();
      }
      std::uint32_t op(std::uint32_t a, std::uint32_t b) const {
        return aut_.op(a, b);
      }
      std::size_t order(std::uint32_t a) const {
        return aut_.order(a);
      }

     private:
      AutomorphismGroup const& aut_;
    };

    void check_index(GroupWithAction const& a, std::size_t g, std::size_t h) {
      if (g >= a.order() || h >= a.order()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    tuple_str({g, h}) + " with order " + std::to_string(a.order()));
      }
    }

  }  // namespace

  Permutation GroupWithAction::actor(Element h) const {
    std::vector<Element> img(order());
    for (std::size_t g = 0; g < order(); ++g) {
      img[g] = act(static_cast<Element>(g), h);
    }
    return Permutation(std::move(img));
  }

  CayleyTable GroupWithAction::action_matrix() const {
    std::size_t const n = order();
    CayleyTable       out(n, std::vector<int>(n));
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        out[g][h] = action_[g * n + h];
      }
    }
    return out;
  }

  GwaCheck check_gwa(Group const& G, CayleyTable const& action) {
    std::vector<Element> const e = flatten_checked(G, action);
    std::size_t const          n = G.order();
    auto                       at = [&](std::size_t g, std::size_t h) {
      return e[g * n + h];
    };
    auto fail = [](std::string axiom, std::vector<Element> w) {
      return GwaCheck{false, std::move(axiom), std::move(w)};
    };
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        if (at(g, h) >= n) {
          return fail("closure", {Element(g), Element(h)});
        }
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (at(g, 0) != g) {
        return fail("identity-actor", {Element(g)});
      }
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (at(0, h) != 0) {
        return fail("zero-fixed", {Element(h)});
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const hk = G.op(Element(h), Element(k));
          if (at(g, hk) != at(at(g, h), k)) {
            return fail("composition", {Element(g), Element(h), Element(k)});
          }
        }
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t g2 = 0; g2 < n; ++g2) {
        auto const s = G.op(Element(g), Element(g2));
        for (std::size_t h = 0; h < n; ++h) {
          if (at(s, h) != G.op(at(g, h), at(g2, h))) {
            return fail("additivity", {Element(g), Element(g2), Element(h)});
          }
        }
      }
    }
    return {};
  }

  bool is_gwa(Group const& g, CayleyTable const& action) {
    return check_gwa(g, action).ok;
  }

  GroupWithAction make_gwa_unchecked(GroupPtr g, std::vector<Element> action) {
    GroupWithAction a;
    a.group_  = std::move(g);
    a.action_ = std::move(action);
    return a;
  }

  GroupWithAction make_gwa(GroupPtr g, CayleyTable const& action) {
    GwaCheck const c = check_gwa(*g, action);
    if (!c.ok) {
      std::string w;
      for (Element x : c.witness) {
        w += (w.empty() ? "" : ",") + std::to_string(x);
      }
      throw Error(ErrorCode::NotAGwa, c.axiom + " fails at (" + w + ")");
    }
    return make_gwa_unchecked(g, flatten_checked(*g, action));
  }

  GroupWithAction gwa_from_hom(GroupPtr g, std::vector<Permutation> const& v) {
    Group const&      G = *g;
    std::size_t const n = G.order();
    if (v.size() != n) {
      throw Error(ErrorCode::NotIntoAut,
                  "expected " + std::to_string(n) + " images, got "
                      + std::to_string(v.size()));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (v[h].size() != n || !is_homomorphism(G, G, v[h].image())) {
        throw Error(ErrorCode::NotIntoAut,
                    "image of " + std::to_string(h) + " is not an automorphism");
      }
    }
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k = 0; k < n; ++k) {
        if (v[G.op(Element(h), Element(k))] != v[h].then(v[k])) {
          throw Error(ErrorCode::NotIntoAut,
                      "not a homomorphism at " + tuple_str({h, k}));
        }
      }
    }
    std::vector<Element> action(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t h = 0; h < n; ++h) {
        action[x * n + h] = v[h](Element(x));
      }
    }
    return make_gwa_unchecked(std::move(g), std::move(action));
  }

  GroupWithAction gwa_from_aut_indices(GroupPtr                       g,
                                       AutomorphismGroup const&       aut,
                                       std::span<std::uint32_t const> v) {
    std::size_t const    n = g->order();
    std::vector<Element> action(n * n);
    for (std::size_t h = 0; h < n; ++h) {
      Permutation const& p = aut[v[h]];
      for (std::size_t x = 0; x < n; ++x) {
        action[x * n + h] = p(Element(x));
      }
    }
    return make_gwa_unchecked(std::move(g), std::move(action));
  }

  std::vector<std::vector<std::uint32_t>> action_homs(
      Group const& g, AutomorphismGroup const& aut) {
    std::vector<std::vector<std::uint32_t>> out;
    auto const gens = minimal_generating_set(g);
    detail::search_homomorphisms(
        g, gens, AutTarget(aut), false,
        [&out](std::span<std::uint32_t const> map) {
          out.emplace_back(map.begin(), map.end());
        });
    return out;
  }

  std::vector<GroupWithAction> all_gwa_on_group(GroupPtr g) {
    AutomorphismGroup const      aut(*g);
    std::vector<GroupWithAction> out;
    for (auto const& v : action_homs(*g, aut)) {
      out.push_back(gwa_from_aut_indices(g, aut, v));
    }
    return out;
  }

  GroupWithAction trivial_gwa(GroupPtr g) {
    std::size_t const    n = g->order();
    std::vector<Element> action(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      std::fill_n(action.begin() + x * n, n, Element(x));
    }
    return make_gwa_unchecked(std::move(g), std::move(action));
  }

  GroupWithAction conjugation_gwa(GroupPtr g) {
    std::size_t const    n = g->order();
    std::vector<Element> action(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t h = 0; h < n; ++h) {
        action[x * n + h] = g->conjugate(Element(x), Element(h));
      }
    }
    return make_gwa_unchecked(std::move(g), std::move(action));
  }

  Element act(GroupWithAction const& a, std::size_t g, std::size_t h) {
    check_index(a, g, h);
    return a.act(Element(g), Element(h));
  }

  Element bracket(GroupWithAction const& a, std::size_t g, std::size_t h) {
    check_index(a, g, h);
    return a.bracket(Element(g), Element(h));
  }

  Element comm(GroupWithAction const& a, std::size_t g, std::size_t h) {
    check_index(a, g, h);
    return a.comm(Element(g), Element(h));
  }

  std::string action_table_render(GroupWithAction const& a) {
    Group const&      G = a.group();
    std::size_t const n = G.order();
    std::size_t       width = 1;
    for (auto const& l : G.labels()) {
      width = std::max(width, l.size());
    }
    auto cell = [width](std::string const& s) {
      return std::string(width - s.size(), ' ') + s;
    };
    std::ostringstream os;
    os << cell("") << " |";
    for (std::size_t j = 0; j < n; ++j) {
      os << ' ' << cell(G.label(Element(j)));
    }
    os << '\n' << std::string(width + 1, '-') << '+'
       << std::string(n * (width + 1), '-') << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      os << cell(G.label(Element(i))) << " |";
      for (std::size_t j = 0; j < n; ++j) {
        os << ' ' << cell(G.label(a.act(Element(j), Element(i))));
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace gwa
