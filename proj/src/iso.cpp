#include "gwa/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gwa/detail/hom_search.hpp"
#include "gwa/structure.hpp"

namespace gwa {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          // keep the smaller index as root
          parent_[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> parent_;
    };

    IsoPartition collect(UnionFind& uf, std::size_t n) {
      std::map<std::size_t, std::vector<std::size_t>> by_root;
      for (std::size_t i = 0; i < n; ++i) {
        by_root[uf.find(i)].push_back(i);
      }
      IsoPartition p;
      for (auto& [root, members] : by_root) {
        p.families.push_back(std::move(members));
      }
      std::sort(p.families.begin(), p.families.end());
      return p;
    }

    bool action_compatible(GroupWithAction const&   a,
                           GroupWithAction const&   b,
                           std::span<Element const> map) {
      for (std::size_t g = 0; g < a.order(); ++g) {
        for (std::size_t h = 0; h < a.order(); ++h) {
          if (map[a.act(Element(g), Element(h))] != b.act(map[g], map[h])) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  std::vector<std::size_t> IsoPartition::sizes() const {
    std::vector<std::size_t> out;
    for (auto const& f : families) {
      out.push_back(f.size());
    }
    return out;
  }

  std::vector<std::size_t> IsoPartition::representatives() const {
    std::vector<std::size_t> out;
    for (auto const& f : families) {
      out.push_back(f.front());
    }
    return out;
  }

  bool is_gwa_morphism(GroupWithAction const&   src,
                       GroupWithAction const&   dst,
                       std::span<Element const> map) {
    if (map.size() != src.order()) {
      throw Error(ErrorCode::LengthMismatch,
                  "map has " + std::to_string(map.size())
                      + " entries, source order is "
                      + std::to_string(src.order()));
    }
    return is_homomorphism(src.group(), dst.group(), map)
           && action_compatible(src, dst, map);
  }

  bool is_isomorphic_gwa(GroupWithAction const& a, GroupWithAction const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    bool       found = false;
    auto const gens  = minimal_generating_set(a.group());
    struct Found {};
    try {
      detail::search_homomorphisms(
          a.group(), gens, detail::GroupTarget(b.group()), true,
          [&](std::span<std::uint32_t const> m) {
            std::vector<Element> map(m.begin(), m.end());
            if (action_compatible(a, b, map)) {
              throw Found{};
            }
          });
    } catch (Found const&) {
      found = true;
    }
    return found;
  }

  Fingerprint fingerprint(GroupWithAction const& a) {
    Fingerprint                             f;
    std::vector<Permutation>                images;
    for (std::size_t h = 0; h < a.order(); ++h) {
      Permutation p = a.actor(Element(h));
      if (p.is_identity()) {
        ++f.kernel_size;
      }
      f.actors.emplace_back(element_order(a.group(), Element(h)), p.cycle_type());
      if (std::find(images.begin(), images.end(), p) == images.end()) {
        images.push_back(std::move(p));
      }
    }
    std::sort(f.actors.begin(), f.actors.end());
    f.image_size  = images.size();
    f.center_size = center(a).size();
    f.n_ideals    = all_ideals(a).size();
    return f;
  }

  IsoPartition iso_families(std::vector<GroupWithAction> const& members) {
    if (members.empty()) {
      return {};
    }
    Group const& G = members.front().group();
    for (auto const& m : members) {
      if (!(m.group() == G)) {
        throw Error(ErrorCode::MixedUnderlyingGroups,
                    "members do not share one underlying group");
      }
    }
    std::size_t const n = G.order();
    std::map<CayleyTable, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) {
      index.emplace(members[i].action_matrix(), i);
    }
    AutomorphismGroup const aut(G);
    auto transport = [&](std::size_t i, Permutation const& alpha) {
      // T'[alpha g][alpha h] = alpha(T[g][h])
      CayleyTable t(n, std::vector<int>(n));
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
          t[alpha(Element(g))][alpha(Element(h))] =
              alpha(members[i].act(Element(g), Element(h)));
        }
      }
      return index.find(t);
    };
    UnionFind uf(members.size());
    bool      closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::uint32_t ga : aut.generators()) {
        auto it = transport(i, aut[ga]);
        if (it == index.end()) {
          closed = false;
          break;
        }
        uf.unite(i, it->second);
      }
    }
    if (!closed) {
      // generators only suffice for Aut-closed lists; otherwise use every automorphism
      uf = UnionFind(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::uint32_t k = 0; k < aut.size(); ++k) {
          auto it = transport(i, aut[k]);
          if (it != index.end()) {
            uf.unite(i, it->second);
          }
        }
      }
    }
    IsoPartition p = collect(uf, members.size());
    for (auto const& fam : p.families) {
      Fingerprint const f0 = fingerprint(members[fam.front()]);
      for (std::size_t k = 1; k < fam.size(); ++k) {
        if (fingerprint(members[fam[k]]) != f0) {
          throw Error(ErrorCode::InvariantViolation,
                      "fingerprint differs inside a family");
        }
      }
    }
    return p;
  }

  IsoPartition iso_families_of_homs(
      AutomorphismGroup const&                       aut,
      std::vector<std::vector<std::uint32_t>> const& homs) {
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      index.emplace(homs[i], i);
    }
    UnionFind uf(homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i) {
      auto const& v = homs[i];
      for (std::uint32_t a : aut.generators()) {
        Permutation const&  alpha = aut[a];
        Permutation const   alpha_inv = alpha.inverse();
        std::uint32_t const ai = aut.inverse(a);
        std::vector<std::uint32_t> w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
          w[k] = aut.op(aut.op(ai, v[alpha_inv(Element(k))]), a);
        }
        auto it = index.find(w);
        if (it == index.end()) {
          throw Error(ErrorCode::InvariantViolation,
                      "hom list is not closed under Aut(G)");
        }
        uf.unite(i, it->second);
      }
    }
    return collect(uf, homs.size());
  }

  IsoPartition iso_families_brute_force(
      std::vector<GroupWithAction> const& members) {
    UnionFind                uf(members.size());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool placed = false;
      for (std::size_t r : reps) {
        if (is_isomorphic_gwa(members[r], members[i])) {
          uf.unite(r, i);
          placed = true;
          break;
        }
      }
      if (!placed) {
        reps.push_back(i);
      }
    }
    return collect(uf, members.size());
  }

}  // namespace gwa
