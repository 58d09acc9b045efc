#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gwa/group.hpp"

namespace gwa::detail {

  // Backtracking search for homomorphisms out of `source`.  Generator images
  // are tried in increasing target index; after each assignment the partial
  // map is extended over the subgroup generated so far by walking its Cayley
  // graph, and the branch is cut at the first inconsistent edge.
  //
  // Target must provide size(), op(a, b) and order(a) over uint32 indices
  // with 0 as identity.  The callback receives the full element map.
  template <typename Target, typename Callback>
  void search_homomorphisms(Group const&              source,
                            std::span<Element const>  gens,
                            Target const&             target,
                            bool                      injective,
                            Callback&&                callback) {
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    std::size_t const n = source.order();
    std::size_t const k = gens.size();

    if (k == 0) {
      // trivial source
      std::vector<std::uint32_t> map(n, 0);
      callback(std::span<std::uint32_t const>(map));
      return;
    }

    std::vector<std::vector<std::uint32_t>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t const ord = element_order(source, gens[i]);
      for (std::uint32_t t = 0; t < target.size(); ++t) {
        if (ord % target.order(t) == 0) {
          candidates[i].push_back(t);
        }
      }
    }

    std::vector<std::uint32_t> images(k, 0);
    std::vector<std::uint32_t> map(n, kUnset);
    std::vector<Element>       queue;
    queue.reserve(n);
    std::vector<char> hit(injective ? target.size() : 0, 0);

    auto extend = [&](std::size_t depth) -> bool {
      for (Element x : queue) {
        if (injective) {
          hit[map[x]] = 0;
        }
        map[x] = kUnset;
      }
      queue.clear();
      map[0] = 0;
      queue.push_back(0);
      if (injective) {
        hit[0] = 1;
      }
      bool ok = true;
      for (std::size_t head = 0; head < queue.size() && ok; ++head) {
        Element const x = queue[head];
        for (std::size_t i = 0; i <= depth; ++i) {
          Element const       y = source.op(x, gens[i]);
          std::uint32_t const m = target.op(map[x], images[i]);
          if (map[y] == kUnset) {
            if (injective) {
              if (hit[m]) {
                ok = false;
                break;
              }
              hit[m] = 1;
            }
            map[y] = m;
            queue.push_back(y);
          } else if (map[y] != m) {
            ok = false;
            break;
          }
        }
      }
      return ok;
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
      for (std::uint32_t t : candidates[depth]) {
        images[depth] = t;
        if (!extend(depth)) {
          continue;
        }
        if (depth + 1 == k) {
          callback(std::span<std::uint32_t const>(map));
        } else {
          self(self, depth + 1);
        }
      }
    };
    recurse(recurse, 0);
  }

  // Adapts a Cayley-table Group to the Target interface above.
  class GroupTarget {
   public:
    explicit GroupTarget(Group const& g) : g_(g), orders_(g.order()) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        orders_[x] = element_order(g, static_cast<Element>(x));
      }
    }
    std::uint32_t size() const {
      return static_cast<std::uint32_t>(g_.order());
    }
    std::uint32_t op(std::uint32_t a, std::uint32_t b) const {
      return g_.op(static_cast<Element>(a), static_cast<Element>(b));
    }
    std::size_t order(std::uint32_t a) const {
      return orders_[a];
    }

   private:
    Group const&             g_;
    std::vector<std::size_t> orders_;
  };

}  // namespace gwa::detail
