#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gwa/group.hpp"

namespace gwa {

  // Aut(G) as an indexed permutation group.  Elements are kept in the order
  // returned by automorphisms(), so index 0 is the identity.  The operation
  // op(a, b) is "a then b", matching the right-action convention: an action
  // v : G -> Aut(G) satisfies v(g + h) = op(v(g), v(h)).
  class AutomorphismGroup {
   public:
    explicit AutomorphismGroup(Group const& g);

    std::uint32_t size() const noexcept {
      return static_cast<std::uint32_t>(perms_.size());
    }

    Permutation const& operator[](std::uint32_t i) const {
      return perms_[i];
    }

    std::vector<Permutation> const& elements() const noexcept {
      return perms_;
    }

    std::optional<std::uint32_t> index_of(Permutation const& p) const;
    std::optional<std::uint32_t> index_of(std::span<Element const> image) const;

    std::uint32_t op(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const {
      return inverse_[a];
    }
    std::size_t order(std::uint32_t a) const {
      return orders_[a];
    }

    // Greedy: scan in index order, keep an element when it is not already in
    // the subgroup generated by the ones kept so far.
    std::vector<std::uint32_t> const& generators() const noexcept {
      return gens_;
    }

   private:
    std::uint32_t compose(std::uint32_t a, std::uint32_t b) const;

    std::vector<Permutation>   perms_;
    std::vector<std::uint32_t> table_;  // empty when too large
    std::vector<std::uint32_t> inverse_;
    std::vector<std::size_t>   orders_;
    std::vector<std::uint32_t> gens_;
  };

}  // namespace gwa
