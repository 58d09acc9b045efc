#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gwa/aut.hpp"
#include "gwa/gwa.hpp"

namespace gwa {

  // Group homomorphism that also carries g^h to map(g)^map(h).  Throws
  // LengthMismatch when map does not cover the source.
  bool is_gwa_morphism(GroupWithAction const&   src,
                       GroupWithAction const&   dst,
                       std::span<Element const> map);

  // Searches group isomorphisms between the underlying groups and tests the
  // action condition on each.
  bool is_isomorphic_gwa(GroupWithAction const& a, GroupWithAction const& b);

  struct Fingerprint {
    std::size_t kernel_size = 0;
    std::size_t image_size  = 0;
    // (order of h, cycle type of v(h)) for every h, sorted
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> actors;
    std::size_t center_size = 0;
    std::size_t n_ideals    = 0;

    friend auto operator<=>(Fingerprint const&, Fingerprint const&) = default;
  };

  Fingerprint fingerprint(GroupWithAction const& a);

  struct IsoPartition {
    // Families sorted by their smallest member; members sorted inside.
    std::vector<std::vector<std::size_t>> families;

    std::vector<std::size_t> sizes() const;
    // First member of each family.
    std::vector<std::size_t> representatives() const;
  };

  // Orbits of the Aut(G)-action on the members, which must share one
  // underlying group (MixedUnderlyingGroups otherwise).  Every family is
  // checked to be fingerprint-constant.
  IsoPartition iso_families(std::vector<GroupWithAction> const& members);

  // Same partition computed on homomorphisms G -> Aut(G) given as index maps,
  // under v -> (k -> a^-1 . v(a^-1(k)) . a) for a in Aut(G).
  IsoPartition iso_families_of_homs(
      AutomorphismGroup const&                       aut,
      std::vector<std::vector<std::uint32_t>> const& homs);

  // Brute force: pairwise isomorphism tests, for cross-checking.
  IsoPartition iso_families_brute_force(std::vector<GroupWithAction> const& members);

}  // namespace gwa
