#pragma once

#include <optional>
#include <vector>

#include "gwa/gwa.hpp"

namespace gwa {

  // A subobject is identified with its element set; the ideal flag is a
  // cached property and does not take part in comparisons.
  struct Subobject {
    ElementSet elements;
    bool       is_ideal = false;

    std::size_t size() const {
      return elements.size();
    }

    friend bool operator==(Subobject const& a, Subobject const& b) {
      return a.elements == b.elements;
    }
  };

  // Subgroup closed under the restricted action.
  bool is_subobject(GroupWithAction const& a, ElementSet s);

  bool is_ideal(GroupWithAction const& a, ElementSet s);

  // Whether `s` is an ideal of the subobject `ambient` with its induced
  // action (s must lie inside ambient).
  bool is_ideal_in(GroupWithAction const& a, ElementSet s, ElementSet ambient);

  // Smallest subobject containing s.
  ElementSet subobject_closure(GroupWithAction const& a, ElementSet s);

  // Smallest ideal of `ambient` containing `seed`.  Throws SeedOutsideAmbient.
  Subobject ideal_closure(GroupWithAction const& a,
                          ElementSet             seed,
                          ElementSet             ambient);
  Subobject ideal_closure(GroupWithAction const& a, ElementSet seed);

  // Every ideal once, sorted by size then lexicographically.  When the
  // normal subgroups of the underlying group are already known they can be
  // passed in to skip the subgroup enumeration.
  std::vector<Subobject> all_ideals(
      GroupWithAction const&                a,
      std::vector<ElementSet> const* normal = nullptr);

  std::size_t count_ideals(GroupWithAction const&        a,
                           std::vector<ElementSet> const& normal);

  // I + J for ideals I, J; throws NotAnIdeal otherwise.
  Subobject ideal_sum(GroupWithAction const& a, ElementSet i, ElementSet j);

  struct QuotientGwa {
    GroupWithAction      object;
    std::vector<Element> projection;
  };

  // G / I with the induced action.  Throws NotAnIdeal, or
  // InducedActionIllDefined if the induced action fails to be well defined.
  QuotientGwa quotient_gwa(GroupWithAction const& a, ElementSet i);

}  // namespace gwa
