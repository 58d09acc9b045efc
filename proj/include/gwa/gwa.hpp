#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwa/aut.hpp"
#include "gwa/group.hpp"

namespace gwa {

  // A group acting on itself from the right by automorphisms.  The action is
  // stored acted-upon first: act(g, h) = g^h.  actor(h) is the automorphism
  // g -> g^h, and h -> actor(h) is a homomorphism G -> Aut(G) under
  // Permutation::then.
  class GroupWithAction {
   public:
    GroupPtr const& group_ptr() const noexcept {
      return group_;
    }
    Group const& group() const noexcept {
      return *group_;
    }
    std::size_t order() const noexcept {
      return group_->order();
    }

    Element act(Element g, Element h) const noexcept {
      return action_[g * order() + h];
    }

    // -g + g^h
    Element bracket(Element g, Element h) const noexcept {
      return group_->op(group_->neg(g), act(g, h));
    }

    // -g - h + g + h
    Element comm(Element g, Element h) const noexcept {
      Group const& G = *group_;
      return G.op(G.op(G.neg(g), G.neg(h)), G.op(g, h));
    }

    Permutation actor(Element h) const;

    // The action as a matrix in storage orientation (row = acted-upon).
    CayleyTable action_matrix() const;

    friend bool operator==(GroupWithAction const& a, GroupWithAction const& b) {
      return *a.group_ == *b.group_ && a.action_ == b.action_;
    }

   private:
    friend GroupWithAction make_gwa_unchecked(GroupPtr, std::vector<Element>);

    GroupPtr             group_;
    std::vector<Element> action_;
  };

  struct GwaCheck {
    bool ok = true;
    // "closure", "identity-actor", "composition", "additivity" or
    // "zero-fixed"; empty when ok.
    std::string          axiom;
    std::vector<Element> witness;
  };

  // Checks the action axioms on all tuples, reporting the first failure.
  // Throws DimensionMismatch when the matrix is not |G| x |G|.
  GwaCheck check_gwa(Group const& g, CayleyTable const& action);
  bool     is_gwa(Group const& g, CayleyTable const& action);

  // Validating constructor; throws NotAGwa with the failing axiom.
  GroupWithAction make_gwa(GroupPtr g, CayleyTable const& action);

  // No checks; `action` is in storage orientation, flattened row-major.
  GroupWithAction make_gwa_unchecked(GroupPtr g, std::vector<Element> action);

  // From v with v[h] an automorphism of G; throws NotIntoAut when some v[h]
  // is not an automorphism or v is not a homomorphism.
  GroupWithAction gwa_from_hom(GroupPtr g, std::vector<Permutation> const& v);

  // From v given as indices into `aut`; trusted to be a homomorphism.
  GroupWithAction gwa_from_aut_indices(GroupPtr                         g,
                                       AutomorphismGroup const&         aut,
                                       std::span<std::uint32_t const>   v);

  // Every homomorphism G -> Aut(G) as an index map into `aut`, in search
  // order (lexicographic on generator images).
  std::vector<std::vector<std::uint32_t>> action_homs(
      Group const& g, AutomorphismGroup const& aut);

  std::vector<GroupWithAction> all_gwa_on_group(GroupPtr g);

  GroupWithAction trivial_gwa(GroupPtr g);
  GroupWithAction conjugation_gwa(GroupPtr g);

  // Range-checked element operators; throw IndexOutOfRange.
  Element act(GroupWithAction const& a, std::size_t g, std::size_t h);
  Element bracket(GroupWithAction const& a, std::size_t g, std::size_t h);
  Element comm(GroupWithAction const& a, std::size_t g, std::size_t h);

  // Text table in the row-actor layout: entry (i, j) is the label of
  // act(a_j, a_i).
  std::string action_table_render(GroupWithAction const& a);

}  // namespace gwa
