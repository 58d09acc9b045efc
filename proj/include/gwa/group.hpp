#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwa/element_set.hpp"
#include "gwa/error.hpp"

namespace gwa {

  // Coordinate in the standard small-groups catalog: (order, index).
  struct GapId {
    int order = 0;
    int index = 0;

    friend auto operator<=>(GapId const&, GapId const&) = default;
  };

  std::string to_string(GapId id);

  // Square table of element indices, as read from user input or JSON.
  using CayleyTable = std::vector<std::vector<int>>;

  // A finite group given by its Cayley table.  The operation is written
  // additively, g + h := op(g, h), and -g := neg(g); element 0 is the
  // identity.  Instances can only be obtained through validate_group (or the
  // constructors built on it), so every Group satisfies the group axioms.
  class Group {
   public:
    std::size_t order() const noexcept {
      return n_;
    }

    Element op(Element g, Element h) const noexcept {
      return table_[g * n_ + h];
    }

    Element neg(Element g) const noexcept {
      return inverse_[g];
    }

    // -h + g + h
    Element conjugate(Element g, Element h) const noexcept {
      return op(op(neg(h), g), h);
    }

    std::span<Element const> row(Element g) const noexcept {
      return {table_.data() + g * n_, n_};
    }

    std::string const& name() const noexcept {
      return name_;
    }

    std::optional<GapId> const& gap_id() const noexcept {
      return gap_id_;
    }

    std::string const& label(Element g) const {
      return labels_[g];
    }

    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    ElementSet all_elements() const noexcept {
      return ElementSet::all(n_);
    }

    bool is_abelian() const noexcept;

    CayleyTable cayley() const;

    // Copies with different metadata; the table is unchanged.
    Group renamed(std::string name, std::optional<GapId> id) const;
    Group relabeled(std::vector<std::string> labels) const;

    // Tables are compared; names and labels are metadata.
    friend bool operator==(Group const& a, Group const& b) {
      return a.n_ == b.n_ && a.table_ == b.table_;
    }

   private:
    friend Group validate_group(CayleyTable const&,
                                std::string,
                                std::optional<GapId>);

    Group() = default;

    std::size_t              n_ = 0;
    std::vector<Element>     table_;
    std::vector<Element>     inverse_;
    std::string              name_;
    std::optional<GapId>     gap_id_;
    std::vector<std::string> labels_;
  };

  using GroupPtr = std::shared_ptr<Group const>;

  // Checks closure, identity at index 0, inverses and associativity, in that
  // order; throws Error naming the first violating tuple.
  Group validate_group(CayleyTable const& table,
                       std::string        name = {},
                       std::optional<GapId> id = {});

  // A bijection of 0..n-1.  Composition follows the right-action convention
  // used throughout: p.then(q) applies p first, then q.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<Element> image);

    static Permutation identity(std::size_t n);

    Element operator()(Element g) const noexcept {
      return image_[g];
    }

    std::size_t size() const noexcept {
      return image_.size();
    }

    std::vector<Element> const& image() const noexcept {
      return image_;
    }

    Permutation then(Permutation const& next) const;
    Permutation inverse() const;
    bool        is_identity() const noexcept;

    // Sorted lengths of the nontrivial cycles.
    std::vector<std::size_t> cycle_type() const;

    friend auto operator<=>(Permutation const&, Permutation const&) = default;
    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<Element> image_;
  };

  struct Homomorphism {
    GroupPtr             source;
    GroupPtr             target;
    std::vector<Element> map;
  };

  bool is_homomorphism(Group const&            source,
                       Group const&            target,
                       std::span<Element const> map);

  // Constructors.  Element layouts are documented in group.cpp.
  Group cyclic(int n);
  Group direct_product(Group const& g, Group const& h);
  Group dihedral(int m);
  Group dicyclic(int m);
  // N x| H with (n1, h1) + (n2, h2) = (n1 + twist[h1](n2), h1 + h2); pairs are
  // indexed as n * |H| + h.  twist[h1 + h2] must equal twist[h2] then
  // twist[h1] (functional composition twist[h1] o twist[h2]).
  Group semidirect(Group const&                    n,
                   Group const&                    h,
                   std::vector<Permutation> const& twist);

  // The endomorphism of `g` sending gens[i] to images[i]; throws if the
  // assignment does not extend to an automorphism.
  Permutation automorphism_from_images(Group const&             g,
                                       std::span<Element const> gens,
                                       std::span<Element const> images);

  // Extends a map on generators of `h` to a twist (a homomorphism into
  // Aut(n) in the functional convention used by semidirect).
  std::vector<Permutation> twist_from_generators(
      Group const&                    n,
      Group const&                    h,
      std::span<Element const>        h_gens,
      std::vector<Permutation> const& images);

  std::size_t element_order(Group const& g, Element x);

  // order -> number of elements of that order
  std::map<std::size_t, std::size_t> element_orders(Group const& g);

  // Lexicographically first generating set of minimum size.
  std::vector<Element> minimal_generating_set(Group const& g);

  ElementSet subgroup_closure(Group const& g, ElementSet s);
  ElementSet normal_closure(Group const& g, ElementSet s);
  bool       is_subgroup(Group const& g, ElementSet s);
  bool       is_normal_subgroup(Group const& g, ElementSet s);

  // Every subgroup, sorted by size then lexicographically.
  std::vector<ElementSet> all_subgroups(Group const& g);
  std::vector<ElementSet> normal_subgroups(Group const& g);

  ElementSet group_center(Group const& g);
  ElementSet commutator_subgroup(Group const& g);

  struct QuotientGroup {
    Group group;
    // element of the parent -> coset index; coset 0 is the subgroup itself
    std::vector<Element> projection;
  };

  QuotientGroup quotient_group(Group const& g, ElementSet normal);

  // Homomorphism enumeration: generator images are searched in lexicographic
  // order over a minimal generating set of the source, and candidate images
  // must have order dividing the generator order.
  std::vector<Homomorphism> homomorphisms(Group const& source,
                                          Group const& target);

  // Automorphisms sorted lexicographically by image array; the identity is
  // always first.
  std::vector<Permutation> automorphisms(Group const& g);

  // Bijective homomorphisms source -> target (as element maps).
  std::vector<std::vector<Element>> isomorphisms(Group const& source,
                                                 Group const& target);

  bool are_isomorphic(Group const& a, Group const& b);

}  // namespace gwa
