#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gwa/ideal.hpp"

namespace gwa {

  // [I, J]: the ideal of the subobject generated by I and J, generated by
  // [a,b], [b,a] and (a,b) for a in I, b in J.
  Subobject commutator_ideal(GroupWithAction const& a, ElementSet i, ElementSet j);

  enum class SeriesStatus { TerminatedAtZero, StabilizedNonzero };

  struct CentralSeries {
    // G_1, G_2, ...; ends at {0}, or at the first occurrence of the value
    // the series settles on.
    std::vector<ElementSet> terms;
    SeriesStatus            status = SeriesStatus::TerminatedAtZero;
  };

  // G_n is the ideal generated by the union of [G_i, G_{n-i}], 0 < i < n.
  // Since G_n depends on every earlier term, one repeated value does not by
  // itself pin the tail; the series is declared stable once a value has held
  // from its first occurrence s up to index 2s, after which every later term
  // provably equals it.
  CentralSeries lower_central_series(GroupWithAction const& a);

  class NilpotencyResult {
   public:
    static NilpotencyResult not_nilpotent() {
      return NilpotencyResult();
    }
    static NilpotencyResult of_class(int c) {
      NilpotencyResult r;
      r.class_ = c;
      return r;
    }

    bool is_nilpotent() const noexcept {
      return class_.has_value();
    }
    // Only meaningful when nilpotent.
    int value() const {
      return *class_;
    }
    // Paper convention: not nilpotent renders as 0, like the trivial object.
    int paper_value() const noexcept {
      return class_.value_or(0);
    }

    friend bool operator==(NilpotencyResult const&, NilpotencyResult const&) = default;

   private:
    NilpotencyResult() = default;
    std::optional<int> class_;
  };

  NilpotencyResult nilpotency_class(CentralSeries const& s);
  NilpotencyResult nilpotency_class(GroupWithAction const& a);

  // {g : g + h = h + g, g^h = g, h^g = h for all h}
  Subobject center(GroupWithAction const& a);
  bool      is_singular(GroupWithAction const& a);

  struct TripleCheck {
    bool                   ok = true;
    std::array<Element, 3> witness{};  // (x, y, z) of the first failure
  };

  // x - x^(z^x) + x^(y + z^x) - x + x^z - x^(z + y^z) = 0, evaluated left to
  // right with a - b := a + (-b).
  TripleCheck condition1_check(GroupWithAction const& a);
  bool        condition1(GroupWithAction const& a);

  // [x^y, [y,z]] = [[x,y], z^x] + [[x,z], y^z]
  TripleCheck condition1_prime_check(GroupWithAction const& a);
  bool        condition1_prime(GroupWithAction const& a);

  // Largest quotient on which the induced action is trivial.
  QuotientGwa q1_trivializing_quotient(GroupWithAction const& a);

  // Quotient group by the normal closure of -(-h + g + h) + g^h.
  QuotientGroup q2_conjugation_quotient(GroupWithAction const& a);

  // Quotient by the ideal generated by all group commutators.
  QuotientGwa abelianization_gwa(GroupWithAction const& a);

}  // namespace gwa
