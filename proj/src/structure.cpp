#include "gwa/structure.hpp"

namespace gwa {

  Subobject commutator_ideal(GroupWithAction const& a, ElementSet i, ElementSet j) {
    ElementSet gens;
    i.for_each([&](Element x) {
      j.for_each([&](Element y) {
        gens.insert(a.bracket(x, y));
        gens.insert(a.bracket(y, x));
        gens.insert(a.comm(x, y));
      });
    });
    return ideal_closure(a, gens, subobject_closure(a, i | j));
  }

  CentralSeries lower_central_series(GroupWithAction const& a) {
    ElementSet const zero = ElementSet::identity_only();
    CentralSeries    out;
    // g[k] is G_{k+1}
    std::vector<ElementSet> g{a.group().all_elements()};
    std::size_t             first = 0;  // first index of the current value
    std::size_t const       cap   = 2 * a.order() + 2;
    while (true) {
      if (g.back() == zero) {
        out.terms  = g;
        out.status = SeriesStatus::TerminatedAtZero;
        return out;
      }
      std::size_t const last = g.size() - 1;
      if (last >= 2 * first + 1 || g.size() > cap) {
        // constant on G_{first+1} .. G_{2(first+1)}
        out.terms.assign(g.begin(), g.begin() + static_cast<long>(first) + 1);
        out.status = SeriesStatus::StabilizedNonzero;
        if (g.size() > cap) {
          throw Error(ErrorCode::InvariantViolation,
                      "lower central series did not settle");
        }
        return out;
      }
      std::size_t const n = g.size() + 1;  // computing G_n
      ElementSet        seed;
      for (std::size_t i = 1; i < n; ++i) {
        seed |= commutator_ideal(a, g[i - 1], g[n - i - 1]).elements;
      }
      ElementSet const next = ideal_closure(a, seed).elements;
      if (next != g.back()) {
        first = g.size();
      }
      g.push_back(next);
    }
  }

  NilpotencyResult nilpotency_class(CentralSeries const& s) {
    if (s.status == SeriesStatus::StabilizedNonzero) {
      return NilpotencyResult::not_nilpotent();
    }
    return NilpotencyResult::of_class(static_cast<int>(s.terms.size()) - 1);
  }

  NilpotencyResult nilpotency_class(GroupWithAction const& a) {
    return nilpotency_class(lower_central_series(a));
  }

  Subobject center(GroupWithAction const& a) {
    Group const& G = a.group();
    ElementSet   z;
    for (std::size_t x = 0; x < a.order(); ++x) {
      bool in = true;
      for (std::size_t y = 0; y < a.order() && in; ++y) {
        auto const g = Element(x), h = Element(y);
        in = G.op(g, h) == G.op(h, g) && a.act(g, h) == g && a.act(h, g) == h;
      }
      if (in) {
        z.insert(Element(x));
      }
    }
    if (!is_ideal(a, z)) {
      throw Error(ErrorCode::InvariantViolation, "center is not an ideal");
    }
    return {z, true};
  }

  bool is_singular(GroupWithAction const& a) {
    return center(a).elements == a.group().all_elements();
  }

  namespace {

    template <typename Pred>
    TripleCheck scan_triples(std::size_t n, Pred&& holds) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (!holds(Element(x), Element(y), Element(z))) {
              return {false, {Element(x), Element(y), Element(z)}};
            }
          }
        }
      }
      return {};
    }

  }  // namespace

  TripleCheck condition1_check(GroupWithAction const& a) {
    Group const& G = a.group();
    return scan_triples(a.order(), [&](Element x, Element y, Element z) {
      Element const zx = a.act(z, x);
      Element const yz = a.act(y, z);
      Element       t  = x;
      t = G.op(t, G.neg(a.act(x, zx)));
      t = G.op(t, a.act(x, G.op(y, zx)));
      t = G.op(t, G.neg(x));
      t = G.op(t, a.act(x, z));
      t = G.op(t, G.neg(a.act(x, G.op(z, yz))));
      return t == 0;
    });
  }

  bool condition1(GroupWithAction const& a) {
    return condition1_check(a).ok;
  }

  TripleCheck condition1_prime_check(GroupWithAction const& a) {
    Group const& G = a.group();
    return scan_triples(a.order(), [&](Element x, Element y, Element z) {
      Element const lhs = a.bracket(a.act(x, y), a.bracket(y, z));
      Element const rhs = G.op(a.bracket(a.bracket(x, y), a.act(z, x)),
                               a.bracket(a.bracket(x, z), a.act(y, z)));
      return lhs == rhs;
    });
  }

  bool condition1_prime(GroupWithAction const& a) {
    return condition1_prime_check(a).ok;
  }

  QuotientGwa q1_trivializing_quotient(GroupWithAction const& a) {
    ElementSet gens;
    for (std::size_t g = 0; g < a.order(); ++g) {
      for (std::size_t h = 0; h < a.order(); ++h) {
        gens.insert(a.bracket(Element(g), Element(h)));
      }
    }
    QuotientGwa q = quotient_gwa(a, ideal_closure(a, gens).elements);
    if (!(q.object == trivial_gwa(q.object.group_ptr()))) {
      throw Error(ErrorCode::InvariantViolation,
                  "Q1 quotient has a nontrivial action");
    }
    return q;
  }

  QuotientGroup q2_conjugation_quotient(GroupWithAction const& a) {
    Group const& G = a.group();
    ElementSet   rel;
    for (std::size_t g = 0; g < a.order(); ++g) {
      for (std::size_t h = 0; h < a.order(); ++h) {
        auto const x = Element(g), y = Element(h);
        rel.insert(G.op(G.neg(G.conjugate(x, y)), a.act(x, y)));
      }
    }
    return quotient_group(G, normal_closure(G, rel));
  }

  QuotientGwa abelianization_gwa(GroupWithAction const& a) {
    ElementSet gens;
    for (std::size_t g = 0; g < a.order(); ++g) {
      for (std::size_t h = 0; h < a.order(); ++h) {
        gens.insert(a.comm(Element(g), Element(h)));
      }
    }
    return quotient_gwa(a, ideal_closure(a, gens).elements);
  }

}  // namespace gwa
