#include "gwa/catalog.hpp"

#include <algorithm>
#include <functional>

namespace gwa {

  namespace {

    Group C(int n) {
      return cyclic(n);
    }

    Group X(Group const& a, Group const& b) {
      return direct_product(a, b);
    }

    Permutation power_map(int n, int k) {
      std::vector<Element> img(n);
      for (int x = 0; x < n; ++x) {
        img[x] = static_cast<Element>((x * k) % n);
      }
      return Permutation(std::move(img));
    }

    // Cyclic N x| C_m where the generator of C_m acts by x -> k x.
    Group power_twist(int n, int m, int k) {
      Group const h = C(m);
      Element     gen[] = {1};
      return semidirect(C(n), h,
                        twist_from_generators(C(n), h, gen, {power_map(n, k)}));
    }

    // N x| H where every element outside `kernel` acts by inversion (N
    // abelian, kernel of index 2).
    Group inversion_twist(Group const& n, Group const& h, ElementSet kernel) {
      std::vector<Element> inv(n.order());
      for (std::size_t x = 0; x < n.order(); ++x) {
        inv[x] = n.neg(static_cast<Element>(x));
      }
      Permutation const        id = Permutation::identity(n.order());
      Permutation const        neg(inv);
      std::vector<Permutation> twist;
      for (std::size_t x = 0; x < h.order(); ++x) {
        twist.push_back(kernel.contains(static_cast<Element>(x)) ? id : neg);
      }
      return semidirect(n, h, twist);
    }

    ElementSet even_elements(int m) {
      ElementSet s;
      for (int x = 0; x < m; x += 2) {
        s.insert(static_cast<Element>(x));
      }
      return s;
    }

    // C4 x C2 x| C2 with the C2 acting through the automorphism sending the
    // generators (a, b) = (2, 1) to the given images.
    Group c4c2_twist(Element img_a, Element img_b) {
      Group const   n = X(C(4), C(2));
      Element const gens[] = {2, 1};
      Element const imgs[] = {img_a, img_b};
      Group const   h = C(2);
      Element const hgen[] = {1};
      return semidirect(
          n, h,
          twist_from_generators(n, h, hgen,
                                {automorphism_from_images(n, gens, imgs)}));
    }

    // Klein four x| S3 with S3 acting faithfully: the rotation cycles the
    // three involutions, the reflection swaps two of them.
    Group s4() {
      Group const   v = X(C(2), C(2));
      Group const   s3 = dihedral(3);
      Element const gens[] = {1, 3};
      return semidirect(
          v, s3,
          twist_from_generators(v, s3, gens,
                                {Permutation({0, 3, 1, 2}),
                                 Permutation({0, 2, 1, 3})}));
    }

    Group a4() {
      Group const   v = X(C(2), C(2));
      Group const   h = C(3);
      Element const gen[] = {1};
      return semidirect(
          v, h, twist_from_generators(v, h, gen, {Permutation({0, 3, 1, 2})}));
    }

    // Q8 x| C3 with C3 acting by the first automorphism of order 3.
    Group sl23() {
      Group const q8 = dicyclic(2);
      for (Permutation const& p : automorphisms(q8)) {
        if (!p.is_identity() && p.then(p).then(p).is_identity()) {
          Group const   h = C(3);
          Element const gen[] = {1};
          return semidirect(q8, h, twist_from_generators(q8, h, gen, {p}));
        }
      }
      throw Error(ErrorCode::InvariantViolation, "Q8 has no automorphism of order 3");
    }

    // C3 x C3 x| C3 with b -> a + b on C3 x C3 (a = 3, b = 1).
    Group heisenberg27() {
      Group const   n = X(C(3), C(3));
      Element const gens[] = {3, 1};
      Element const imgs[] = {3, 4};
      Group const   h = C(3);
      Element const hgen[] = {1};
      return semidirect(
          n, h,
          twist_from_generators(n, h, hgen,
                                {automorphism_from_images(n, gens, imgs)}));
    }

    Group elementary(int p, int rank) {
      Group g = C(p);
      for (int i = 1; i < rank; ++i) {
        g = X(g, C(p));
      }
      return g;
    }

    struct Recipe {
      CatalogEntry           entry;
      std::function<Group()> build;
    };

    std::vector<Recipe> const& recipes() {
      static std::vector<Recipe> const table = [] {
        std::vector<Recipe> r;
        auto add = [&r](int n, int k, std::string name,
                        std::function<Group()> build, bool heavy = false) {
          r.push_back({{{n, k}, std::move(name), heavy}, std::move(build)});
        };
        auto cyc = [&add](int n, int k) {
          add(n, k, "C" + std::to_string(n), [n] { return C(n); });
        };
        auto dih = [&add](int n, int k) {
          add(n, k, "D" + std::to_string(n), [n] { return dihedral(n / 2); });
        };

        add(1, 1, "I", [] { return C(1); });
        cyc(2, 1);
        cyc(3, 1);
        cyc(4, 1);
        add(4, 2, "C2xC2", [] { return X(C(2), C(2)); });
        cyc(5, 1);
        add(6, 1, "S3", [] { return dihedral(3); });
        cyc(6, 2);
        cyc(7, 1);
        cyc(8, 1);
        add(8, 2, "C4xC2", [] { return X(C(4), C(2)); });
        dih(8, 3);
        add(8, 4, "Q8", [] { return dicyclic(2); });
        add(8, 5, "C2xC2xC2", [] { return elementary(2, 3); });
        cyc(9, 1);
        add(9, 2, "C3xC3", [] { return X(C(3), C(3)); });
        dih(10, 1);
        cyc(10, 2);
        cyc(11, 1);
        add(12, 1, "C3:C4",
            [] { return inversion_twist(C(3), C(4), even_elements(4)); });
        cyc(12, 2);
        add(12, 3, "A4", a4);
        dih(12, 4);
        add(12, 5, "C6xC2", [] { return X(C(6), C(2)); });
        cyc(13, 1);
        dih(14, 1);
        cyc(14, 2);
        cyc(15, 1);
        cyc(16, 1);
        add(16, 2, "C4xC4", [] { return X(C(4), C(4)); });
        // a -> a + b, b -> b; center C2 x C2
        add(16, 3, "(C4xC2):C2", [] { return c4c2_twist(3, 1); });
        add(16, 4, "C4:C4",
            [] { return inversion_twist(C(4), C(4), even_elements(4)); });
        add(16, 5, "C8xC2", [] { return X(C(8), C(2)); });
        add(16, 6, "C8:C2", [] { return power_twist(8, 2, 5); });
        dih(16, 7);
        add(16, 8, "QD16", [] { return power_twist(8, 2, 3); });
        add(16, 9, "Q16", [] { return dicyclic(4); });
        add(16, 10, "C4xC2xC2", [] { return X(X(C(4), C(2)), C(2)); });
        add(16, 11, "C2xD8", [] { return X(C(2), dihedral(4)); });
        add(16, 12, "C2xQ8", [] { return X(C(2), dicyclic(2)); });
        // a -> a, b -> 2a + b; center C4
        add(16, 13, "(C4xC2):C2", [] { return c4c2_twist(2, 5); });
        add(16, 14, "C2xC2xC2xC2", [] { return elementary(2, 4); }, true);
        cyc(17, 1);
        dih(18, 1);
        cyc(18, 2);
        add(18, 3, "C3xS3", [] { return X(C(3), dihedral(3)); });
        add(18, 4, "(C3xC3):C2", [] {
          return inversion_twist(X(C(3), C(3)), C(2), ElementSet::of({0}));
        });
        add(18, 5, "C6xC3", [] { return X(C(6), C(3)); });
        cyc(19, 1);
        add(20, 1, "Q20", [] { return dicyclic(5); });
        cyc(20, 2);
        add(20, 3, "C5:C4", [] { return power_twist(5, 4, 2); });
        dih(20, 4);
        add(20, 5, "C10xC2", [] { return X(C(10), C(2)); });
        add(21, 1, "C7:C3", [] { return power_twist(7, 3, 2); });
        cyc(21, 2);
        dih(22, 1);
        cyc(22, 2);
        cyc(23, 1);
        add(24, 1, "C3:C8",
            [] { return inversion_twist(C(3), C(8), even_elements(8)); });
        cyc(24, 2);
        add(24, 3, "SL(2,3)", sl23);
        add(24, 4, "C3:Q8", [] { return dicyclic(6); });
        add(24, 5, "C4xS3", [] { return X(C(4), dihedral(3)); });
        dih(24, 6);
        add(24, 7, "C2x(C3:C4)", [] { return X(C(2), dicyclic(3)); });
        // D8 acting on C3 with the Klein subgroup {1, r^2, s, s r^2} as kernel
        add(24, 8, "(C6xC2):C2", [] {
          return inversion_twist(C(3), dihedral(4), ElementSet::of({0, 2, 4, 6}));
        });
        add(24, 9, "C12xC2", [] { return X(C(12), C(2)); });
        add(24, 10, "C3xD8", [] { return X(C(3), dihedral(4)); });
        add(24, 11, "C3xQ8", [] { return X(C(3), dicyclic(2)); });
        add(24, 12, "S4", s4);
        add(24, 13, "C2xA4", [] { return X(C(2), a4()); });
        add(24, 14, "C2xC2xS3", [] { return X(X(C(2), C(2)), dihedral(3)); });
        add(24, 15, "C6xC2xC2", [] { return X(X(C(6), C(2)), C(2)); });
        cyc(25, 1);
        add(25, 2, "C5xC5", [] { return X(C(5), C(5)); });
        dih(26, 1);
        cyc(26, 2);
        cyc(27, 1);
        add(27, 2, "C9xC3", [] { return X(C(9), C(3)); });
        add(27, 3, "(C3xC3):C3", heisenberg27);
        add(27, 4, "C9:C3", [] { return power_twist(9, 3, 4); });
        add(27, 5, "C3xC3xC3", [] { return elementary(3, 3); }, true);
        add(28, 1, "C7:C4", [] { return dicyclic(7); });
        cyc(28, 2);
        dih(28, 3);
        add(28, 4, "C14xC2", [] { return X(C(14), C(2)); });
        cyc(29, 1);
        add(30, 1, "C5xS3", [] { return X(C(5), dihedral(3)); });
        add(30, 2, "C3xD10", [] { return X(C(3), dihedral(5)); });
        dih(30, 3);
        cyc(30, 4);
        cyc(31, 1);
        return r;
      }();
      return table;
    }

    Recipe const* find_recipe(GapId id) {
      auto const& r = recipes();
      auto it = std::find_if(r.begin(), r.end(),
                             [&](Recipe const& x) { return x.entry.id == id; });
      return it == r.end() ? nullptr : &*it;
    }

  }  // namespace

  std::vector<CatalogEntry> const& catalog_entries() {
    static std::vector<CatalogEntry> const out = [] {
      std::vector<CatalogEntry> e;
      for (auto const& r : recipes()) {
        e.push_back(r.entry);
      }
      return e;
    }();
    return out;
  }

  std::vector<GapId> catalog_ids(int max_order, bool include_heavy) {
    std::vector<GapId> out;
    for (auto const& e : catalog_entries()) {
      if (e.id.order <= max_order && (include_heavy || !e.heavy)) {
        out.push_back(e.id);
      }
    }
    return out;
  }

  CatalogEntry const& catalog_entry(GapId id) {
    Recipe const* r = find_recipe(id);
    if (r == nullptr) {
      throw Error(ErrorCode::UnknownId, "no catalog entry " + to_string(id));
    }
    return r->entry;
  }

  Group catalog(int order, int index, bool allow_heavy) {
    GapId const   id{order, index};
    Recipe const* r = find_recipe(id);
    if (r == nullptr) {
      throw Error(ErrorCode::UnknownId, "no catalog entry " + to_string(id));
    }
    if (r->entry.heavy && !allow_heavy) {
      throw Error(ErrorCode::UnsupportedHeavy,
                  to_string(id) + " is gated; enable heavy ids to build it");
    }
    return r->build().renamed(r->entry.name, id);
  }

}  // namespace gwa
