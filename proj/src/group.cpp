#include "gwa/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "gwa/detail/hom_search.hpp"

namespace gwa {

  std::string_view to_string(ErrorCode code) {
    switch (code) {
      case ErrorCode::NotClosed: return "NotClosed";
      case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::MissingInverse: return "MissingInverse";
      case ErrorCode::OrderTooLarge: return "OrderTooLarge";
      case ErrorCode::InvalidArgument: return "InvalidArgument";
      case ErrorCode::TwistNotHomomorphism: return "TwistNotHomomorphism";
      case ErrorCode::TwistNotAutomorphism: return "TwistNotAutomorphism";
      case ErrorCode::NotNormalSubgroup: return "NotNormalSubgroup";
      case ErrorCode::UnknownId: return "UnknownId";
      case ErrorCode::UnsupportedHeavy: return "UnsupportedHeavy";
      case ErrorCode::DimensionMismatch: return "DimensionMismatch";
      case ErrorCode::NotAGwa: return "NotAGwa";
      case ErrorCode::NotIntoAut: return "NotIntoAut";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::SeedOutsideAmbient: return "SeedOutsideAmbient";
      case ErrorCode::NotAnIdeal: return "NotAnIdeal";
      case ErrorCode::InducedActionIllDefined: return "InducedActionIllDefined";
      case ErrorCode::LengthMismatch: return "LengthMismatch";
      case ErrorCode::MixedUnderlyingGroups: return "MixedUnderlyingGroups";
      case ErrorCode::IoError: return "IoError";
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
  }

  std::string to_string(GapId id) {
    return "[" + std::to_string(id.order) + "," + std::to_string(id.index)
           + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  bool Group::is_abelian() const noexcept {
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t h = g + 1; h < n_; ++h) {
        if (table_[g * n_ + h] != table_[h * n_ + g]) {
          return false;
        }
      }
    }
    return true;
  }

  CayleyTable Group::cayley() const {
    CayleyTable out(n_, std::vector<int>(n_));
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t h = 0; h < n_; ++h) {
        out[g][h] = table_[g * n_ + h];
      }
    }
    return out;
  }

  Group Group::renamed(std::string name, std::optional<GapId> id) const {
    Group out   = *this;
    out.name_   = std::move(name);
    out.gap_id_ = id;
    return out;
  }

  Group Group::relabeled(std::vector<std::string> labels) const {
    if (labels.size() != n_) {
      throw Error(ErrorCode::InvalidArgument,
                  "expected " + std::to_string(n_) + " labels, got "
                      + std::to_string(labels.size()));
    }
    Group out   = *this;
    out.labels_ = std::move(labels);
    return out;
  }

  Group validate_group(CayleyTable const&   table,
                       std::string          name,
                       std::optional<GapId> id) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::InvalidArgument, "empty table");
    }
    if (n > kMaxOrder) {
      throw Error(ErrorCode::OrderTooLarge,
                  "order " + std::to_string(n) + " exceeds "
                      + std::to_string(kMaxOrder));
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (table[g].size() != n) {
        throw Error(ErrorCode::InvalidArgument,
                    "row " + std::to_string(g) + " has "
                        + std::to_string(table[g].size())
                        + " entries, expected " + std::to_string(n));
      }
      for (std::size_t h = 0; h < n; ++h) {
        int const v = table[g][h];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw Error(ErrorCode::NotClosed,
                      "(" + std::to_string(g) + "," + std::to_string(h)
                          + ") -> " + std::to_string(v));
        }
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (table[0][g] != static_cast<int>(g)
          || table[g][0] != static_cast<int>(g)) {
        throw Error(ErrorCode::NoIdentityAtZero,
                    "element " + std::to_string(g) + " is not fixed by 0");
      }
    }

    Group G;
    G.n_ = n;
    G.table_.resize(n * n);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        G.table_[g * n + h] = static_cast<Element>(table[g][h]);
      }
    }

    G.inverse_.assign(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
      bool found = false;
      for (std::size_t h = 0; h < n && !found; ++h) {
        if (G.table_[g * n + h] == 0 && G.table_[h * n + g] == 0) {
          G.inverse_[g] = static_cast<Element>(h);
          found         = true;
        }
      }
      if (!found) {
        throw Error(ErrorCode::MissingInverse,
                    "element " + std::to_string(g)
                        + " has no two-sided inverse");
      }
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Element const ab = G.table_[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (G.table_[ab * n + c] != G.table_[a * n + G.table_[b * n + c]]) {
            throw Error(ErrorCode::NotAssociative,
                        "(" + std::to_string(a) + "," + std::to_string(b)
                            + "," + std::to_string(c) + ")");
          }
        }
      }
    }

    G.name_   = std::move(name);
    G.gap_id_ = id;
    G.labels_.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
      G.labels_[g] = std::to_string(g);
    }
    return G;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<Element> image)
      : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (Element x : image_) {
      if (x >= image_.size() || seen[x]) {
        throw Error(ErrorCode::InvalidArgument, "image is not a bijection");
      }
      seen[x] = 1;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<Element> img(n);
    std::iota(img.begin(), img.end(), Element{0});
    return Permutation(std::move(img));
  }

  Permutation Permutation::then(Permutation const& next) const {
    Permutation out;
    out.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
      out.image_[i] = next.image_[image_[i]];
    }
    return out;
  }

  Permutation Permutation::inverse() const {
    Permutation out;
    out.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
      out.image_[image_[i]] = static_cast<Element>(i);
    }
    return out;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> out;
    std::vector<char>        seen(image_.size(), 0);
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = image_[j]) {
        seen[j] = 1;
        ++len;
      }
      if (len > 1) {
        out.push_back(len);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_homomorphism(Group const&             source,
                       Group const&             target,
                       std::span<Element const> map) {
    if (map.size() != source.order()) {
      return false;
    }
    for (Element x : map) {
      if (x >= target.order()) {
        return false;
      }
    }
    for (std::size_t g = 0; g < source.order(); ++g) {
      for (std::size_t h = 0; h < source.order(); ++h) {
        auto const gh = source.op(static_cast<Element>(g),
                                  static_cast<Element>(h));
        if (map[gh] != target.op(map[g], map[h])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  // Elements are the residues 0..n-1.
  Group cyclic(int n) {
    if (n < 1) {
      throw Error(ErrorCode::InvalidArgument, "cyclic group needs n >= 1");
    }
    CayleyTable t(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        t[g][h] = (g + h) % n;
      }
    }
    return validate_group(t, n == 1 ? "1" : "C" + std::to_string(n));
  }

  // (g, h) has index g * |H| + h.
  Group direct_product(Group const& g, Group const& h) {
    std::size_t const a = g.order(), b = h.order();
    if (a * b > kMaxOrder) {
      throw Error(ErrorCode::OrderTooLarge,
                  "product order " + std::to_string(a * b));
    }
    CayleyTable t(a * b, std::vector<int>(a * b));
    for (std::size_t x = 0; x < a * b; ++x) {
      for (std::size_t y = 0; y < a * b; ++y) {
        auto const gx = static_cast<Element>(x / b), hx = static_cast<Element>(x % b);
        auto const gy = static_cast<Element>(y / b), hy = static_cast<Element>(y % b);
        t[x][y] = static_cast<int>(g.op(gx, gy) * b + h.op(hx, hy));
      }
    }
    std::string name;
    if (!g.name().empty() && !h.name().empty()) {
      name = g.name() + "x" + h.name();
    }
    return validate_group(t, name);
  }

  // r^i has index i and s r^i has index m + i, with r^m = s^2 = 0 and
  // r^i s = s r^-i.
  Group dihedral(int m) {
    if (m < 1) {
      throw Error(ErrorCode::InvalidArgument, "dihedral group needs m >= 1");
    }
    int const   n = 2 * m;
    CayleyTable t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int const a = x / m, i = x % m;
        int const b = y / m, j = y % m;
        int const r = ((b == 0 ? i : m - i) + j) % m;
        t[x][y]     = ((a + b) % 2) * m + r;
      }
    }
    return validate_group(t, "D" + std::to_string(n));
  }

  // a^i has index i (0 <= i < 2m) and x a^i has index 2m + i, with
  // x^2 = a^m and a^i x = x a^-i.
  Group dicyclic(int m) {
    if (m < 2) {
      throw Error(ErrorCode::InvalidArgument, "dicyclic group needs m >= 2");
    }
    int const   k = 2 * m;
    int const   n = 2 * k;
    CayleyTable t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        bool const xs = x >= k, ys = y >= k;
        int const  i = x % k, j = y % k;
        if (!xs && !ys) {
          t[x][y] = (i + j) % k;
        } else if (!xs && ys) {
          t[x][y] = k + ((j - i) % k + k) % k;
        } else if (xs && !ys) {
          t[x][y] = k + (i + j) % k;
        } else {
          t[x][y] = ((m + j - i) % k + k) % k;
        }
      }
    }
    return validate_group(t, m == 2 ? "Q8" : "Q" + std::to_string(n));
  }

  Group semidirect(Group const&                    n,
                   Group const&                    h,
                   std::vector<Permutation> const& twist) {
    std::size_t const a = n.order(), b = h.order();
    if (twist.size() != b) {
      throw Error(ErrorCode::InvalidArgument,
                  "twist must have one entry per element of H");
    }
    if (a * b > kMaxOrder) {
      throw Error(ErrorCode::OrderTooLarge,
                  "product order " + std::to_string(a * b));
    }
    for (std::size_t x = 0; x < b; ++x) {
      if (twist[x].size() != a || !is_homomorphism(n, n, twist[x].image())) {
        throw Error(ErrorCode::TwistNotAutomorphism,
                    "twist of H-element " + std::to_string(x));
      }
    }
    for (std::size_t x = 0; x < b; ++x) {
      for (std::size_t y = 0; y < b; ++y) {
        auto const& lhs = twist[h.op(static_cast<Element>(x),
                                     static_cast<Element>(y))];
        for (std::size_t v = 0; v < a; ++v) {
          if (lhs(static_cast<Element>(v))
              != twist[x](twist[y](static_cast<Element>(v)))) {
            throw Error(ErrorCode::TwistNotHomomorphism,
                        "H-elements (" + std::to_string(x) + ","
                            + std::to_string(y) + ")");
          }
        }
      }
    }
    CayleyTable t(a * b, std::vector<int>(a * b));
    for (std::size_t x = 0; x < a * b; ++x) {
      for (std::size_t y = 0; y < a * b; ++y) {
        auto const nx = static_cast<Element>(x / b), hx = static_cast<Element>(x % b);
        auto const ny = static_cast<Element>(y / b), hy = static_cast<Element>(y % b);
        t[x][y] = static_cast<int>(n.op(nx, twist[hx](ny)) * b + h.op(hx, hy));
      }
    }
    return validate_group(t);
  }

  Permutation automorphism_from_images(Group const&             g,
                                       std::span<Element const> gens,
                                       std::span<Element const> images) {
    if (gens.size() != images.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "generator and image lists differ in length");
    }
    constexpr Element    kUnset = 0xffff;
    std::vector<Element> map(g.order(), kUnset);
    std::vector<Element> queue{0};
    map[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Element const x = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Element const y = g.op(x, gens[i]);
        Element const m = g.op(map[x], images[i]);
        if (map[y] == kUnset) {
          map[y] = m;
          queue.push_back(y);
        } else if (map[y] != m) {
          throw Error(ErrorCode::InvalidArgument,
                      "generator images do not define a homomorphism");
        }
      }
    }
    if (queue.size() != g.order()) {
      throw Error(ErrorCode::InvalidArgument, "elements do not generate");
    }
    // Throws when the map is not injective.
    return Permutation(std::move(map));
  }

  std::vector<Permutation> twist_from_generators(
      Group const&                    n,
      Group const&                    h,
      std::span<Element const>        h_gens,
      std::vector<Permutation> const& images) {
    if (h_gens.size() != images.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "generator and image lists differ in length");
    }
    std::vector<std::optional<Permutation>> twist(h.order());
    twist[0] = Permutation::identity(n.order());
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Element const x = queue[head];
      for (std::size_t i = 0; i < h_gens.size(); ++i) {
        Element const y = h.op(x, h_gens[i]);
        // twist[x + g] = twist[x] o twist[g]: apply the generator first.
        Permutation m = images[i].then(*twist[x]);
        if (!twist[y]) {
          twist[y] = std::move(m);
          queue.push_back(y);
        } else if (*twist[y] != m) {
          throw Error(ErrorCode::TwistNotHomomorphism,
                      "generator images are inconsistent");
        }
      }
    }
    if (queue.size() != h.order()) {
      throw Error(ErrorCode::InvalidArgument, "elements do not generate H");
    }
    std::vector<Permutation> out;
    out.reserve(twist.size());
    for (auto& p : twist) {
      out.push_back(std::move(*p));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Element orders and generation
  ////////////////////////////////////////////////////////////////////////

  std::size_t element_order(Group const& g, Element x) {
    std::size_t k = 1;
    for (Element y = x; y != 0; y = g.op(y, x)) {
      ++k;
    }
    return k;
  }

  std::map<std::size_t, std::size_t> element_orders(Group const& g) {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
      ++out[element_order(g, static_cast<Element>(x))];
    }
    return out;
  }

  ElementSet subgroup_closure(Group const& g, ElementSet s) {
    std::vector<Element> gens;
    s.for_each([&gens](Element x) {
      if (x != 0) {
        gens.push_back(x);
      }
    });
    ElementSet           out = ElementSet::identity_only();
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Element gen : gens) {
        Element const y = g.op(queue[head], gen);
        if (!out.contains(y)) {
          out.insert(y);
          queue.push_back(y);
        }
      }
    }
    return out;
  }

  std::vector<Element> minimal_generating_set(Group const& g) {
    std::size_t const n = g.order();
    if (n == 1) {
      return {};
    }
    ElementSet const     all = g.all_elements();
    std::vector<Element> pick;
    // Depth-first over increasing index tuples of a fixed size.
    auto search = [&](auto&& self, std::size_t size, Element from) -> bool {
      if (pick.size() == size) {
        return subgroup_closure(g, ElementSet::from_range(pick)) == all;
      }
      for (std::size_t x = from; x < n; ++x) {
        pick.push_back(static_cast<Element>(x));
        if (self(self, size, static_cast<Element>(x + 1))) {
          return true;
        }
        pick.pop_back();
      }
      return false;
    };
    for (std::size_t size = 1;; ++size) {
      pick.clear();
      if (search(search, size, 1)) {
        return pick;
      }
    }
  }

  bool is_subgroup(Group const& g, ElementSet s) {
    if (!s.contains(0) || !s.subset_of(g.all_elements())) {
      return false;
    }
    bool ok = true;
    s.for_each([&](Element x) {
      s.for_each([&](Element y) {
        if (!s.contains(g.op(x, y))) {
          ok = false;
        }
      });
    });
    return ok;
  }

  bool is_normal_subgroup(Group const& g, ElementSet s) {
    if (!is_subgroup(g, s)) {
      return false;
    }
    for (std::size_t h = 0; h < g.order(); ++h) {
      bool ok = true;
      s.for_each([&](Element x) {
        if (!s.contains(g.conjugate(x, static_cast<Element>(h)))) {
          ok = false;
        }
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  ElementSet normal_closure(Group const& g, ElementSet s) {
    ElementSet cur = s | ElementSet::identity_only();
    while (true) {
      ElementSet next = subgroup_closure(g, cur);
      ElementSet conj = next;
      next.for_each([&](Element x) {
        for (std::size_t h = 0; h < g.order(); ++h) {
          conj.insert(g.conjugate(x, static_cast<Element>(h)));
        }
      });
      if (conj == cur) {
        return cur;
      }
      cur = conj;
    }
  }

  std::vector<ElementSet> all_subgroups(Group const& g) {
    std::vector<ElementSet> cyclics;
    for (std::size_t x = 0; x < g.order(); ++x) {
      ElementSet c = subgroup_closure(g, ElementSet::of({static_cast<Element>(x)}));
      if (std::find(cyclics.begin(), cyclics.end(), c) == cyclics.end()) {
        cyclics.push_back(c);
      }
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<ElementSet>           out;
    for (ElementSet c : cyclics) {
      if (seen.insert(c.bits()).second) {
        out.push_back(c);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (ElementSet c : cyclics) {
        if (c.subset_of(out[i])) {
          continue;
        }
        ElementSet j = subgroup_closure(g, out[i] | c);
        if (seen.insert(j.bits()).second) {
          out.push_back(j);
        }
      }
    }
    std::sort(out.begin(), out.end(), size_then_lex_less);
    return out;
  }

  std::vector<ElementSet> normal_subgroups(Group const& g) {
    std::vector<ElementSet> out;
    for (ElementSet s : all_subgroups(g)) {
      if (is_normal_subgroup(g, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  ElementSet group_center(Group const& g) {
    ElementSet out;
    for (std::size_t x = 0; x < g.order(); ++x) {
      bool central = true;
      for (std::size_t y = 0; y < g.order() && central; ++y) {
        central = g.op(static_cast<Element>(x), static_cast<Element>(y))
                  == g.op(static_cast<Element>(y), static_cast<Element>(x));
      }
      if (central) {
        out.insert(static_cast<Element>(x));
      }
    }
    return out;
  }

  ElementSet commutator_subgroup(Group const& g) {
    ElementSet gens;
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t y = 0; y < g.order(); ++y) {
        auto const a = static_cast<Element>(x), b = static_cast<Element>(y);
        gens.insert(g.op(g.op(g.neg(a), g.neg(b)), g.op(a, b)));
      }
    }
    return subgroup_closure(g, gens);
  }

  QuotientGroup quotient_group(Group const& g, ElementSet normal) {
    if (!is_normal_subgroup(g, normal)) {
      throw Error(ErrorCode::NotNormalSubgroup,
                  "subset of size " + std::to_string(normal.size())
                      + " is not a normal subgroup");
    }
    constexpr Element    kUnset = 0xffff;
    std::vector<Element> coset(g.order(), kUnset);
    std::vector<Element> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (coset[x] != kUnset) {
        continue;
      }
      auto const c = static_cast<Element>(reps.size());
      reps.push_back(static_cast<Element>(x));
      normal.for_each([&](Element y) {
        coset[g.op(static_cast<Element>(x), y)] = c;
      });
    }
    std::size_t const k = reps.size();
    CayleyTable       t(k, std::vector<int>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        t[a][b] = coset[g.op(reps[a], reps[b])];
      }
    }
    Group                    q = validate_group(t);
    std::vector<std::string> labels;
    labels.reserve(k);
    for (Element r : reps) {
      labels.push_back(g.label(r));
    }
    return {q.relabeled(std::move(labels)), std::move(coset)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  std::vector<Homomorphism> homomorphisms(Group const& source,
                                          Group const& target) {
    auto src  = std::make_shared<Group const>(source);
    auto dst  = std::make_shared<Group const>(target);
    auto gens = minimal_generating_set(source);
    std::vector<Homomorphism> out;
    detail::search_homomorphisms(
        source, gens, detail::GroupTarget(target), false,
        [&](std::span<std::uint32_t const> map) {
          Homomorphism h{src, dst, std::vector<Element>(map.begin(), map.end())};
          out.push_back(std::move(h));
        });
    return out;
  }

  std::vector<std::vector<Element>> isomorphisms(Group const& source,
                                                 Group const& target) {
    std::vector<std::vector<Element>> out;
    if (source.order() != target.order()) {
      return out;
    }
    auto gens = minimal_generating_set(source);
    detail::search_homomorphisms(
        source, gens, detail::GroupTarget(target), true,
        [&](std::span<std::uint32_t const> map) {
          out.emplace_back(map.begin(), map.end());
        });
    return out;
  }

  std::vector<Permutation> automorphisms(Group const& g) {
    std::vector<Permutation> out;
    for (auto& map : isomorphisms(g, g)) {
      out.emplace_back(std::move(map));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool are_isomorphic(Group const& a, Group const& b) {
    if (a.order() != b.order() || element_orders(a) != element_orders(b)) {
      return false;
    }
    bool found = false;
    auto gens  = minimal_generating_set(a);
    // Stop at the first hit by throwing out of the search.
    struct Found {};
    try {
      detail::search_homomorphisms(a, gens, detail::GroupTarget(b), true,
                                   [](std::span<std::uint32_t const>) {
                                     throw Found{};
                                   });
    } catch (Found const&) {
      found = true;
    }
    return found;
  }

}  // namespace gwa
