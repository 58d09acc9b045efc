#include <algorithm>

#include "gwa/aut.hpp"

namespace gwa {

  namespace {
    // Above this the full multiplication table is not stored.
    constexpr std::size_t kTableLimit = 2048;
  }  // namespace

  AutomorphismGroup::AutomorphismGroup(Group const& g)
      : perms_(automorphisms(g)) {
    std::size_t const m = perms_.size();
    if (m <= kTableLimit) {
      table_.resize(m * m);
      for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t b = 0; b < m; ++b) {
          table_[a * m + b] = compose(a, b);
        }
      }
    }
    inverse_.resize(m);
    orders_.resize(m);
    for (std::uint32_t a = 0; a < m; ++a) {
      inverse_[a] = *index_of(perms_[a].inverse());
      std::size_t   k = 1;
      std::uint32_t x = a;
      while (x != 0) {
        x = op(x, a);
        ++k;
      }
      orders_[a] = k;
    }

    std::vector<char> in_span(m, 0);
    in_span[0] = 1;
    std::vector<std::uint32_t> span_elems{0};
    for (std::uint32_t a = 1; a < m; ++a) {
      if (in_span[a]) {
        continue;
      }
      gens_.push_back(a);
      // Re-close: multiply everything reached so far by every generator.
      for (std::size_t head = 0; head < span_elems.size(); ++head) {
        for (std::uint32_t gen : gens_) {
          std::uint32_t const y = op(span_elems[head], gen);
          if (!in_span[y]) {
            in_span[y] = 1;
            span_elems.push_back(y);
          }
        }
      }
    }
  }

  std::optional<std::uint32_t> AutomorphismGroup::index_of(
      std::span<Element const> image) const {
    auto it = std::lower_bound(
        perms_.begin(), perms_.end(), image,
        [](Permutation const& p, std::span<Element const> img) {
          return std::lexicographical_compare(p.image().begin(),
                                              p.image().end(), img.begin(),
                                              img.end());
        });
    if (it == perms_.end()
        || !std::equal(it->image().begin(), it->image().end(), image.begin(),
                       image.end())) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - perms_.begin());
  }

  std::optional<std::uint32_t> AutomorphismGroup::index_of(
      Permutation const& p) const {
    return index_of(std::span<Element const>(p.image()));
  }

  std::uint32_t AutomorphismGroup::compose(std::uint32_t a,
                                           std::uint32_t b) const {
    return *index_of(perms_[a].then(perms_[b]));
  }

  std::uint32_t AutomorphismGroup::op(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) {
      return table_[a * perms_.size() + b];
    }
    return compose(a, b);
  }

}  // namespace gwa
