#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gwa {

  // Elements of a group are indices 0..n-1; index 0 is always the identity.
  using Element = std::uint16_t;

  // Every group handled here fits in a single 64-bit mask.
  inline constexpr std::size_t kMaxOrder = 64;

  // A subset of the elements of a group, stored as a bitmask.
  class ElementSet {
   public:
    constexpr ElementSet() = default;

    static constexpr ElementSet from_bits(std::uint64_t bits) {
      ElementSet s;
      s.bits_ = bits;
      return s;
    }

    static ElementSet of(std::initializer_list<Element> elems) {
      ElementSet s;
      for (Element e : elems) {
        s.insert(e);
      }
      return s;
    }

    template <typename Range>
    static ElementSet from_range(Range const& elems) {
      ElementSet s;
      for (auto e : elems) {
        s.insert(static_cast<Element>(e));
      }
      return s;
    }

    static constexpr ElementSet identity_only() {
      return from_bits(1);
    }

    static constexpr ElementSet all(std::size_t n) {
      return from_bits(n >= 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(Element e) const {
      return (bits_ >> e) & 1u;
    }
    constexpr void insert(Element e) {
      bits_ |= std::uint64_t{1} << e;
    }
    constexpr void erase(Element e) {
      bits_ &= ~(std::uint64_t{1} << e);
    }
    constexpr std::size_t size() const {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool empty() const {
      return bits_ == 0;
    }
    constexpr std::uint64_t bits() const {
      return bits_;
    }
    constexpr bool subset_of(ElementSet other) const {
      return (bits_ & ~other.bits_) == 0;
    }

    constexpr ElementSet operator|(ElementSet o) const {
      return from_bits(bits_ | o.bits_);
    }
    constexpr ElementSet operator&(ElementSet o) const {
      return from_bits(bits_ & o.bits_);
    }
    constexpr ElementSet& operator|=(ElementSet o) {
      bits_ |= o.bits_;
      return *this;
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        f(static_cast<Element>(std::countr_zero(b)));
      }
    }

    std::vector<Element> to_vector() const {
      std::vector<Element> out;
      out.reserve(size());
      for_each([&out](Element e) { out.push_back(e); });
      return out;
    }

    friend constexpr bool operator==(ElementSet, ElementSet) = default;

   private:
    std::uint64_t bits_ = 0;
  };

  // Order used for listing subobjects: by size, then lexicographically on the
  // sorted element indices.
  inline bool size_then_lex_less(ElementSet a, ElementSet b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.to_vector() < b.to_vector();
  }

}  // namespace gwa
