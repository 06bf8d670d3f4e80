#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace endolat {

using Element = int;
inline constexpr Element kNone = -1;

// Lattices are capped at 64 elements so that every element set fits one word.
inline constexpr int kMaxElements = 64;

class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : _bits(bits) {}
  ElementSet(std::initializer_list<Element> xs) {
    for (Element x : xs) insert(x);
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : ((std::uint64_t{1} << n) - 1));
  }

  constexpr bool contains(Element x) const {
    return (_bits >> x) & std::uint64_t{1};
  }
  constexpr void insert(Element x) { _bits |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { _bits &= ~(std::uint64_t{1} << x); }

  constexpr bool empty() const { return _bits == 0; }
  constexpr int size() const { return std::popcount(_bits); }
  constexpr std::uint64_t bits() const { return _bits; }

  // Smallest member, or kNone.
  constexpr Element first() const {
    return _bits == 0 ? kNone : std::countr_zero(_bits);
  }

  constexpr bool is_subset_of(ElementSet other) const {
    return (_bits & ~other._bits) == 0;
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(_bits | o._bits);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(_bits & o._bits);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(_bits & ~o._bits);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    _bits |= o._bits;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    _bits &= o._bits;
    return *this;
  }
  // Complement relative to a universe of n elements.
  constexpr ElementSet complement(int n) const {
    return ElementSet(~_bits & full(n)._bits);
  }

  constexpr bool operator==(ElementSet const&) const = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t bits) : _rest(bits) {}
    constexpr Element operator*() const { return std::countr_zero(_rest); }
    constexpr iterator& operator++() {
      _rest &= _rest - 1;
      return *this;
    }
    constexpr bool operator!=(iterator const& o) const {
      return _rest != o._rest;
    }
    constexpr bool operator==(iterator const& o) const {
      return _rest == o._rest;
    }

   private:
    std::uint64_t _rest;
  };

  constexpr iterator begin() const { return iterator(_bits); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Element x : *this) out.push_back(x);
    return out;
  }

 private:
  std::uint64_t _bits = 0;
};

}  // namespace endolat
