#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hfw/combinatorics.hpp"

namespace hfw {

/// Fixed-capacity vertex bitmask holding up to 64 * Words vertices.
template <std::size_t Words>
class BasicVertexSet {
 public:
  static constexpr std::uint32_t capacity = static_cast<std::uint32_t>(64 * Words);

  constexpr BasicVertexSet() = default;

  constexpr BasicVertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// {0, ..., n-1}.
  static constexpr BasicVertexSet prefix(std::uint32_t n) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words; ++w) {
      const std::uint32_t lo = static_cast<std::uint32_t>(64 * w);
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static constexpr BasicVertexSet singleton(Vertex v) {
    BasicVertexSet s;
    s.insert(v);
    return s;
  }

  template <std::size_t Other>
  static constexpr BasicVertexSet convert(const BasicVertexSet<Other>& other) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words && w < Other; ++w) s.words_[w] = other.word(w);
    return s;
  }

  constexpr void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  constexpr bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  constexpr bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  constexpr std::uint32_t size() const {
    std::uint32_t total = 0;
    for (auto w : words_) total += static_cast<std::uint32_t>(std::popcount(w));
    return total;
  }

  /// Smallest member; undefined on the empty set.
  constexpr Vertex first() const {
    for (std::size_t w = 0; w < Words; ++w) {
      if (words_[w] != 0) return static_cast<Vertex>(64 * w + std::countr_zero(words_[w]));
    }
    return capacity;
  }

  constexpr Vertex pop_first() {
    const Vertex v = first();
    erase(v);
    return v;
  }

  constexpr bool is_subset_of(const BasicVertexSet& other) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  constexpr bool intersects(const BasicVertexSet& other) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
  }

  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

  /// Orders by sorted member list, lexicographically.
  friend bool operator<(const BasicVertexSet& a, const BasicVertexSet& b) {
    BasicVertexSet x = a, y = b;
    while (!x.empty() && !y.empty()) {
      const Vertex u = x.pop_first(), v = y.pop_first();
      if (u != v) return u < v;
    }
    return x.empty() && !y.empty();
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(static_cast<Vertex>(64 * w + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(64 * w + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }

 private:
  std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicVertexSet<(kMaxVertices + 63) / 64>;
using SmallVertexSet = BasicVertexSet<1>;

}  // namespace hfw
