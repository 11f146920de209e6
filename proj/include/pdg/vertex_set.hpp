#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pdg {

/// Set of small non-negative indices (vertices or facets) packed into one word.
/// All polytopes handled here have at most 64 vertices and 64 facets.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> items) {
    VertexSet s;
    for (int i : items) s.insert(i);
    return s;
  }
  template <class Range>
  static VertexSet from(const Range& items) {
    VertexSet s;
    for (int i : items) s.insert(static_cast<int>(i));
    return s;
  }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Ascending member list.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  /// Lexicographic order on ascending member lists.
  static bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace pdg

template <>
struct std::hash<pdg::VertexSet> {
  std::size_t operator()(pdg::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
