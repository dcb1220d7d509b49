#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace gdav {

/// Index of a group element. The identity is always 0.
using Element = std::uint16_t;

/// Largest group order the engine accepts. Element sets are fixed-width
/// bitsets of this many bits.
inline constexpr std::size_t kMaxOrder = 256;

/// A subset of {0, ..., kMaxOrder - 1} stored as a fixed-width bitset.
class ElementSet {
 public:
  static constexpr std::size_t kWords = kMaxOrder / 64;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }
  template <typename Range>
  static ElementSet of(const Range& elements) {
    ElementSet s;
    for (auto e : elements) s.insert(static_cast<Element>(e));
    return s;
  }
  /// {0, ..., n - 1}
  static ElementSet all(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Calls f(e) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Orders sets by their sorted member lists (lexicographically).
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    std::size_t w = 0;
    while (w < kWords && a.words_[w] == b.words_[w]) ++w;
    if (w == kWords) return std::strong_ordering::equal;
    // x is the least element in exactly one of the sets; the set lacking it
    // is the smaller one only if it has nothing beyond x.
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    const std::uint64_t low = diff & (~diff + 1);
    const bool a_has_x = (a.words_[w] & low) != 0;
    const ElementSet& lacking = a_has_x ? b : a;
    bool beyond = (lacking.words_[w] & ~(low | (low - 1))) != 0;
    for (std::size_t v = w + 1; v < kWords && !beyond; ++v) beyond = lacking.words_[v] != 0;
    const bool a_less = a_has_x == beyond;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace gdav

template <>
struct std::hash<gdav::ElementSet> {
  std::size_t operator()(const gdav::ElementSet& s) const noexcept {
    std::size_t h = 0;
    for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};
