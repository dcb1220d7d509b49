#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"

namespace gdav {

using Multiplicity = std::uint16_t;

struct Entry {
  Element element = 0;
  Multiplicity multiplicity = 0;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// A sequence over a group: a finite multiset of elements, stored as entries
/// sorted by element with positive multiplicities. Ordering of sequences is
/// lexicographic on the entry lists.
class Sequence {
 public:
  Sequence() = default;

  /// Builds the multiset of `elements` (any order, repetitions allowed).
  static Sequence of(std::span<const Element> elements) {
    std::vector<Element> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    Sequence s;
    for (Element e : sorted) {
      if (!s.entries_.empty() && s.entries_.back().element == e) {
        ++s.entries_.back().multiplicity;
      } else {
        s.entries_.push_back({e, 1});
      }
    }
    s.length_ = sorted.size();
    return s;
  }
  static Sequence of(std::initializer_list<Element> elements) {
    return of(std::span<const Element>(elements.begin(), elements.size()));
  }

  /// Entries must have strictly increasing elements and positive multiplicities.
  static Sequence from_entries(std::vector<Entry> entries) {
    Sequence s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].multiplicity == 0) throw InputError("sequence entry with zero multiplicity");
      if (i > 0 && entries[i - 1].element >= entries[i].element)
        throw InputError("sequence entries are not strictly increasing");
      s.length_ += entries[i].multiplicity;
    }
    s.entries_ = std::move(entries);
    return s;
  }

  /// g^[m]
  static Sequence power(Element g, Multiplicity m) {
    if (m == 0) return {};
    return from_entries({{g, m}});
  }

  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// v_g(S)
  std::size_t multiplicity(Element g) const {
    auto it = find(g);
    return it != entries_.end() && it->element == g ? it->multiplicity : 0;
  }
  bool contains(Element g) const { return multiplicity(g) > 0; }

  ElementSet support() const {
    ElementSet s;
    for (const auto& e : entries_) s.insert(e.element);
    return s;
  }

  /// supp(S * g^[-1]); g stays in the result when v_g(S) > 1.
  ElementSet reduced_support(Element g) const {
    ElementSet s;
    for (const auto& e : entries_)
      if (e.element != g || e.multiplicity > 1) s.insert(e.element);
    return s;
  }

  /// S * g
  Sequence with(Element g) const {
    Sequence s = *this;
    s.add(g);
    return s;
  }

  /// S * g^[-1]; g must be in the support.
  Sequence without(Element g) const {
    Sequence s = *this;
    s.remove(g);
    return s;
  }

  void add(Element g, Multiplicity m = 1) {
    if (m == 0) return;
    auto it = find(g);
    if (it != entries_.end() && it->element == g) {
      it->multiplicity = static_cast<Multiplicity>(it->multiplicity + m);
    } else {
      entries_.insert(it, Entry{g, m});
    }
    length_ += m;
  }

  void remove(Element g) {
    auto it = find(g);
    if (it == entries_.end() || it->element != g) throw InputError("element not in the support of the sequence");
    if (--it->multiplicity == 0) entries_.erase(it);
    --length_;
  }

  /// Concatenation S * T.
  friend Sequence operator*(const Sequence& s, const Sequence& t) {
    Sequence r = s;
    for (const auto& e : t.entries_) r.add(e.element, e.multiplicity);
    return r;
  }

  /// Terms in increasing order, with repetitions.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(length_);
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.element);
    return out;
  }

  /// T <= S as multisets.
  bool divides(const Sequence& s) const {
    for (const auto& e : entries_)
      if (s.multiplicity(e.element) < e.multiplicity) return false;
    return true;
  }

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) { return a.entries_ <=> b.entries_; }

  /// "index^multiplicity" pairs joined by commas, e.g. "3^2,5^1".
  std::string to_string() const {
    std::string out;
    for (const auto& e : entries_) {
      if (!out.empty()) out += ',';
      out += std::to_string(e.element);
      out += '^';
      out += std::to_string(e.multiplicity);
    }
    return out;
  }

  static Sequence parse(std::string_view text) {
    std::vector<Entry> entries;
    if (text.empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const auto caret = item.find('^');
      if (caret == std::string_view::npos) throw InputError("malformed sequence item '" + std::string(item) + "'");
      auto number = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 6 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw InputError("malformed sequence item '" + std::string(item) + "'");
        return static_cast<std::size_t>(std::stoul(std::string(digits)));
      };
      const std::size_t element = number(item.substr(0, caret));
      const std::size_t mult = number(item.substr(caret + 1));
      if (element >= kMaxOrder || mult > 0xFFFF) throw InputError("sequence item out of range");
      entries.push_back({static_cast<Element>(element), static_cast<Multiplicity>(mult)});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return from_entries(std::move(entries));
  }

 private:
  std::vector<Entry>::iterator find(Element g) {
    return std::lower_bound(entries_.begin(), entries_.end(), g,
                            [](const Entry& e, Element x) { return e.element < x; });
  }
  std::vector<Entry>::const_iterator find(Element g) const {
    return std::lower_bound(entries_.begin(), entries_.end(), g,
                            [](const Entry& e, Element x) { return e.element < x; });
  }

  std::vector<Entry> entries_;
  std::size_t length_ = 0;
};

}  // namespace gdav

template <>
struct std::hash<gdav::Sequence> {
  std::size_t operator()(const gdav::Sequence& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& e : s.entries()) {
      h ^= (std::size_t{e.element} << 16) | e.multiplicity;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
