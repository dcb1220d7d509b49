#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"
#include "gdav/sequence.hpp"

namespace gdav {

namespace detail {

/// Largest number of sub-multisets a single predicate call will index.
inline constexpr std::size_t kMaxLatticeStates = std::size_t{1} << 22;

/// Sub-multisets of a sequence indexed in mixed radix: digit i counts the
/// copies of entries[i] taken, with radix multiplicity+1. Removing one copy
/// of entry i subtracts stride[i]; the complement of index t is total-1-t.
struct SubsequenceLattice {
  std::vector<Element> elements;
  std::vector<std::size_t> radix;
  std::vector<std::size_t> stride;
  std::size_t states = 1;

  explicit SubsequenceLattice(const Sequence& s) {
    for (const auto& e : s.entries()) {
      elements.push_back(e.element);
      radix.push_back(std::size_t{e.multiplicity} + 1);
      stride.push_back(states);
      if (states > kMaxLatticeStates / radix.back())
        throw LimitError("sequence has too many sub-multisets for exact product-one search (" + s.to_string() + ")");
      states *= radix.back();
    }
  }

  std::size_t full() const { return states - 1; }

  /// Calls f(index, digits) for index = 1 .. states-1 in increasing order.
  template <typename F>
  void for_each_nonempty(F&& f) const {
    std::vector<std::size_t> digits(radix.size(), 0);
    for (std::size_t idx = 1; idx < states; ++idx) {
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < radix[i]) break;
        digits[i] = 0;
      }
      if (!f(idx, digits)) return;
    }
  }
};

inline ElementSet right_multiply(const Group& g, const ElementSet& set, Element x) {
  ElementSet out;
  set.for_each([&](Element p) { out.insert(g.mul(p, x)); });
  return out;
}

/// Π(T) for every sub-multiset T, where Π(T) is the set of products of all
/// orderings of T. Stops early (returning false) as soon as `keep_going`
/// returns false for some index.
template <typename Visit>
bool fill_product_sets(const Group& g, const SubsequenceLattice& lat, std::vector<ElementSet>& sets, Visit&& keep_going) {
  sets.assign(lat.states, ElementSet{});
  sets[0].insert(0);
  bool completed = true;
  lat.for_each_nonempty([&](std::size_t idx, const std::vector<std::size_t>& digits) {
    ElementSet acc;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] > 0) acc |= right_multiply(g, sets[idx - lat.stride[i]], lat.elements[i]);
    sets[idx] = acc;
    if (!keep_going(idx)) {
      completed = false;
      return false;
    }
    return true;
  });
  return completed;
}

/// For abelian groups every ordering has the same product: sum[T].
template <typename Visit>
bool fill_sums(const Group& g, const SubsequenceLattice& lat, std::vector<Element>& sums, Visit&& keep_going) {
  sums.assign(lat.states, 0);
  bool completed = true;
  lat.for_each_nonempty([&](std::size_t idx, const std::vector<std::size_t>& digits) {
    std::size_t i = 0;
    while (digits[i] == 0) ++i;
    sums[idx] = g.mul(sums[idx - lat.stride[i]], lat.elements[i]);
    if (!keep_going(idx)) {
      completed = false;
      return false;
    }
    return true;
  });
  return completed;
}

}  // namespace detail

/// True iff some ordering of S multiplies to the identity.
///
/// Depth-first search over (remaining sub-multiset, prefix product) states
/// with a visited memo; abelian groups reduce to a single sum.
inline bool is_product_one(const Group& g, const Sequence& s) {
  if (g.is_abelian()) {
    Element sum = 0;
    for (const auto& e : s.entries()) sum = g.mul(sum, g.power(e.element, e.multiplicity));
    return sum == 0;
  }
  const detail::SubsequenceLattice lat(s);
  const std::size_t n = g.order();
  std::unordered_set<std::size_t> visited;
  std::vector<std::pair<std::size_t, Element>> stack{{lat.full(), Element{0}}};
  visited.insert(lat.full() * n);
  while (!stack.empty()) {
    const auto [remaining, product] = stack.back();
    stack.pop_back();
    if (remaining == 0) {
      if (product == 0) return true;
      continue;
    }
    std::size_t rest = remaining;
    for (std::size_t i = 0; i < lat.radix.size(); ++i) {
      const std::size_t digit = rest % lat.radix[i];
      rest /= lat.radix[i];
      if (digit == 0) continue;
      const std::size_t next = remaining - lat.stride[i];
      const Element p = g.mul(product, lat.elements[i]);
      if (visited.insert(next * n + p).second) stack.emplace_back(next, p);
    }
  }
  return false;
}

/// True iff no nonempty sub-multiset of S is product-one.
inline bool is_product_one_free(const Group& g, const Sequence& s) {
  if (s.contains(0)) return false;
  const detail::SubsequenceLattice lat(s);
  if (g.is_abelian()) {
    std::vector<Element> sums;
    return detail::fill_sums(g, lat, sums, [&](std::size_t idx) { return sums[idx] != 0; });
  }
  std::vector<ElementSet> sets;
  return detail::fill_product_sets(g, lat, sets, [&](std::size_t idx) { return !sets[idx].contains(0); });
}

/// True iff S is product-one and admits no factorization S = T * U into two
/// nonempty product-one sequences.
inline bool is_atom(const Group& g, const Sequence& s) {
  if (s.empty()) return false;
  const detail::SubsequenceLattice lat(s);
  const std::size_t full = lat.full();
  if (g.is_abelian()) {
    std::vector<Element> sums;
    // A proper nonempty zero-sum T has a zero-sum complement iff S is zero-sum.
    const bool no_proper_zero_sum =
        detail::fill_sums(g, lat, sums, [&](std::size_t idx) { return idx == full || sums[idx] != 0; });
    return no_proper_zero_sum && sums[full] == 0;
  }
  std::vector<ElementSet> sets;
  detail::fill_product_sets(g, lat, sets, [](std::size_t) { return true; });
  if (!sets[full].contains(0)) return false;
  for (std::size_t idx = 1; idx < full; ++idx)
    if (sets[idx].contains(0) && sets[full - idx].contains(0)) return false;
  return true;
}

/// All splittings S * g^[-1] * x * (x^-1 g) with g in supp(S) and
/// x not in {1, g}; sorted and deduplicated.
inline std::vector<Sequence> splittings(const Group& g, const Sequence& s) {
  std::vector<Sequence> out;
  for (const auto& entry : s.entries()) {
    const Element h = entry.element;
    const Sequence base = s.without(h);
    for (std::size_t xi = 1; xi < g.order(); ++xi) {
      const auto x = static_cast<Element>(xi);
      if (x == h) continue;
      Sequence t = base;
      t.add(x);
      t.add(g.mul(g.inv(x), h));
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gdav
