#pragma once

// Definition-level reference computations for tests. Nothing here prunes by
// symmetry or reuses the level-wise engines; every routine is guard-railed
// so it cannot run for long.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gdav/cayley.hpp"
#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/geodesic.hpp"
#include "gdav/group.hpp"
#include "gdav/sequence.hpp"
#include "gdav/structure.hpp"

namespace gdav::oracle {

inline constexpr std::size_t kMaxSequenceOrder = 12;
inline constexpr std::size_t kMaxSequenceLength = 12;
inline constexpr std::size_t kMaxDiameterOrder = 16;

namespace detail {

inline void guard(bool ok, const std::string& what) {
  if (!ok) throw LimitError("oracle guard rail: " + what);
}

/// Products of all orderings of every subset of positions of `terms`,
/// indexed by position bitmask.
inline std::vector<ElementSet> position_products(const Group& g, const std::vector<Element>& terms) {
  const std::size_t len = terms.size();
  std::vector<ElementSet> sets(std::size_t{1} << len);
  sets[0].insert(0);
  for (std::size_t mask = 1; mask < sets.size(); ++mask)
    for (std::size_t i = 0; i < len; ++i)
      if (mask >> i & 1U) sets[mask ^ (std::size_t{1} << i)].for_each([&](Element p) { sets[mask].insert(g.mul(p, terms[i])); });
  return sets;
}

/// Calls f(terms) for every nondecreasing sequence of `length` elements of G.
inline void for_each_multiset(std::size_t order, std::size_t length, const std::function<void(const std::vector<Element>&)>& f) {
  std::vector<Element> terms(length, 0);
  while (true) {
    f(terms);
    std::size_t i = length;
    while (i > 0 && terms[i - 1] + 1u == order) --i;
    if (i == 0) return;
    const auto v = static_cast<Element>(terms[i - 1] + 1);
    for (std::size_t j = i - 1; j < length; ++j) terms[j] = v;
  }
}

inline bool is_product_one(const Group& g, const std::vector<Element>& terms) {
  return position_products(g, terms).back().contains(0);
}

inline bool is_atom(const Group& g, const std::vector<Element>& terms) {
  const auto sets = position_products(g, terms);
  const std::size_t full = sets.size() - 1;
  if (!sets[full].contains(0)) return false;
  for (std::size_t mask = 1; mask < full; ++mask)
    if (sets[mask].contains(0) && sets[full ^ mask].contains(0)) return false;
  return true;
}

inline bool is_product_one_free(const Group& g, const std::vector<Element>& terms) {
  const auto sets = position_products(g, terms);
  for (std::size_t mask = 1; mask < sets.size(); ++mask)
    if (sets[mask].contains(0)) return false;
  return true;
}

}  // namespace detail

/// All atoms of length at most L, by exhaustive enumeration of multisets.
inline std::vector<Sequence> brute_atoms(const Group& g, std::size_t max_len) {
  detail::guard(g.order() <= kMaxSequenceOrder, "|G| <= 12");
  detail::guard(max_len <= kMaxSequenceLength, "L <= 12");
  std::vector<Sequence> out;
  for (std::size_t len = 1; len <= max_len; ++len)
    detail::for_each_multiset(g.order(), len, [&](const std::vector<Element>& t) {
      if (detail::is_atom(g, t)) out.push_back(Sequence::of(t));
    });
  std::sort(out.begin(), out.end());
  return out;
}

/// All directed geodesic atoms of length at most L.
inline std::vector<Sequence> brute_geodesic_atoms(const Group& g, std::size_t max_len) {
  detail::guard(g.order() <= kMaxSequenceOrder, "|G| <= 12");
  detail::guard(max_len <= kMaxSequenceLength, "L <= 12");
  std::vector<Sequence> out;
  for (std::size_t len = 1; len <= max_len; ++len)
    detail::for_each_multiset(g.order(), len, [&](const std::vector<Element>& t) {
      if (!detail::is_product_one(g, t)) return;
      const Sequence s = Sequence::of(t);
      if (is_directed_geodesic_atom(g, s)) out.push_back(s);
    });
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest length of a product-one free sequence, by enumeration of every
/// multiset until a length admits none.
inline std::size_t brute_small_davenport(const Group& g) {
  detail::guard(g.order() <= kMaxSequenceOrder - 1, "|G| <= 11");
  std::size_t best = 0;
  for (std::size_t len = 1; len <= g.order(); ++len) {
    bool any = false;
    detail::for_each_multiset(g.order(), len, [&](const std::vector<Element>& t) {
      if (!any && detail::is_product_one_free(g, t)) any = true;
    });
    if (!any) break;
    best = len;
  }
  return best;
}

/// Largest length in a brute-force sequence list.
inline std::size_t longest(const std::vector<Sequence>& seqs) {
  std::size_t m = 0;
  for (const auto& s : seqs) m = std::max(m, s.length());
  return m;
}

/// D(G) from brute_atoms over lengths up to |G| + 1.
inline std::size_t brute_large_davenport(const Group& g) { return longest(brute_atoms(g, g.order() + 1)); }

/// GD(G) from brute_geodesic_atoms over lengths up to |G| + 1.
inline std::size_t brute_geodesic_davenport(const Group& g) { return longest(brute_geodesic_atoms(g, g.order() + 1)); }

/// dcd*(G) from brute_geodesic_atoms over lengths up to |G| + 1.
inline std::size_t brute_dcd_star(const Group& g) {
  std::size_t best = 0;
  for (const auto& s : brute_geodesic_atoms(g, g.order() + 1))
    if (generates(g, s.support())) best = std::max(best, s.length());
  return best - 1;
}

/// ddiam(G): the largest digraph diameter over every generating subset of
/// G \ {1}, with no pruning.
inline std::size_t brute_ddiam(const Group& g) {
  detail::guard(g.order() <= kMaxDiameterOrder, "|G| <= 16");
  const std::size_t n = g.order();
  if (n == 1) return 0;
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
    ElementSet b;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (mask >> i & 1U) b.insert(static_cast<Element>(i + 1));
    if (!generates(g, b)) continue;
    best = std::max(best, digraph_diameter(g, b));
  }
  return best;
}

/// Every subgroup, as the closures of all subsets, deduplicated and sorted.
inline std::vector<ElementSet> brute_subgroups(const Group& g) {
  detail::guard(g.order() <= kMaxDiameterOrder, "|G| <= 16");
  const std::size_t n = g.order();
  std::set<ElementSet> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    ElementSet b;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (mask >> i & 1U) b.insert(static_cast<Element>(i + 1));
    found.insert(subgroup_closure(g, b));
  }
  return {found.begin(), found.end()};
}

}  // namespace gdav::oracle
