#pragma once

// Directed Cayley digraphs: word lengths, digraph diameters, irredundant
// generating systems up to automorphism, and the directed Cayley diameter.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdav/automorphisms.hpp"
#include "gdav/canonical.hpp"
#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"
#include "gdav/parallel.hpp"
#include "gdav/structure.hpp"

namespace gdav {

/// Distances from the identity in Cay(<B>, B) along edges x -> x b.
/// Entries outside <B> are nullopt.
inline std::vector<std::optional<std::size_t>> distances_from_identity(const Group& g, const ElementSet& b) {
  const auto gens = b.to_vector();
  std::vector<std::optional<std::size_t>> dist(g.order());
  dist[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

/// l_B(target): the least number of factors from B with product `target`.
inline std::size_t word_length(const Group& g, const ElementSet& b, Element target) {
  const auto dist = distances_from_identity(g, b);
  if (!dist.at(target)) throw NotGeneratedError("element " + std::to_string(target) + " is not in the subgroup generated by B");
  return *dist[target];
}

/// diam Cay(G, B), from a single breadth-first search at the identity.
inline std::size_t digraph_diameter(const Group& g, const ElementSet& b) {
  std::size_t diameter = 0;
  for (const auto& d : distances_from_identity(g, b)) {
    if (!d) throw NotGeneratedError("B does not generate the group");
    diameter = std::max(diameter, *d);
  }
  return diameter;
}

/// True iff no element of B lies in the subgroup generated by the others.
inline bool is_irredundant(const Group& g, const ElementSet& b) {
  const ElementSet closure = subgroup_closure(g, b);
  bool ok = true;
  b.for_each([&](Element x) {
    if (!ok) return;
    ElementSet rest = b;
    rest.erase(x);
    if (subgroup_closure(g, rest) == closure) ok = false;
  });
  return ok;
}

/// A subset of the group with its closure and irredundancy flag.
struct GeneratingSet {
  ElementSet elements;
  ElementSet closure;
  bool irredundant = false;

  static GeneratingSet of(const Group& g, const ElementSet& b) {
    return {b, subgroup_closure(g, b), is_irredundant(g, b)};
  }
};

/// Calls visit(B) once per Aut-orbit of irredundant generating sets of G,
/// with B the canonical (lexicographically least) member of its orbit.
///
/// Sets are grown one element at a time, only by elements outside the
/// current closure, and deduplicated up to automorphism at every size.
/// Returns false if the deadline in `opts` expired before the enumeration
/// finished.
template <typename Visit>
bool irredundant_generating_sets(const Group& g, const Automorphisms& aut, Visit&& visit, const SearchOptions& opts = {}) {
  const std::size_t n = g.order();
  std::set<ElementSet> current{ElementSet{}};
  while (!current.empty()) {
    if (opts.expired()) return false;
    std::set<ElementSet> next;
    for (const auto& b : current) {
      const ElementSet closure = subgroup_closure(g, b);
      if (closure.size() == n) {
        if (is_irredundant(g, b)) visit(b);
        continue;
      }
      for (std::size_t xi = 1; xi < n; ++xi) {
        const auto x = static_cast<Element>(xi);
        if (closure.contains(x)) continue;
        ElementSet child = b;
        child.insert(x);
        next.insert(canonical_set(aut, child));
      }
    }
    current = std::move(next);
  }
  return true;
}

inline std::vector<ElementSet> irredundant_generating_sets(const Group& g, const Automorphisms& aut) {
  std::vector<ElementSet> out;
  irredundant_generating_sets(g, aut, [&](const ElementSet& b) { out.push_back(b); });
  return out;
}

/// ddiam(G): the largest diam Cay(G, B) over generating sets B. Removing
/// elements never shrinks a diameter, so irredundant sets up to automorphism
/// suffice.
inline std::size_t directed_cayley_diameter(const Group& g, const Automorphisms& aut, const SearchOptions& opts = {}) {
  std::vector<ElementSet> reps;
  if (!irredundant_generating_sets(g, aut, [&](const ElementSet& b) { reps.push_back(b); }, opts))
    throw IncompleteError("directed Cayley diameter search timed out");
  std::vector<std::size_t> diameters(reps.size(), 0);
  parallel_for(reps.size(), opts.threads, [&](std::size_t, std::size_t i) { diameters[i] = digraph_diameter(g, reps[i]); });
  return diameters.empty() ? 0 : *std::max_element(diameters.begin(), diameters.end());
}

}  // namespace gdav
