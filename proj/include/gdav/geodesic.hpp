#pragma once

// Directed geodesic atoms: a product-one sequence S is one when some g in
// supp(S) has l_{supp(S g^[-1])}(g^-1) = |S| - 1. This header builds them
// level by level (splittings of shorter representatives, filtered by the NG
// predicate over a support index), and reads GD(G), dcd*(G), Cayley
// digraph diameters and generation tests off the result.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "gdav/automorphisms.hpp"
#include "gdav/cayley.hpp"
#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"
#include "gdav/level_sets.hpp"
#include "gdav/parallel.hpp"
#include "gdav/product_one.hpp"
#include "gdav/sequence.hpp"
#include "gdav/structure.hpp"

namespace gdav {

/// Definitional test. Throws InputError when S is not product-one.
inline bool is_directed_geodesic_atom(const Group& g, const Sequence& s) {
  if (s.empty() || !is_product_one(g, s)) throw InputError("sequence is not a nonempty product-one sequence");
  for (const auto& e : s.entries()) {
    const auto dist = distances_from_identity(g, s.reduced_support(e.element));
    const auto& d = dist[g.inv(e.element)];
    if (d && *d == s.length() - 1) return true;
  }
  return false;
}

/// For each element g, the reduced supports supp(T g^[-1]) of recorded
/// directed geodesic atoms T through g, tagged with |T|. Each per-element
/// list is an antichain: no entry has a subset with length <= its own.
class GeoIndex {
 public:
  struct Witness {
    ElementSet reduced_support;
    std::size_t length = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
  };

  GeoIndex() = default;
  explicit GeoIndex(std::size_t order) : by_element_(order) {}

  std::size_t order() const { return by_element_.size(); }
  const std::vector<Witness>& witnesses(Element g) const { return by_element_.at(g); }

  void add(const Sequence& t) {
    for (const auto& e : t.entries()) insert(e.element, t.reduced_support(e.element), t.length());
  }

  /// Adds every member of one level (all of the same length).
  void add_level(std::size_t length, const std::vector<Sequence>& members) {
    std::vector<std::unordered_set<ElementSet>> fresh(by_element_.size());
    for (const auto& t : members)
      for (const auto& e : t.entries()) fresh[e.element].insert(t.reduced_support(e.element));
    for (std::size_t g = 0; g < fresh.size(); ++g) {
      std::vector<ElementSet> sets(fresh[g].begin(), fresh[g].end());
      std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      for (const auto& s : sets) insert(static_cast<Element>(g), s, length);
    }
  }

  /// Is there a recorded T through g with |T| < below_length and
  /// supp(T g^[-1]) contained in `within`?
  bool has_witness(Element g, const ElementSet& within, std::size_t below_length) const {
    for (const auto& w : by_element_[g])
      if (w.length < below_length && w.reduced_support.is_subset_of(within)) return true;
    return false;
  }

  static GeoIndex from_levels(std::size_t order, const LevelSets& levels) {
    GeoIndex index(order);
    for (std::size_t k = 1; k <= levels.closed_through(); ++k) index.add_level(k, levels.at(k).orbit_union);
    return index;
  }

  friend bool operator==(const GeoIndex&, const GeoIndex&) = default;

 private:
  void insert(Element g, const ElementSet& reduced, std::size_t length) {
    auto& list = by_element_[g];
    for (const auto& w : list)
      if (w.length <= length && w.reduced_support.is_subset_of(reduced)) return;
    std::erase_if(list, [&](const Witness& w) { return length <= w.length && reduced.is_subset_of(w.reduced_support); });
    list.push_back({reduced, length});
  }

  std::vector<std::vector<Witness>> by_element_;
};

/// NG(S'): every g in supp(S') has a recorded T with |T| < |S'|, g in supp(T)
/// and supp(T g^[-1]) inside supp(S' g^[-1]). For a product-one S' whose
/// shorter directed geodesic atoms are all recorded, this holds exactly when
/// S' is not a directed geodesic atom.
inline bool ng(const Sequence& s_prime, const GeoIndex& index) {
  for (const auto& e : s_prime.entries())
    if (!index.has_witness(e.element, s_prime.reduced_support(e.element), s_prime.length())) return false;
  return true;
}

struct GeodesicLevels {
  LevelSets levels;
  GeoIndex index;

  bool complete() const { return levels.complete(); }
  /// GD(G), the largest length of a directed geodesic atom.
  std::size_t gd() const {
    if (!levels.complete()) throw IncompleteError("geodesic level search is incomplete; GD(G) is unknown");
    return levels.max_length();
  }
};

/// All directed geodesic atoms, level by level, up to automorphism.
///
/// Level 1 is {1_G}. Level k candidates are splittings of level k-1
/// representatives; a canonical candidate is kept iff NG fails for it against
/// the index of all shorter levels. Stops at the first empty level (whose
/// length is GD(G) + 1), at opts.max_len (default |G| + 1) or when the
/// deadline expires between levels. A partial `resume` continues after its
/// last closed level.
inline GeodesicLevels geodesic_levels(const Group& g, const Automorphisms& aut, const SearchOptions& opts = {},
                                      LevelSets resume = {}) {
  GeodesicLevels out{std::move(resume), GeoIndex(g.order())};
  out.index = GeoIndex::from_levels(g.order(), out.levels);
  if (out.levels.complete()) return out;
  const std::size_t cap = opts.max_len.value_or(g.order() + 1);
  if (out.levels.levels.empty() && cap >= 1) {
    const Sequence one = Sequence::of({Element{0}});
    out.levels.levels.push_back(Level{{one}, {one}});
    out.index.add_level(1, out.levels.levels.back().orbit_union);
  }
  while (out.levels.closed_through() < cap) {
    if (opts.expired()) break;
    const std::size_t k = out.levels.closed_through() + 1;
    Level next = detail::expand_level(
        aut, out.levels.levels.back().reps, opts.threads,
        [&](const Sequence& s, std::vector<Sequence>& kids) {
          auto split = splittings(g, s);
          kids.insert(kids.end(), std::make_move_iterator(split.begin()), std::make_move_iterator(split.end()));
        },
        [&](const Sequence& c) { return !ng(c, out.index); });
    if (next.empty()) {
      out.levels.exhausted_at = k;
      break;
    }
    out.index.add_level(k, next.orbit_union);
    out.levels.levels.push_back(std::move(next));
  }
  return out;
}

/// dcd*(G): one less than the largest length of a directed geodesic atom
/// whose support generates G.
inline std::size_t dcd_star(const Group& g, const LevelSets& levels) {
  if (!levels.complete()) throw IncompleteError("geodesic levels are incomplete; dcd*(G) is unknown");
  for (std::size_t k = levels.max_length(); k >= 1; --k)
    for (const auto& s : levels.at(k).reps)
      if (generates(g, s.support())) return k - 1;
  throw InvariantError("no directed geodesic atom has a generating support");
}

/// Generation test read off the geodesic atoms: B generates G iff every g
/// lies in some recorded atom S with supp(S g^[-1]) inside B.
inline bool generates_via_ga(const Group& g, const ElementSet& b, const LevelSets& levels) {
  if (!levels.complete()) throw IncompleteError("geodesic levels are incomplete");
  ElementSet covered;
  for (const auto& level : levels.levels)
    for (const auto& s : level.orbit_union)
      for (const auto& e : s.entries())
        if (!covered.contains(e.element) && s.reduced_support(e.element).is_subset_of(b)) covered.insert(e.element);
  return covered.size() == g.order();
}

namespace detail {

/// For each g, the least |S| over recorded S with g in supp(S) and
/// supp(S g^[-1]) inside B; nullopt if there is none.
inline std::vector<std::optional<std::size_t>> shortest_through(const Group& g, const ElementSet& b, const LevelSets& levels) {
  std::vector<std::optional<std::size_t>> out(g.order());
  for (const auto& level : levels.levels)
    for (const auto& s : level.orbit_union)
      for (const auto& e : s.entries())
        if (!out[e.element] && s.reduced_support(e.element).is_subset_of(b)) out[e.element] = s.length();
  return out;
}

}  // namespace detail

/// diam Cay(G, B) read off the geodesic atoms. For every g the shortest
/// recorded S through g with supp(S g^[-1]) inside B has length
/// l_B(g^-1) + 1, so the diameter is the largest such length minus one.
///
/// For g outside B these are the minimal members of GA(G,B,g,1). Elements
/// of B are treated the same way instead of contributing all of GA(G,B,0):
/// that set can hold atoms longer than diam + 1 (see
/// diameter_via_ga_unrestricted).
inline std::size_t diameter_via_ga(const Group& g, const ElementSet& b, const LevelSets& levels) {
  if (!levels.complete()) throw IncompleteError("geodesic levels are incomplete");
  std::size_t longest = 0;
  for (const auto& len : detail::shortest_through(g, b, levels)) {
    if (!len) throw NotGeneratedError("B does not generate the group");
    longest = std::max(longest, *len);
  }
  return longest - 1;
}

/// max |S| over GA(G,B,0) (supports inside B) together with the minimal
/// members of GA(G,B,g,1) for g outside B, minus one. Agrees with
/// diameter_via_ga only when no atom supported in B is longer than
/// diam Cay(G, B) + 1; for B = G \ {1} in C_n it returns n - 1.
inline std::size_t diameter_via_ga_unrestricted(const Group& g, const ElementSet& b, const LevelSets& levels) {
  if (!generates_via_ga(g, b, levels)) throw NotGeneratedError("B does not generate the group");
  std::size_t longest = 0;
  for (const auto& level : levels.levels)
    for (const auto& s : level.orbit_union)
      if (s.support().is_subset_of(b)) longest = std::max(longest, s.length());
  const auto through = detail::shortest_through(g, b, levels);
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!b.contains(static_cast<Element>(x))) longest = std::max(longest, *through[x]);
  return longest - 1;
}

}  // namespace gdav
