#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "gdav/automorphisms.hpp"
#include "gdav/canonical.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"
#include "gdav/parallel.hpp"
#include "gdav/sequence.hpp"

namespace gdav {

/// One length of a level-wise search: canonical orbit representatives and the
/// union of their orbits, both sorted.
struct Level {
  std::vector<Sequence> reps;
  std::vector<Sequence> orbit_union;

  bool empty() const { return reps.empty(); }
  friend bool operator==(const Level&, const Level&) = default;
};

/// Per-length search levels. levels[k-1] holds the sequences of length k.
/// `exhausted_at` is the first empty length, once it has been reached; it is
/// the certificate that no longer members exist.
struct LevelSets {
  std::vector<Level> levels;
  std::optional<std::size_t> exhausted_at;

  bool complete() const { return exhausted_at.has_value(); }
  /// Largest length whose level has been closed.
  std::size_t closed_through() const { return levels.size(); }
  const Level& at(std::size_t length) const { return levels.at(length - 1); }

  /// Largest length of a member; requires a complete search.
  std::size_t max_length() const {
    if (!exhausted_at) throw IncompleteError("level search stopped before reaching an empty level");
    return *exhausted_at - 1;
  }

  friend bool operator==(const LevelSets&, const LevelSets&) = default;
};

namespace detail {

/// Union of the orbits of `reps` (disjoint by construction), sorted.
inline std::vector<Sequence> orbit_union_of(const Automorphisms& aut, const std::vector<Sequence>& reps, unsigned threads) {
  std::vector<std::vector<Sequence>> orbits(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t, std::size_t i) { orbits[i] = orbit(aut, reps[i]); });
  std::vector<Sequence> out;
  for (auto& o : orbits) out.insert(out.end(), std::make_move_iterator(o.begin()), std::make_move_iterator(o.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// One level step: children of every representative are canonicalized and
/// deduplicated, then kept iff `accept(candidate)`. Both callbacks must be
/// pure so the result does not depend on scheduling.
///
/// children(rep, out) appends the children of rep to out. Orbit unions are
/// skipped when `with_orbits` is false.
template <typename Children, typename Accept>
Level expand_level(const Automorphisms& aut, const std::vector<Sequence>& reps, unsigned threads, Children&& children,
                   Accept&& accept, bool with_orbits = true) {
  const unsigned workers = worker_count(threads, reps.size());
  std::vector<std::unordered_set<Sequence>> local_raw(workers);
  std::vector<std::unordered_set<Sequence>> local_canon(workers);
  parallel_for(reps.size(), workers, [&](std::size_t w, std::size_t i) {
    std::vector<Sequence> kids;
    children(reps[i], kids);
    for (auto& k : kids) {
      if (!local_raw[w].insert(k).second) continue;
      local_canon[w].insert(canonical_rep(aut, k));
    }
  });
  local_raw.clear();

  std::unordered_set<Sequence> merged;
  for (auto& s : local_canon) {
    merged.merge(s);
    s.clear();
  }
  std::vector<Sequence> candidates(merged.begin(), merged.end());
  merged.clear();
  std::sort(candidates.begin(), candidates.end());

  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), threads, [&](std::size_t, std::size_t i) { keep[i] = accept(candidates[i]) ? 1 : 0; });

  Level level;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) level.reps.push_back(std::move(candidates[i]));
  if (with_orbits) level.orbit_union = orbit_union_of(aut, level.reps, threads);
  return level;
}

}  // namespace detail

}  // namespace gdav
