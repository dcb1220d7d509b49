#pragma once

// Level-wise enumeration of the atoms of B(G) (large Davenport constant) and
// of product-one free sequences (small Davenport constant).

#include <cstddef>
#include <vector>

#include "gdav/automorphisms.hpp"
#include "gdav/canonical.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"
#include "gdav/level_sets.hpp"
#include "gdav/parallel.hpp"
#include "gdav/product_one.hpp"
#include "gdav/sequence.hpp"

namespace gdav {

/// Atoms of B(G) level by level, up to automorphism.
///
/// Level 1 is {1_G}; level k+1 consists of the splittings of level-k
/// representatives that are atoms. Stops at the first empty level, at
/// opts.max_len (default |G| + 1, one past the largest possible atom length)
/// or when the deadline expires between levels. A partial `resume` continues
/// after its last closed level.
inline LevelSets enumerate_atoms(const Group& g, const Automorphisms& aut, const SearchOptions& opts = {},
                                 LevelSets resume = {}) {
  LevelSets out = std::move(resume);
  if (out.complete()) return out;
  const std::size_t cap = opts.max_len.value_or(g.order() + 1);
  if (out.levels.empty() && cap >= 1) {
    const Sequence one = Sequence::of({Element{0}});
    out.levels.push_back(Level{{one}, {one}});
  }
  while (out.closed_through() < cap) {
    if (opts.expired()) break;
    Level next = detail::expand_level(
        aut, out.levels.back().reps, opts.threads,
        [&](const Sequence& s, std::vector<Sequence>& kids) {
          auto split = splittings(g, s);
          kids.insert(kids.end(), std::make_move_iterator(split.begin()), std::make_move_iterator(split.end()));
        },
        [&](const Sequence& c) { return is_atom(g, c); });
    if (next.empty()) {
      out.exhausted_at = out.closed_through() + 1;
      break;
    }
    out.levels.push_back(std::move(next));
  }
  return out;
}

/// D(G): the largest atom length, certified by the first empty level.
inline std::size_t large_davenport(const LevelSets& atom_levels) {
  if (!atom_levels.complete()) throw IncompleteError("atom enumeration is incomplete; D(G) is unknown");
  return atom_levels.max_length();
}

/// Product-one free sequences level by level, up to automorphism
/// (representatives only). Level 1 holds the nonidentity singletons; level
/// k+1 extends level-k representatives by one nonidentity element. Default
/// cap is |G|, one past the longest possible product-one free sequence.
inline LevelSets product_one_free_levels(const Group& g, const Automorphisms& aut, const SearchOptions& opts = {}) {
  LevelSets out;
  const std::size_t cap = opts.max_len.value_or(g.order());
  const auto extend = [&](const Sequence& s, std::vector<Sequence>& kids) {
    for (std::size_t x = 1; x < g.order(); ++x) kids.push_back(s.with(static_cast<Element>(x)));
  };
  const auto accept = [&](const Sequence& c) { return is_product_one_free(g, c); };
  std::vector<Sequence> seed{Sequence{}};
  while (out.closed_through() < cap) {
    if (out.closed_through() > 0 && opts.expired()) break;
    const auto& from = out.levels.empty() ? seed : out.levels.back().reps;
    Level next = detail::expand_level(aut, from, opts.threads, extend, accept, /*with_orbits=*/false);
    if (next.empty()) {
      out.exhausted_at = out.closed_through() + 1;
      break;
    }
    out.levels.push_back(std::move(next));
  }
  return out;
}

/// d(G): the largest length of a product-one free sequence.
inline std::size_t small_davenport(const Group& g, const Automorphisms& aut, const SearchOptions& opts = {}) {
  const LevelSets levels = product_one_free_levels(g, aut, opts);
  if (!levels.complete()) throw IncompleteError("product-one free search is incomplete; d(G) is unknown");
  return levels.max_length();
}

}  // namespace gdav
