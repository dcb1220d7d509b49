#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"
#include "gdav/structure.hpp"

namespace gdav {

/// Default largest group order for which automorphisms are computed.
inline constexpr std::size_t kDefaultAutomorphismCap = 64;

/// The automorphism group of a Group, as a list of element permutations.
/// perms[0] is always the identity map.
struct Automorphisms {
  std::size_t group_order = 0;
  std::vector<std::vector<Element>> perms;

  std::size_t size() const { return perms.size(); }

  /// The trivial automorphism group of a group of order n.
  static Automorphisms trivial(std::size_t n) {
    std::vector<Element> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Element>(i);
    return {n, {id}};
  }
};

namespace detail {

/// A short generating tuple, built greedily from elements of largest order
/// outside the current closure.
inline std::vector<Element> greedy_generators(const Group& g) {
  std::vector<Element> gens;
  ElementSet closure = subgroup_closure(g, {});
  while (closure.size() < g.order()) {
    Element best = 0;
    std::size_t best_order = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto e = static_cast<Element>(x);
      if (!closure.contains(e) && g.elem_order(e) > best_order) {
        best = e;
        best_order = g.elem_order(e);
      }
    }
    gens.push_back(best);
    closure = subgroup_closure(g, ElementSet::of(gens));
  }
  return gens;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Group& g) : g_(g), gens_(greedy_generators(g)), images_(gens_.size()) {}

  std::vector<std::vector<Element>> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  static constexpr int kUnset = -1;

  /// Propagates the images of gens_[0..depth] through <gens_[0..depth]>.
  /// Fails on an inconsistency or a collision of images.
  bool propagate(std::size_t depth, std::vector<int>& phi) const {
    const std::size_t n = g_.order();
    phi.assign(n, kUnset);
    std::vector<bool> used(n, false);
    phi[0] = 0;
    used[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (std::size_t i = 0; i <= depth; ++i) {
        const Element y = g_.mul(x, gens_[i]);
        const auto image = static_cast<int>(g_.mul(static_cast<Element>(phi[x]), images_[i]));
        if (phi[y] == kUnset) {
          if (used[static_cast<std::size_t>(image)]) return false;
          used[static_cast<std::size_t>(image)] = true;
          phi[y] = image;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == gens_.size()) {
      std::vector<int> phi;
      if (gens_.empty()) {
        phi.assign(1, 0);
      } else if (!propagate(depth - 1, phi)) {
        return;
      }
      std::vector<Element> perm(phi.begin(), phi.end());
      found_.push_back(std::move(perm));
      return;
    }
    std::vector<int> phi;
    for (std::size_t c = 1; c < g_.order(); ++c) {
      const auto candidate = static_cast<Element>(c);
      if (g_.elem_order(candidate) != g_.elem_order(gens_[depth])) continue;
      images_[depth] = candidate;
      if (!propagate(depth, phi)) continue;
      extend(depth + 1);
    }
  }

  const Group& g_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<std::vector<Element>> found_;
};

}  // namespace detail

/// Every automorphism of `g`, exactly once, sorted with the identity first.
///
/// Images of a greedy generating tuple are chosen by backtracking among
/// elements of matching order; each partial assignment is propagated through
/// the subgroup it generates and rejected on any inconsistency.
inline Automorphisms automorphisms(const Group& g, std::size_t order_cap = kDefaultAutomorphismCap) {
  if (g.order() > order_cap)
    throw LimitError("automorphism search is capped at order " + std::to_string(order_cap) + " (group has order " +
                     std::to_string(g.order()) + ")");
  return {g.order(), detail::AutomorphismSearch(g).run()};
}

/// True iff `perm` is an automorphism of `g`.
inline bool is_automorphism(const Group& g, const std::vector<Element>& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element e : perm) {
    if (e >= n || hit[e]) return false;
    hit[e] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = static_cast<Element>(i), b = static_cast<Element>(j);
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
    }
  return true;
}

}  // namespace gdav
