#pragma once

#include <algorithm>
#include <vector>

#include "gdav/automorphisms.hpp"
#include "gdav/element_set.hpp"
#include "gdav/sequence.hpp"

namespace gdav {

/// alpha(S)
inline Sequence apply(const std::vector<Element>& alpha, const Sequence& s) {
  std::vector<Entry> img;
  img.reserve(s.entries().size());
  for (const auto& e : s.entries()) img.push_back({alpha[e.element], e.multiplicity});
  std::sort(img.begin(), img.end());
  return Sequence::from_entries(std::move(img));
}

/// The lexicographically least member of the Aut-orbit of S.
inline Sequence canonical_rep(const Automorphisms& aut, const Sequence& s) {
  const auto& src = s.entries();
  std::vector<Entry> best = src;
  std::vector<Entry> img(src.size());
  for (const auto& alpha : aut.perms) {
    for (std::size_t i = 0; i < src.size(); ++i) img[i] = {alpha[src[i].element], src[i].multiplicity};
    std::sort(img.begin(), img.end());
    if (img < best) best.swap(img);
  }
  return Sequence::from_entries(std::move(best));
}

/// The Aut-orbit of S, sorted.
inline std::vector<Sequence> orbit(const Automorphisms& aut, const Sequence& s) {
  std::vector<Sequence> out;
  out.reserve(aut.size());
  for (const auto& alpha : aut.perms) out.push_back(gdav::apply(alpha, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// alpha(X)
inline ElementSet apply(const std::vector<Element>& alpha, const ElementSet& x) {
  ElementSet out;
  x.for_each([&](Element e) { out.insert(alpha[e]); });
  return out;
}

/// The Aut-image of X whose sorted member list is lexicographically least.
inline ElementSet canonical_set(const Automorphisms& aut, const ElementSet& x) {
  const auto members = x.to_vector();
  std::vector<Element> best = members;
  std::vector<Element> img(members.size());
  for (const auto& alpha : aut.perms) {
    for (std::size_t i = 0; i < members.size(); ++i) img[i] = alpha[members[i]];
    std::sort(img.begin(), img.end());
    if (img < best) best.swap(img);
  }
  return ElementSet::of(best);
}

}  // namespace gdav
