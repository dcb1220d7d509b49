#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "gdav/gdav.hpp"

namespace gdav {

inline void PrintTo(const ElementSet& s, std::ostream* os) {
  *os << '{';
  bool first = true;
  s.for_each([&](Element e) {
    *os << (first ? "" : ",") << e;
    first = false;
  });
  *os << '}';
}

inline void PrintTo(const Sequence& s, std::ostream* os) { *os << '[' << s.to_string() << ']'; }

inline void PrintTo(const LevelSets& levels, std::ostream* os) {
  *os << "LevelSets(closed " << levels.closed_through() << ", exhausted ";
  if (levels.exhausted_at) {
    *os << *levels.exhausted_at;
  } else {
    *os << "none";
  }
  *os << ')';
}

}  // namespace gdav

namespace gdav::test {

/// Modular group of order 16: C8 extended by the automorphism x -> x^5.
/// Catalogue id [16,6].
inline const std::string kModular16 = "perm:(1,2,3,4,5,6,7,8)|(2,6)(4,8)";

/// (C4 x C2) extended by C4, center C2 x C2, exponent 4, seven involutions.
/// Catalogue id [16,3].
inline const std::string kC2SquaredByC4 = "perm:(2,7)(4,8)|(1,2,3,4)(5,7,6,8)";

/// Dicyclic group of order 12 (C3 extended by C4).
inline const std::string kDicyclic12 = "perm:(1,2,3)|(4,5,6,7)(2,3)";

/// Every group of order at most `max_order` reachable from the built-in
/// constructors: all abelian invariant-factor shapes, dihedral, quaternion,
/// S3, A4, the non-abelian direct products and the perm fixtures above.
inline std::vector<std::string> builtin_specs(std::size_t max_order) {
  const std::vector<std::pair<std::size_t, std::string>> all = {
      {1, "cyclic:1"},
      {2, "cyclic:2"},
      {3, "cyclic:3"},
      {4, "cyclic:4"},
      {4, "abelian:2,2"},
      {5, "cyclic:5"},
      {6, "cyclic:6"},
      {6, "dihedral:6"},
      {6, "symmetric:3"},
      {7, "cyclic:7"},
      {8, "cyclic:8"},
      {8, "abelian:2,4"},
      {8, "abelian:2,2,2"},
      {8, "dihedral:8"},
      {8, "quaternion:8"},
      {9, "cyclic:9"},
      {9, "abelian:3,3"},
      {10, "cyclic:10"},
      {10, "dihedral:10"},
      {11, "cyclic:11"},
      {12, "cyclic:12"},
      {12, "abelian:2,6"},
      {12, "dihedral:12"},
      {12, "alternating:4"},
      {12, kDicyclic12},
      {13, "cyclic:13"},
      {14, "cyclic:14"},
      {14, "dihedral:14"},
      {15, "cyclic:15"},
      {16, "cyclic:16"},
      {16, "abelian:2,8"},
      {16, "abelian:4,4"},
      {16, "abelian:2,2,4"},
      {16, "abelian:2,2,2,2"},
      {16, "dihedral:16"},
      {16, "quaternion:16"},
      {16, "direct:dihedral:8;cyclic:2"},
      {16, "direct:quaternion:8;cyclic:2"},
      {16, kModular16},
      {16, kC2SquaredByC4},
  };
  std::vector<std::string> out;
  for (const auto& [order, spec] : all)
    if (order <= max_order) out.push_back(spec);
  return out;
}

/// Abelian invariant-factor shapes of every abelian group of order <= 24.
inline std::vector<std::vector<std::size_t>> abelian_shapes_up_to_24() {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t n = 2; n <= 24; ++n) out.push_back({n});
  const std::vector<std::vector<std::size_t>> extra = {{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6}, {2, 8}, {4, 4},
                                                        {2, 2, 4}, {2, 2, 2, 2}, {3, 6}, {2, 10}, {2, 12}, {2, 2, 6}};
  for (const auto& shape : extra)
    if (std::find(out.begin(), out.end(), shape) == out.end()) out.push_back(shape);
  return out;
}

/// C3 + C3 + C3 + C6 with e1..e4 its standard generators; the element
/// a e1 + b e2 + c e3 + d e4 has index (a mod 3) + 3 (b mod 3) + 9 (c mod 3) + 27 (d mod 6).
struct Order162Witness {
  Group group = abelian_group({3, 3, 3, 6});

  static Element element(int a, int b, int c, int d) {
    auto mod = [](int v, int m) { return static_cast<std::size_t>(((v % m) + m) % m); };
    return static_cast<Element>(mod(a, 3) + 3 * mod(b, 3) + 9 * mod(c, 3) + 27 * mod(d, 6));
  }

  /// g1..g7 (index 0 holds g1).
  std::vector<Element> generators() const {
    return {element(-1, 1, 1, 1), element(1, -1, 1, 1), element(1, 1, -1, 1), element(-1, 1, 1, -1),
            element(1, 1, 1, 1),  element(0, 1, -1, -1), element(0, -1, 1, -1)};
  }

  /// g1^[2] g2^[2] g3^[2] g4^[2] g5^[2] g6 g7
  Sequence free_sequence() const {
    const auto g = generators();
    std::vector<Element> terms;
    for (std::size_t i = 0; i < 5; ++i) terms.insert(terms.end(), {g[i], g[i]});
    terms.push_back(g[5]);
    terms.push_back(g[6]);
    return Sequence::of(terms);
  }

  /// 2(g1 + ... + g5) + g6 + g7
  Element target() const {
    const auto g = generators();
    Element sum = 0;
    for (std::size_t i = 0; i < 5; ++i) sum = group.mul(sum, group.mul(g[i], g[i]));
    return group.mul(group.mul(sum, g[5]), g[6]);
  }

  /// g8 = -(2(g1 + ... + g5) + g6 + g7)
  Element g8() const { return group.inv(target()); }
};

}  // namespace gdav::test
