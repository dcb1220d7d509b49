#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gdav/gdav.hpp"
#include "gdav/oracle.hpp"

namespace gdav {
namespace {

LevelSets geodesic(const Group& g, const SearchOptions& opts = {}) {
  return geodesic_levels(g, automorphisms(g), opts).levels;
}

std::vector<Sequence> all_members(const LevelSets& levels) {
  std::vector<Sequence> out;
  for (const auto& level : levels.levels) out.insert(out.end(), level.orbit_union.begin(), level.orbit_union.end());
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet random_subset(std::mt19937& rng, std::size_t order, unsigned one_in) {
  ElementSet b;
  for (std::size_t i = 0; i < order; ++i)
    if (rng() % one_in == 0) b.insert(static_cast<Element>(i));
  return b;
}

TEST(IsDirectedGeodesicAtom, Examples) {
  const Group s3 = build_group("symmetric:3");
  EXPECT_TRUE(is_directed_geodesic_atom(s3, Sequence::of({0})));
  EXPECT_FALSE(is_directed_geodesic_atom(s3, Sequence::of({0, 0})));
  const Group v4 = build_group("abelian:2,2");
  EXPECT_TRUE(is_directed_geodesic_atom(v4, Sequence::of({1, 2, 3})));
  EXPECT_THROW(is_directed_geodesic_atom(v4, Sequence::of({1, 2})), InputError);
  EXPECT_THROW(is_directed_geodesic_atom(v4, {}), InputError);
}

TEST(IsDirectedGeodesicAtom, ExampleFiveTwoIsNotGeodesic) {
  const test::Order162Witness ex;
  const Sequence atom = ex.free_sequence().with(ex.g8());
  ASSERT_TRUE(is_atom(ex.group, atom));
  EXPECT_FALSE(is_directed_geodesic_atom(ex.group, atom));
}

TEST(Ng, Examples) {
  const Group c3 = build_group("cyclic:3");
  GeoIndex level_one(3);
  level_one.add(Sequence::of({0}));
  EXPECT_FALSE(ng(Sequence::of({1, 2}), level_one));
  EXPECT_TRUE(ng(Sequence::of({0, 0}), level_one));

  const Group v4 = build_group("abelian:2,2");
  SearchOptions two;
  two.max_len = 2;
  const auto partial = geodesic_levels(v4, automorphisms(v4), two);
  EXPECT_EQ(partial.levels.closed_through(), 2u);
  EXPECT_FALSE(ng(Sequence::of({1, 2, 3}), partial.index));
}

TEST(GeoIndex, KeepsAntichainsOfReducedSupports) {
  for (const auto& spec : test::builtin_specs(16)) {
    SCOPED_TRACE(spec);
    const Group g = build_group(spec);
    const auto result = geodesic_levels(g, automorphisms(g));
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto& list = result.index.witnesses(static_cast<Element>(x));
      EXPECT_FALSE(list.empty());
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list.size(); ++j)
          if (i != j)
            EXPECT_FALSE(list[i].length <= list[j].length && list[i].reduced_support.is_subset_of(list[j].reduced_support));
    }
    EXPECT_EQ(result.index, GeoIndex::from_levels(g.order(), result.levels));
  }
}

TEST(GeodesicLevels, Examples) {
  const LevelSets c3 = geodesic(build_group("cyclic:3"));
  ASSERT_TRUE(c3.complete());
  EXPECT_EQ(c3.max_length(), 3u);
  EXPECT_EQ(all_members(c3), (std::vector<Sequence>{Sequence::of({0}), Sequence::of({1, 2}), Sequence::of({1, 1, 1}),
                                                    Sequence::of({2, 2, 2})}));
  EXPECT_EQ(geodesic(build_group("abelian:2,2")).max_length(), 3u);
  EXPECT_EQ(geodesic(build_group("symmetric:3")).max_length(), 4u);
  const auto trivial = geodesic_levels(build_group("cyclic:1"), automorphisms(build_group("cyclic:1")));
  EXPECT_EQ(trivial.gd(), 1u);
}

TEST(GeodesicLevels, CapAndDeadlineGiveIncompleteResults) {
  const Group g = build_group("cyclic:6");
  SearchOptions capped;
  capped.max_len = 3;
  const auto partial = geodesic_levels(g, automorphisms(g), capped);
  EXPECT_FALSE(partial.complete());
  EXPECT_THROW(partial.gd(), IncompleteError);
  EXPECT_THROW(dcd_star(g, partial.levels), IncompleteError);
  SearchOptions expired;
  expired.deadline = Clock::now();
  EXPECT_EQ(geodesic(g, expired).closed_through(), 1u);
}

TEST(GeodesicLevels, ResumeMatchesColdRun) {
  for (const auto& spec : test::builtin_specs(12)) {
    SCOPED_TRACE(spec);
    const Group g = build_group(spec);
    const Automorphisms aut = automorphisms(g);
    const auto cold = geodesic_levels(g, aut);
    for (std::size_t k = 1; k < cold.levels.closed_through(); ++k) {
      SearchOptions capped;
      capped.max_len = k;
      const auto partial = geodesic_levels(g, aut, capped);
      const auto resumed = geodesic_levels(g, aut, {}, partial.levels);
      EXPECT_EQ(resumed.levels, cold.levels);
      EXPECT_EQ(resumed.index, cold.index);
      EXPECT_EQ(resumed.gd(), cold.gd());
    }
  }
}

TEST(GeodesicLevels, IndependentOfThreadCount) {
  const Group g = build_group(test::kC2SquaredByC4);
  SearchOptions four;
  four.threads = 4;
  EXPECT_EQ(geodesic(g, four), geodesic(g));
}

TEST(GeodesicLevels, MatchOracleAndAreAtoms) {
  for (const auto& spec : test::builtin_specs(8)) {
    SCOPED_TRACE(spec);
    const Group g = build_group(spec);
    const Automorphisms aut = automorphisms(g);
    const LevelSets geo = geodesic_levels(g, aut).levels;
    ASSERT_TRUE(geo.complete());
    EXPECT_EQ(all_members(geo), oracle::brute_geodesic_atoms(g, std::min<std::size_t>(g.order() + 1, 12)));
    const LevelSets atoms = enumerate_atoms(g, aut);
    for (std::size_t k = 1; k <= geo.closed_through(); ++k) {
      const auto& a = atoms.at(k).orbit_union;
      for (const auto& s : geo.at(k).orbit_union) EXPECT_TRUE(std::binary_search(a.begin(), a.end(), s)) << s.to_string();
    }
  }
}

TEST(GeodesicLevels, NgCharacterizesNonGeodesicProductOneSequences) {
  for (const auto& spec : test::builtin_specs(8)) {
    SCOPED_TRACE(spec);
    const Group g = build_group(spec);
    const auto result = geodesic_levels(g, automorphisms(g));
    const std::size_t max_len = std::min<std::size_t>(g.order() + 1, 7);
    for (std::size_t len = 1; len <= max_len; ++len)
      oracle::detail::for_each_multiset(g.order(), len, [&](const std::vector<Element>& terms) {
        const Sequence s = Sequence::of(terms);
        if (!is_product_one(g, s)) return;
        ASSERT_EQ(ng(s, result.index), !is_directed_geodesic_atom(g, s)) << s.to_string();
      });
  }
}

TEST(DcdStar, Examples) {
  const Group trivial = build_group("cyclic:1");
  EXPECT_EQ(dcd_star(trivial, geodesic(trivial)), 0u);
  const Group c6 = build_group("cyclic:6");
  EXPECT_EQ(dcd_star(c6, geodesic(c6)), 5u);
  const Group s3 = build_group("symmetric:3");
  EXPECT_EQ(dcd_star(s3, geodesic(s3)), 3u);
}

TEST(DcdStar, MatchesOracle) {
  for (const auto& spec : test::builtin_specs(8)) {
    const Group g = build_group(spec);
    EXPECT_EQ(dcd_star(g, geodesic(g)), oracle::brute_dcd_star(g)) << spec;
  }
}

TEST(GeneratesViaGa, Examples) {
  const Group s3 = build_group("symmetric:3");
  const LevelSets s3_levels = geodesic(s3);
  EXPECT_TRUE(generates_via_ga(s3, ElementSet::all(6), s3_levels));
  EXPECT_TRUE(generates_via_ga(s3, ElementSet{3, 4}, s3_levels));
  const Group c4 = build_group("cyclic:4");
  EXPECT_FALSE(generates_via_ga(c4, {2}, geodesic(c4)));
  SearchOptions capped;
  capped.max_len = 2;
  EXPECT_THROW(generates_via_ga(c4, {1}, geodesic(c4, capped)), IncompleteError);
}

TEST(DiameterViaGa, Examples) {
  const Group c6 = build_group("cyclic:6");
  const LevelSets c6_levels = geodesic(c6);
  EXPECT_EQ(diameter_via_ga(c6, {1}, c6_levels), 5u);
  ElementSet all = ElementSet::all(6);
  all.erase(0);
  EXPECT_EQ(diameter_via_ga(c6, all, c6_levels), 1u);
  EXPECT_THROW(diameter_via_ga(c6, {2}, c6_levels), NotGeneratedError);
  const Group d6 = build_group("dihedral:6");
  EXPECT_EQ(diameter_via_ga(d6, ElementSet{3, 4}, geodesic(d6)), 3u);
}

TEST(DiameterViaGa, UnrestrictedSelectionOvercounts) {
  const Group c6 = build_group("cyclic:6");
  ElementSet all = ElementSet::all(6);
  all.erase(0);
  // 1^[6] is a geodesic atom supported in B.
  EXPECT_EQ(diameter_via_ga_unrestricted(c6, all, geodesic(c6)), 5u);
  // Irredundant B = {r, s} in D12: r^[6] is a geodesic atom of length 6 but
  // the digraph has diameter 4.
  const Group d12 = build_group("dihedral:12");
  const LevelSets d12_levels = geodesic(d12);
  const ElementSet rs{1, 6};
  EXPECT_TRUE(is_irredundant(d12, rs));
  EXPECT_EQ(digraph_diameter(d12, rs), 4u);
  EXPECT_EQ(diameter_via_ga(d12, rs, d12_levels), 4u);
  EXPECT_EQ(diameter_via_ga_unrestricted(d12, rs, d12_levels), 5u);
  // With B = {a, b} the two selections agree.
  EXPECT_EQ(diameter_via_ga_unrestricted(d12, ElementSet{6, 7}, d12_levels), 6u);
}

TEST(DiameterViaGa, AgreesWithBreadthFirstSearch) {
  std::mt19937 rng(23);
  for (const auto& spec : test::builtin_specs(16)) {
    SCOPED_TRACE(spec);
    const Group g = build_group(spec);
    const LevelSets levels = geodesic(g);
    for (int trial = 0; trial < 25; ++trial) {
      const ElementSet b = random_subset(rng, g.order(), 1 + trial % 5);
      const bool gen = generates(g, b);
      ASSERT_EQ(generates_via_ga(g, b, levels), gen) << trial;
      if (gen) ASSERT_EQ(diameter_via_ga(g, b, levels), digraph_diameter(g, b));
    }
  }
}

TEST(GeodesicProperties, GdMinusOneIsTheLargestSubgroupDiameter) {
  for (const auto& spec : test::builtin_specs(12)) {
    SCOPED_TRACE(spec);
    const Group g = build_group(spec);
    std::size_t best = 0;
    for (const auto& h : oracle::brute_subgroups(g)) best = std::max(best, oracle::brute_ddiam(induced_subgroup(g, h)));
    EXPECT_EQ(geodesic(g).max_length() - 1, best);
  }
}

TEST(GeodesicProperties, GeodesicWordsCloseIntoAtoms) {
  std::mt19937 rng(29);
  std::size_t checked = 0;
  for (const auto& spec : test::builtin_specs(16)) {
    const Group g = build_group(spec);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Element> word(1 + rng() % 6);
      Element product = 0;
      for (auto& b : word) {
        b = static_cast<Element>(rng() % g.order());
        product = g.mul(product, b);
      }
      const Sequence s = Sequence::of(word);
      const auto dist = distances_from_identity(g, s.support());
      if (*dist[product] != word.size()) continue;
      ++checked;
      EXPECT_TRUE(is_atom(g, s.with(g.inv(product)))) << spec << ' ' << s.to_string();
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(GeodesicProperties, LargeDavenportExceedsDirectedDiameter) {
  for (const auto& spec : test::builtin_specs(16)) {
    const Group g = build_group(spec);
    const Automorphisms aut = automorphisms(g);
    EXPECT_GT(large_davenport(enumerate_atoms(g, aut)), directed_cayley_diameter(g, aut)) << spec;
  }
}

}  // namespace
}  // namespace gdav
