#include <gtest/gtest.h>

#include "invariants.hpp"

using namespace symc;

namespace {

std::vector<std::string> component_names(const SatakeDiagram& d, const std::vector<int>& nodes) {
  std::vector<std::string> out;
  for (const auto& c : classify_subdiagram(d, SubDiagram{nodes})) out.push_back(c.compact ? "compact" : c.family->name());
  return out;
}

}  // namespace

TEST(Satake, KnownDiagrams) {
  EXPECT_EQ(satake_diagram(Family::two(Tag::CII, 2, 3)).colors_str(), "bwbwb");
  EXPECT_EQ(satake_diagram(Family::two(Tag::CII, 3, 3)).colors_str(), "bwbwbw");
  EXPECT_EQ(satake_diagram(Family::one(Tag::DIII, 4)).colors_str(), "bwbw");
  SatakeDiagram d5 = satake_diagram(Family::one(Tag::DIII, 5));
  EXPECT_EQ(d5.colors_str(), "bwbww");
  EXPECT_EQ(d5.arrows, (std::vector<std::pair<int, int>>{{4, 5}}));
  SatakeDiagram a25 = satake_diagram(Family::two(Tag::AIII, 2, 5));
  EXPECT_EQ(a25.colors_str(), "wwbbww");
  EXPECT_EQ(a25.arrows.size(), 2u);
  EXPECT_EQ(satake_diagram(Family::two(Tag::BDI, 2, 5)).colors_str(), "wwb");
  EXPECT_EQ(satake_diagram(Family::one(Tag::AII, 3)).colors_str(), "bwbwb");
  EXPECT_EQ(satake_diagram(Family::one(Tag::CI, 3)).colors_str(), "www");
  SatakeDiagram so2 = satake_diagram(Family::two(Tag::BDI, 1, 1));
  EXPECT_EQ(so2.size(), 0);
  EXPECT_EQ(so2.center_rank, 1);
  EXPECT_EQ(so2.source, "literature");
}

TEST(Satake, SubdiagramCounts) {
  EXPECT_EQ(enumerate_subdiagrams(satake_diagram(Family::one(Tag::AI, 2))).size(), 2u);
  EXPECT_EQ(enumerate_subdiagrams(satake_diagram(Family::two(Tag::AIII, 1, 2))).size(), 2u);
  EXPECT_EQ(enumerate_subdiagrams(satake_diagram(Family::one(Tag::AI, 3))).size(), 4u);
  EXPECT_EQ(enumerate_subdiagrams(satake_diagram(Family::two(Tag::AIII, 2, 5))).size(), 4u);
  EXPECT_EQ(satake_summary(Family::two(Tag::CII, 2, 3)).subdiagrams, 4u);
}

TEST(Satake, RankIdentityOnGrid) {
  for (const auto& f : symc::testing::invariant_grid()) {
    SCOPED_TRACE(f.name());
    SatakeDiagram d = satake_diagram(f);
    EXPECT_NO_THROW(d.validate());
    SatakeSummary s = satake_summary(f);
    EXPECT_EQ(s.rank, f.closed_form_rank());
    const int orbits = static_cast<int>(white_orbits(d).size());
    EXPECT_EQ(orbits, s.white - s.arrow_count);
    for (const auto& sub : enumerate_subdiagrams(d)) {
      EXPECT_EQ(levi_rank(d, sub) + dim_c_a(d, sub), orbits);
      int missing = 0;
      for (const auto& o : white_orbits(d))
        if (!sub.has(o[0])) ++missing;
      EXPECT_EQ(dim_c_a(d, sub), missing);
    }
    SubDiagram full = subdiagram_from_orbits(d, white_orbits(d), (std::uint64_t{1} << orbits) - 1);
    SubDiagram none = subdiagram_from_orbits(d, white_orbits(d), 0);
    EXPECT_EQ(levi_rank(d, full), orbits);
    EXPECT_EQ(dim_c_a(d, full), 0);
    EXPECT_EQ(levi_rank(d, none), 0);
    EXPECT_EQ(dim_c_a(d, none), orbits);
  }
  EXPECT_EQ(satake_summary(Family::two(Tag::BDI, 1, 1)).rank, 1);
}

TEST(Satake, Classification) {
  SatakeDiagram a25 = satake_diagram(Family::two(Tag::AIII, 2, 5));
  EXPECT_EQ(component_names(a25, {2, 3, 4, 5}), (std::vector<std::string>{"AIII(1,4)"}));
  SatakeDiagram ai5 = satake_diagram(Family::one(Tag::AI, 5));
  EXPECT_EQ(component_names(ai5, {1, 3}), (std::vector<std::string>{"AI(2)", "AI(2)"}));
  EXPECT_EQ(component_names(ai5, {1, 2, 3, 4}), (std::vector<std::string>{"AI(5)"}));
  SatakeDiagram a14 = satake_diagram(Family::two(Tag::AIII, 1, 4));
  auto comps = classify_subdiagram(a14, SubDiagram{{2, 3}});
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_TRUE(comps[0].compact);
  EXPECT_EQ(comps[0].shape, "bb");
  SatakeDiagram c23 = satake_diagram(Family::two(Tag::CII, 2, 3));
  EXPECT_EQ(component_names(c23, {1, 2, 3, 5}), (std::vector<std::string>{"AII(2)", "compact"}));
  EXPECT_EQ(component_names(c23, {1, 3, 4, 5}), (std::vector<std::string>{"compact", "CII(1,2)"}));
  EXPECT_EQ(component_names(c23, {1, 2, 3, 4, 5}), (std::vector<std::string>{"CII(2,3)"}));
}

TEST(Satake, LowRankIsomorphisms) {
  auto iso = [](const Family& a, const Family& b) { return diagrams_isomorphic(satake_diagram(a), satake_diagram(b)); };
  EXPECT_TRUE(iso(Family::one(Tag::DIII, 4), Family::two(Tag::BDI, 2, 6)));
  EXPECT_TRUE(iso(Family::two(Tag::BDI, 2, 4), Family::two(Tag::AIII, 2, 2)));
  EXPECT_TRUE(iso(Family::two(Tag::BDI, 3, 3), Family::one(Tag::AI, 4)));
  EXPECT_TRUE(iso(Family::one(Tag::DIII, 3), Family::two(Tag::AIII, 1, 3)));
  EXPECT_TRUE(iso(Family::two(Tag::BDI, 2, 3), Family::one(Tag::CI, 2)));
  EXPECT_FALSE(iso(Family::one(Tag::AI, 3), Family::two(Tag::AIII, 1, 2)));
  EXPECT_FALSE(iso(Family::two(Tag::CII, 2, 3), Family::two(Tag::CII, 1, 4)));
  EXPECT_FALSE(iso(Family::one(Tag::AI, 3), Family::one(Tag::AI, 4)));
}

TEST(Satake, InvalidSubdiagrams) {
  SatakeDiagram c23 = satake_diagram(Family::two(Tag::CII, 2, 3));
  EXPECT_THROW(levi_rank(c23, SubDiagram{{1, 3}}), ArgumentError);        // misses black node 5
  EXPECT_THROW(levi_rank(c23, SubDiagram{{1, 3, 5, 6}}), ArgumentError);  // node out of range
  SatakeDiagram a25 = satake_diagram(Family::two(Tag::AIII, 2, 5));
  EXPECT_THROW(dim_c_a(a25, SubDiagram{{2, 3, 4}}), ArgumentError);  // breaks the 2 <-> 5 arrow
  EXPECT_THROW(satake_diagram(Family::make("FII", 4, 0, 0)), UnsupportedFamily);
}

TEST(Satake, LeviCrossCheckAgainstPairs) {
  for (const auto& f : {Family::two(Tag::AIII, 2, 3), Family::two(Tag::AIII, 2, 2), Family::two(Tag::AIII, 1, 3), Family::two(Tag::CII, 2, 3),
                        Family::two(Tag::CII, 2, 2), Family::two(Tag::CII, 1, 2)}) {
    SymmetricPair pr = build_pair(f);
    for (const auto& sub : enumerate_subdiagrams(satake_diagram(f))) {
      LeviCrossCheck r = satake_levi_cross_check(pr, sub);
      EXPECT_TRUE(r.ok()) << f.name() << " " << subdiagram_str(sub) << ": c_a " << r.dim_c_a << " vs " << r.computed_c_p << ", rank "
                          << r.levi_rank << " vs " << r.computed_rank;
      EXPECT_TRUE(pr.in(Space::P, r.s));
    }
  }
  EXPECT_THROW(standard_cartan(build_pair(Family::one(Tag::AI, 3))), UnsupportedFamily);
}
