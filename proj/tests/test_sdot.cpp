#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace twoseg;
using namespace twoseg::testing;

TEST(Sdot, PointIsLevelwiseSingleton) {
  for (int T : {1, 2, 3, 4}) {
    auto s = sdot(path_standard_simplex(0, T));
    for (int n = 0; n <= T; ++n) EXPECT_EQ(s.size(n), 1) << "T=" << T << " n=" << n;
    EXPECT_TRUE(validate_simplicial(s).passed());
  }
}

TEST(Sdot, VerticesAreAugmentation) {
  for (const auto& [name, d] : d_corpus(3)) {
    auto sd = s_construction(d);
    EXPECT_EQ(sd.sset.size(0), d.aug_size()) << name;
    EXPECT_EQ(sd.sset.names[0], d.augmentation) << name;
  }
}

TEST(Sdot, ResultIsSimplicial) {
  for (const auto& [name, d] : d_corpus(4)) EXPECT_TRUE(validate_simplicial(sdot(d)).passed()) << name;
}

TEST(Sdot, FirstRowBijection) {
  for (const auto& [name, d] : d_corpus(4)) {
    auto sd = s_construction(d);
    for (int n = 0; n <= 3; ++n) {
      auto rep = first_row_bijection(d, sd, n);
      EXPECT_TRUE(rep.passed()) << name << " n=" << n;
      EXPECT_EQ(static_cast<int>(sd.elements[n + 1].size()), d.size(0, n)) << name;
    }
  }
}

TEST(Sdot, UnitBijective) {
  for (const auto& [name, x] : x_corpus(4)) {
    auto spx = s_construction(path_of_sset(x));
    auto rep = check_unit_bijective(x, spx, 4);
    EXPECT_TRUE(rep.passed()) << name;
  }
}

TEST(Sdot, CounitBijective) {
  for (const auto& [name, d] : d_corpus(4)) {
    auto rep = check_counit_bijective(d, s_construction(d), 4);
    EXPECT_TRUE(rep.passed()) << name;
    EXPECT_GT(rep.checked, 0u);
  }
}

TEST(Sdot, UnitIsNatural) {
  auto x = standard_simplex(1, 3);
  auto y = nerve_poset(parse_poset_spec("0<1;0<2"), 3);
  auto sx = s_construction(path_of_sset(x)), sy = s_construction(path_of_sset(y));
  auto ex = unit_map(x, sx), ey = unit_map(y, sy);
  int maps = 0;
  for (const auto& f : hom_simplicial(x, y)) {
    auto pf = path_of_map(f);
    for (int n = 0; n <= 3; ++n)
      for (int e = 0; e < x.size(n); ++e) {
        auto pushed = compose_maps(sx.elements[n][ex[n][e]], pf);
        EXPECT_EQ(sy.find(n, pushed), ey[n][f[n][e]]);
      }
    ++maps;
  }
  EXPECT_EQ(maps, 5);
}

TEST(Sdot, LevelsStableFromNextTruncation) {
  for (const auto& [name, d] : d_corpus(5)) {
    auto sd = s_construction(d);
    for (int n = 0; n <= 4; ++n) {
      auto next = hom_sigma(path_standard_simplex(n, n + 1), restrict_truncation(d, n + 1));
      std::vector<SigmaMap> cut;
      for (const auto& f : sd.elements[n]) cut.push_back(restrict_map(f, n + 1));
      std::sort(next.begin(), next.end());
      EXPECT_EQ(cut, next) << name << " n=" << n;
    }
  }
}

TEST(Sdot, MinimalTruncationOvercounts) {
  auto d = path_standard_simplex(1, 3);
  EXPECT_EQ(sdot_level_minimal(d, 0).size(), 2u);
  EXPECT_EQ(sdot_level_minimal(d, 1).size(), 12u);
  EXPECT_EQ(s_construction(d).elements[1].size(), 3u);
}

TEST(Sdot, OfPathIsTwoSegal) {
  for (const auto& [name, d] : d_corpus(5)) {
    auto s = sdot(d);
    EXPECT_TRUE(check_2segal(s).passed()) << name;
    EXPECT_TRUE(check_unital(s).passed()) << name;
  }
}

TEST(Sdot, OfArbitraryDiagramIsTwoSegalWhenSadss) {
  auto d = path_standard_simplex(2, 4);
  ASSERT_TRUE(check_sadss(d).passed());
  auto s = sdot(d);
  EXPECT_TRUE(check_2segal(s).passed());
  EXPECT_TRUE(check_augmentation_retract(d).passed());
}

TEST(Roundtrip, SimplicialSide) {
  auto rep = roundtrip_verify(nerve_poset(parse_poset_spec("0<1<2"), 3));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.subreports.size(), 3u);
}

TEST(Roundtrip, SigmaSide) {
  auto rep = roundtrip_verify(path_standard_simplex(2, 3));
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.subreports.at("counit").passed());
}

TEST(Roundtrip, PreconditionGuards) {
  auto art = search_non_2segal({1, 2, 3}).object;
  auto rep = roundtrip_verify(art);
  ASSERT_TRUE(rep.failed());
  EXPECT_EQ(rep.instances.front().kind, FailureKind::precondition);
  EXPECT_TRUE(rep.subreports.empty());

  auto d = path_standard_simplex(2, 3);
  d.eps[1] = d.eps[0];
  auto rep2 = roundtrip_verify(d);
  ASSERT_TRUE(rep2.failed());
  EXPECT_EQ(rep2.instances.front().condition, "precondition");
}

TEST(Roundtrip, ParallelAgrees) {
  auto d = path_of_sset(nerve_poset(parse_poset_spec("0<1;0<2;1<3;2<3"), 3));
  auto a = s_construction(d, {1, 0});
  auto b = s_construction(d, {4, 0});
  EXPECT_EQ(a.elements, b.elements);
  EXPECT_EQ(a.sset, b.sset);
}
