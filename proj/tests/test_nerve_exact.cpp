#include <gtest/gtest.h>

#include <chrono>

#include "support/oracles.hpp"

using namespace twoseg;
using namespace twoseg::testing;

TEST(PointedSets, Sizes) {
  for (int k = 1; k <= 4; ++k) {
    auto e = builtin_pointed_sets(k);
    int expected = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int maps = 1;
        for (int v = 0; v < i; ++v) maps *= j + 1;
        expected += maps;
      }
    EXPECT_EQ(e.category.object_count(), k);
    EXPECT_EQ(e.category.morphism_count(), expected);
    EXPECT_NO_THROW(validate_proto_exact(e));
  }
  EXPECT_EQ(builtin_pointed_sets(3).category.morphism_count(), 23);
  EXPECT_THROW(builtin_pointed_sets(0), PreconditionError);
}

TEST(PointedSets, ZeroIsInitialAndTerminal) {
  auto e = builtin_pointed_sets(3);
  const auto& c = e.category;
  for (int z = 0; z < c.object_count(); ++z) {
    if (!e.zero[z]) continue;
    for (int o = 0; o < c.object_count(); ++o) {
      int from = 0, to = 0;
      for (const auto& m : c.morphisms) {
        from += m.source == z && m.target == o;
        to += m.source == o && m.target == z;
      }
      EXPECT_EQ(from, 1);
      EXPECT_EQ(to, 1);
    }
  }
  EXPECT_EQ(std::count(e.zero.begin(), e.zero.end(), true), 1);
}

TEST(PointedSets, IsomorphismsAreMonoAndEpi) {
  auto e = builtin_pointed_sets(3);
  auto inv = isomorphisms(e.category);
  int isos = 0;
  for (int m = 0; m < e.category.morphism_count(); ++m)
    if (inv[m] >= 0) {
      ++isos;
      EXPECT_TRUE(e.mono[m] && e.epi[m]);
    }
  EXPECT_EQ(isos, 4);
}

TEST(NerveExact, LowLevels) {
  auto e = builtin_pointed_sets(3);
  auto d = nerve_exact(e, 2);
  EXPECT_EQ(d.augmentation.object_count(), 1);
  EXPECT_EQ(d.augmentation.morphism_count(), 1);
  EXPECT_EQ(d.level(0, 0).object_count(), 3);
  EXPECT_EQ(d.level(0, 0).morphism_count(), 4);
  int monos = static_cast<int>(std::count(e.mono.begin(), e.mono.end(), true));
  int epis = static_cast<int>(std::count(e.epi.begin(), e.epi.end(), true));
  EXPECT_EQ(d.level(0, 1).object_count(), monos);
  EXPECT_EQ(d.level(1, 0).object_count(), epis);
  EXPECT_EQ(monos, 8);
}

TEST(NerveExact, SquaresMatchBruteForce) {
  for (int k : {2, 3}) {
    auto e = builtin_pointed_sets(k);
    auto d = nerve_exact(e, 3);
    EXPECT_EQ(static_cast<std::size_t>(d.level(1, 1).object_count()), naive_exact_squares(e)) << k;
  }
  EXPECT_EQ(nerve_exact(builtin_pointed_sets(3), 3).level(1, 1).object_count(), 26);
}

TEST(NerveExact, ValidatesAndPassesAtThree) {
  for (int k : {1, 2, 3}) {
    auto d = nerve_exact(builtin_pointed_sets(k), 3);
    EXPECT_TRUE(validate_groupoid_sigma(d).passed()) << k;
    EXPECT_TRUE(check_sadss_groupoid(d).passed()) << k;
  }
}

TEST(NerveExact, TrivialCategoryIsTerminal) {
  auto d = nerve_exact(builtin_pointed_sets(1), 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; a + 1 + b <= 4; ++b) {
      EXPECT_EQ(d.level(a, b).object_count(), 1);
      EXPECT_EQ(d.level(a, b).morphism_count(), 1);
    }
  EXPECT_TRUE(check_sadss_groupoid(d).passed());
}

TEST(NerveExact, StabilitySubreportPasses) {
  auto rep = check_stability_groupoid(nerve_exact(builtin_pointed_sets(2), 4));
  EXPECT_TRUE(rep.passed());
  EXPECT_GT(rep.checked, 0u);
}

TEST(NerveExact, PointedSetsUpToThreeAtFour) {
  auto start = std::chrono::steady_clock::now();
  auto d = nerve_exact(builtin_pointed_sets(3), 4);
  auto rep = check_sadss_groupoid(d);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(rep.passed());
  for (const char* sub : {"double-segal", "stability", "augmentation"}) EXPECT_TRUE(rep.subreports.at(sub).passed()) << sub;
  EXPECT_LT(secs, 60.0);
}

TEST(Swapped, ValidationNamesInitiality) {
  auto s = swap_mono_epi(builtin_pointed_sets(3));
  try {
    validate_proto_exact(s);
    FAIL() << "swapped data validated";
  } catch (const ValidationError& err) {
    EXPECT_NE(std::string(err.what()).find("P0"), std::string::npos);
  }
}

TEST(Swapped, UnvalidatedNerveFailsAugmentation) {
  auto d = nerve_exact(swap_mono_epi(builtin_pointed_sets(3)), 3, {false});
  auto rep = check_sadss_groupoid(d);
  ASSERT_TRUE(rep.failed());
  EXPECT_TRUE(rep.subreports.at("augmentation").failed());
  const auto& inst = rep.subreports.at("augmentation").instances.front();
  EXPECT_FALSE(inst.witness.empty());
  EXPECT_FALSE(inst.index.empty());
}
