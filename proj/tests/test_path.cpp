#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace twoseg;
using namespace twoseg::testing;

TEST(Path, SegmentExample) {
  auto d = path_standard_simplex(1, 2);
  EXPECT_EQ(d.total_truncation, 2);
  EXPECT_EQ(d.augmentation, (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(d.size(0, 0), 3);
  EXPECT_EQ(d.size(0, 1), 4);
  EXPECT_EQ(d.size(1, 0), 4);
  EXPECT_EQ(d.eps, (std::vector<int>{0, 2}));
  EXPECT_TRUE(validate_sigma(d).passed());
}

TEST(Path, AugmentationAndEps) {
  for (const auto& [name, x] : x_corpus(3)) {
    auto d = path_of_sset(x);
    EXPECT_EQ(d.augmentation, x.names[0]) << name;
    EXPECT_EQ(d.eps, x.degens[0][0]) << name;
  }
}

TEST(Path, LevelsAreShiftedLevels) {
  for (const auto& [name, x] : x_corpus(4)) {
    auto d = path_of_sset(x);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; a + 1 + b <= 4; ++b) {
        EXPECT_EQ(d.size(a, b), x.size(a + 1 + b)) << name;
        for (int i = 0; a >= 1 && i <= a; ++i)
          for (int e = 0; e < d.size(a, b); ++e) EXPECT_EQ(d.dv(a, b, i, e), x.d(a + 1 + b, i, e));
        for (int j = 0; b >= 1 && j <= b; ++j)
          for (int e = 0; e < d.size(a, b); ++e) EXPECT_EQ(d.dh(a, b, j, e), x.d(a + 1 + b, a + 1 + j, e));
      }
  }
}

TEST(Path, CardinalityOfGenerators) {
  for (int n = 0; n <= 3; ++n)
    for (int T = std::max(n, 1); T <= 4; ++T) {
      auto d = path_standard_simplex(n, T);
      EXPECT_EQ(d.aug_size(), n + 1);
      for (int a = 0; a < T; ++a)
        for (int b = 0; a + 1 + b <= T; ++b)
          EXPECT_EQ(d.size(a, b), static_cast<int>(enumerate_monotone(a + 1 + b, n).size()));
    }
}

TEST(Path, ValidatesOnCorpus) {
  for (const auto& [name, d] : d_corpus(4)) EXPECT_TRUE(validate_sigma(d).passed()) << name;
}

TEST(Path, CommutesWithTruncation) {
  for (const auto& [name, x] : x_corpus(4))
    for (int t = 1; t <= 4; ++t) {
      auto lhs = restrict_truncation(path_of_sset(x), t);
      auto rhs = path_of_sset(truncate(x, t));
      EXPECT_EQ(lhs.levels, rhs.levels) << name;
      EXPECT_EQ(lhs.vface, rhs.vface) << name;
      EXPECT_EQ(lhs.hface, rhs.hface) << name;
      EXPECT_EQ(lhs.vdegen, rhs.vdegen) << name;
      EXPECT_EQ(lhs.hdegen, rhs.hdegen) << name;
      EXPECT_EQ(lhs.eps, rhs.eps) << name;
    }
}

TEST(Path, RefusesTruncationZero) {
  EXPECT_THROW(path_of_sset(standard_simplex(0, 0)), PreconditionError);
}

TEST(PathOfMap, IdentityAndComposition) {
  auto corpus = x_corpus(3);
  for (const auto& [name, x] : corpus) {
    auto id = identity_map(to_presheaf(x));
    EXPECT_EQ(path_of_map(id), identity_map(to_presheaf(path_of_sset(x)))) << name;
  }
  auto x = standard_simplex(1, 3);
  auto y = nerve_poset(parse_poset_spec("0<1<2"), 3);
  auto z = standard_simplex(0, 3);
  auto px = path_of_sset(x), py = path_of_sset(y), pz = path_of_sset(z);
  int pairs = 0;
  for (const auto& f : hom_simplicial(x, y))
    for (const auto& g : hom_simplicial(y, z)) {
      auto pf = path_of_map(f), pg = path_of_map(g);
      EXPECT_TRUE(is_sigma_map(px, py, pf));
      EXPECT_EQ(path_of_map(compose_maps(f, g)), compose_maps(pf, pg));
      ++pairs;
    }
  EXPECT_EQ(pairs, 6);
}

TEST(PathOfMap, IsomorphismsGoToIsomorphisms) {
  auto x = nerve_poset(parse_poset_spec("0<1<2<3"), 3);
  auto y = standard_simplex(3, 3);
  int isos = 0;
  for (const auto& f : hom_simplicial(x, y)) {
    bool bij = true;
    for (const auto& lvl : f) bij = bij && std::set<int>(lvl.begin(), lvl.end()).size() == lvl.size();
    auto pf = path_of_map(f);
    bool pbij = true;
    for (const auto& lvl : pf) pbij = pbij && std::set<int>(lvl.begin(), lvl.end()).size() == lvl.size();
    EXPECT_EQ(bij, pbij);
    isos += bij;
  }
  EXPECT_EQ(isos, 1);
}

TEST(Path, SadssOnCorpusUpToFive) {
  for (const auto& [name, d] : d_corpus(5)) {
    auto rep = check_sadss(d);
    EXPECT_TRUE(rep.passed()) << name;
    for (const char* sub : {"double-segal", "stability", "augmentation"})
      EXPECT_TRUE(rep.subreports.at(sub).passed()) << name << " " << sub;
  }
}
