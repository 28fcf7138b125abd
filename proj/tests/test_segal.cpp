#include <gtest/gtest.h>

#include <chrono>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace twoseg;
using namespace twoseg::testing;

namespace {

std::vector<NamedSset> oracle_pool(int t) {
  auto pool = x_corpus(t);
  pool.push_back({"artifact", coskeletal_extension(truncate(search_non_2segal({1, 2, 3}).object, 2), t)});
  // One loop x with fillers for x.x = x and x.x = id.
  Skeleton2 sk;
  sk.vertices = 1;
  sk.edges = {{0, 0}};
  sk.extras = {{1, 1, 1}, {1, 0, 1}};
  pool.push_back({"loop-fillers", coskeletal_extension(detail::skeleton_to_sset(sk), t)});
  Skeleton2 free_pair;
  free_pair.vertices = 2;
  free_pair.edges = {{0, 1}, {1, 0}};
  pool.push_back({"free-pair", coskeletal_extension(detail::skeleton_to_sset(free_pair), t)});
  return pool;
}

bool has_condition(const CheckReport& r, const std::string& c) {
  for (const auto& inst : r.instances)
    if (inst.condition == c) return true;
  return false;
}

} // namespace

TEST(TwoSegal, CorpusPassesAtTruncationFive) {
  auto start = std::chrono::steady_clock::now();
  auto corpus = x_corpus(5, false);
  ASSERT_EQ(corpus.size(), 29u);
  for (const auto& [name, x] : corpus) {
    EXPECT_TRUE(check_2segal(x).passed()) << name;
    EXPECT_TRUE(check_unital(x).passed()) << name;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 10.0);
}

TEST(TwoSegal, MonoidNervesPass) {
  for (const auto& [name, x] : x_corpus(4))
    if (name.rfind("monoid", 0) == 0) {
      EXPECT_TRUE(check_2segal(x).passed()) << name;
      EXPECT_TRUE(check_unital(x).passed()) << name;
    }
}

TEST(TwoSegal, AgreesWithAllDiagonals) {
  for (int t : {3, 4}) {
    int failing = 0;
    for (const auto& [name, x] : oracle_pool(t)) {
      bool fast = check_2segal(x).passed();
      EXPECT_EQ(fast, naive_2segal(x)) << name << " t=" << t;
      EXPECT_EQ(check_unital(x).passed(), naive_unital(x)) << name << " t=" << t;
      failing += !fast;
    }
    EXPECT_GT(failing, 0);
  }
}

TEST(TwoSegal, TwoSegalImpliesUnital) {
  for (const auto& [name, x] : oracle_pool(4))
    if (check_2segal(x).passed()) EXPECT_TRUE(check_unital(x).passed()) << name;
}

TEST(TwoSegal, LowTruncationIsPartial) {
  auto x = standard_simplex(2, 2);
  auto rep = check_2segal(x);
  EXPECT_EQ(rep.verdict, Verdict::partial);
  EXPECT_FALSE(rep.notes.empty());
  EXPECT_EQ(check_unital(standard_simplex(1, 1)).verdict, Verdict::partial);
  EXPECT_TRUE(check_unital(x).passed());
}

TEST(TwoSegal, VerdictIsMonotoneInTruncation) {
  for (const auto& [name, x] : oracle_pool(5)) {
    bool high = check_2segal(x).passed();
    for (int t = 3; t < 5; ++t)
      if (high) EXPECT_TRUE(check_2segal(truncate(x, t)).passed()) << name << " t=" << t;
    if (check_2segal(truncate(x, 3)).failed()) EXPECT_FALSE(high) << name;
  }
}

TEST(TwoSegal, ArtifactFailsWithNamedInstance) {
  auto res = search_non_2segal({1, 2, 3});
  ASSERT_TRUE(res.found);
  auto rep = check_2segal(res.object);
  ASSERT_TRUE(rep.failed());
  const auto& inst = rep.instances.front();
  EXPECT_EQ(inst.index, std::vector<int>{2});
  EXPECT_TRUE(inst.condition == "2segal-lower" || inst.condition == "2segal-upper");
  EXPECT_FALSE(inst.witness.empty());
  EXPECT_FALSE(inst.role.empty());
}

TEST(Sadss, PathOfSegmentPasses) {
  auto rep = check_sadss(path_standard_simplex(1, 3));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.subreports.size(), 3u);
  for (const auto& [name, sub] : rep.subreports) {
    EXPECT_TRUE(sub.passed()) << name;
    EXPECT_GT(sub.checked, 0u) << name;
  }
}

TEST(Sadss, RewiredEpsFailsAugmentation) {
  auto d = path_standard_simplex(2, 3);
  d.eps[1] = d.eps[0];
  ASSERT_TRUE(validate_sigma(d).passed());
  auto rep = check_sadss(d);
  ASSERT_TRUE(rep.failed());
  EXPECT_TRUE(rep.subreports.at("augmentation").failed());
  EXPECT_TRUE(rep.subreports.at("double-segal").passed());
  EXPECT_TRUE(rep.subreports.at("stability").passed());
  EXPECT_TRUE(has_condition(rep, "augmentation-vertical"));
}

TEST(Sadss, PathOfArtifactFails) {
  auto x = search_non_2segal({1, 2, 3}).object;
  auto rep = check_sadss(path_of_sset(x));
  ASSERT_TRUE(rep.failed());
  EXPECT_TRUE(rep.subreports.at("double-segal").failed() || rep.subreports.at("stability").failed());
}

TEST(Retract, PassesOnCorpusAndEpsInjective) {
  for (const auto& [name, d] : d_corpus(4)) {
    auto rep = check_augmentation_retract(d);
    EXPECT_TRUE(rep.passed()) << name;
    std::set<int> image(d.eps.begin(), d.eps.end());
    EXPECT_EQ(static_cast<int>(image.size()), d.aug_size()) << name;
  }
}

TEST(Retract, NonSadssIsAPreconditionFailure) {
  auto d = path_standard_simplex(2, 3);
  d.eps[1] = d.eps[0];
  auto rep = check_augmentation_retract(d);
  ASSERT_TRUE(rep.failed());
  EXPECT_EQ(rep.instances.front().condition, "precondition");
  EXPECT_EQ(rep.instances.front().kind, FailureKind::precondition);
}

TEST(Retract, LowTruncationIsPartial) {
  EXPECT_EQ(check_augmentation_retract(path_standard_simplex(0, 1)).verdict, Verdict::partial);
}
