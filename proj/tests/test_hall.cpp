#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace twoseg;
using namespace twoseg::testing;

namespace {

/// Counts 2-simplices directly from the face tables.
std::int64_t naive_constant(const TruncatedSimplicialSet& x, int a, int b, int c) {
  std::int64_t n = 0;
  for (int s = 0; s < x.size(2); ++s) n += x.d(2, 2, s) == a && x.d(2, 0, s) == b && x.d(2, 1, s) == c;
  return n;
}

int edge(const TruncatedSimplicialSet& x, const std::string& name) {
  for (int e = 0; e < x.size(1); ++e)
    if (x.name(1, e) == name) return e;
  return -1;
}

} // namespace

TEST(Hall, PointHasOneBasisElement) {
  auto s = structure_constants(standard_simplex(0, 3));
  ASSERT_EQ(s.size(), 1);
  EXPECT_EQ(s(0, 0, 0), 1);
  EXPECT_TRUE(check_associativity(s).passed());
}

TEST(Hall, SimplexConstants) {
  auto x = standard_simplex(2, 3);
  auto s = structure_constants(x);
  EXPECT_EQ(s(edge(x, "01"), edge(x, "12"), edge(x, "02")), 1);
  EXPECT_EQ(s(edge(x, "12"), edge(x, "01"), edge(x, "02")), 0);
  EXPECT_EQ(s(edge(x, "00"), edge(x, "01"), edge(x, "01")), 1);
}

TEST(Hall, MatchesDirectCount) {
  for (const auto& [name, x] : x_corpus(3)) {
    auto s = structure_constants(x);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        for (int c = 0; c < s.size(); ++c) ASSERT_EQ(s(a, b, c), naive_constant(x, a, b, c)) << name;
  }
}

TEST(Hall, NerveGivesCategoryAlgebra) {
  std::vector<FiniteCategoryData> cats{monoid_category("g", 0), monoid_category("p", 1)};
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : posets_up_to_iso(n)) cats.push_back(poset_category(p));
  for (const auto& c : cats) {
    auto x = nerve_category(c, 3);
    EXPECT_EQ(structure_constants(x), category_algebra(c, x));
  }
}

TEST(Hall, CorpusIsAssociative) {
  for (const auto& [name, x] : x_corpus(3)) {
    auto s = structure_constants(x);
    EXPECT_TRUE(check_associativity(s).passed()) << name;
    EXPECT_EQ(naive_assoc_defect(s), 0) << name;
  }
}

TEST(Hall, ArtifactFailsWithWitness) {
  auto x = search_non_2segal({1, 2, 3}).object;
  auto s = structure_constants(x);
  auto rep = check_associativity(s);
  ASSERT_TRUE(rep.failed());
  EXPECT_GT(naive_assoc_defect(s), 0);
  const auto& inst = rep.instances.front();
  ASSERT_EQ(inst.index.size(), 4u);
  ASSERT_EQ(inst.witness.size(), 6u);
  std::int64_t lhs = 0, rhs = 0;
  for (int e = 0; e < s.size(); ++e) {
    lhs += s(inst.index[0], inst.index[1], e) * s(e, inst.index[2], inst.index[3]);
    rhs += s(inst.index[1], inst.index[2], e) * s(inst.index[0], e, inst.index[3]);
  }
  EXPECT_NE(lhs, rhs);
  EXPECT_EQ(inst.witness[4], "lhs=" + std::to_string(lhs));
  EXPECT_EQ(inst.witness[5], "rhs=" + std::to_string(rhs));
}

TEST(Hall, JobsDoNotChangeTheWitness) {
  auto s = structure_constants(search_non_2segal({1, 2, 3}).object);
  auto one = check_associativity(s, 1), four = check_associativity(s, 4);
  ASSERT_EQ(one.instances.size(), 1u);
  EXPECT_EQ(one.instances.front().index, four.instances.front().index);
}

TEST(Hall, TruncationOneRefused) {
  EXPECT_THROW(structure_constants(standard_simplex(1, 1)), PreconditionError);
}

TEST(Hall, JsonListsNonzeroConstants) {
  auto j = to_json(structure_constants(standard_simplex(1, 2)));
  EXPECT_EQ(j["basis"].size(), 3u);
  // 00.00=00, 00.01=01, 01.11=01, 11.11=11
  EXPECT_EQ(j["constants"].size(), 4u);
}
