#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace twoseg;
using namespace twoseg::testing;

namespace {

bool contains(const std::vector<SigmaMap>& maps, const SigmaMap& f) {
  return std::find(maps.begin(), maps.end(), f) != maps.end();
}

} // namespace

TEST(Validate, PathOfSimplexPasses) {
  EXPECT_TRUE(validate_sigma(path_standard_simplex(2, 3)).passed());
}

TEST(Validate, EpsIsUnconstrained) {
  auto d = path_standard_simplex(2, 3);
  for (int u = 0; u < d.aug_size(); ++u)
    for (int y = 0; y < d.size(0, 0); ++y) {
      auto e = d;
      e.eps[u] = y;
      EXPECT_TRUE(validate_sigma(e).passed());
    }
}

TEST(Validate, CorruptedVerticalFaceNamesInstance) {
  auto d = path_standard_simplex(2, 3);
  // d^v_0 at (1,0) of the identity simplex 012, sent to a wrong element
  int x = 0;
  while (d.name(1, 0, x) != "012") ++x;
  d.vface[1][0][0][x] = (d.vface[1][0][0][x] + 1) % d.size(0, 0);
  auto rep = validate_sigma(d);
  ASSERT_TRUE(rep.failed());
  bool vertical = false;
  for (const auto& inst : rep.instances) {
    EXPECT_FALSE(inst.index.empty());
    EXPECT_FALSE(inst.witness.empty());
    if (inst.condition.rfind("dv", 0) == 0) vertical = true;
  }
  EXPECT_TRUE(vertical);
}

TEST(Validate, MissingTableIsStructural) {
  auto d = path_standard_simplex(1, 2);
  d.hface[0][1][0].pop_back();
  EXPECT_THROW(validate_sigma(d), ValidationError);
}

TEST(Hom, PointGeneratorClassifiesAugmentation) {
  for (int T : {2, 3}) {
    auto p0 = path_standard_simplex(0, T);
    for (const auto& [name, d] : d_corpus(T)) {
      auto maps = hom_sigma(p0, d);
      ASSERT_EQ(static_cast<int>(maps.size()), d.aug_size()) << name;
      std::set<int> hit;
      for (const auto& f : maps) hit.insert(component(f, T, -1, -1)[0]);
      EXPECT_EQ(static_cast<int>(hit.size()), d.aug_size()) << name;
    }
  }
}

TEST(Hom, IdentityIsASigmaMap) {
  for (const auto& [name, d] : d_corpus(2)) {
    auto maps = hom_sigma(d, d);
    EXPECT_TRUE(contains(maps, identity_map(to_presheaf(d)))) << name;
  }
}

TEST(Hom, GeneratorThreeIntoPathOfChain) {
  auto d = path_of_sset(nerve_poset(parse_poset_spec("0<1<2<3"), 3));
  auto maps = hom_sigma(path_standard_simplex(3, 3), d);
  EXPECT_EQ(maps.size(), 35u);
}

TEST(Hom, TruncationMismatchIsAnError) {
  EXPECT_THROW(hom_sigma(path_standard_simplex(1, 2), path_standard_simplex(1, 3)), PreconditionError);
}

TEST(Hom, AgreesWithNaiveEnumeration) {
  std::vector<NamedSigma> pool = d_corpus(2);
  for (int n = 0; n <= 2; ++n) pool.push_back({"generator-" + std::to_string(n), path_standard_simplex(n, 2)});
  int compared = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      auto pa = to_presheaf(a.d), pb = to_presheaf(b.d);
      if (search_space(pa, pb) > 1e6) continue;
      auto fast = hom_sigma(a.d, b.d);
      auto slow = naive_hom(pa, pb);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      EXPECT_EQ(fast, slow) << a.name << " -> " << b.name;
      ++compared;
    }
  EXPECT_GT(compared, 30);
}

TEST(Hom, ParallelSearchIsDeterministic) {
  auto d = path_of_sset(nerve_poset(parse_poset_spec("0<1<2;0<3"), 3));
  auto g = path_standard_simplex(2, 3);
  auto one = hom_sigma(g, d, {1, 0});
  auto four = hom_sigma(g, d, {4, 0});
  EXPECT_EQ(one, four);
}

TEST(Restrict, FullTruncationIsIdentity) {
  auto d = path_standard_simplex(2, 3);
  auto r = restrict_truncation(d, 3);
  EXPECT_EQ(to_presheaf(r).sizes, to_presheaf(d).sizes);
  EXPECT_EQ(r.levels, d.levels);
  EXPECT_EQ(r.vface, d.vface);
  EXPECT_EQ(r.hdegen, d.hdegen);
  EXPECT_EQ(r.eps, d.eps);
  EXPECT_THROW(restrict_truncation(d, 4), PreconditionError);
  EXPECT_THROW(restrict_truncation(d, 0), PreconditionError);
}

TEST(Restrict, RestrictionValidates) {
  for (const auto& [name, d] : d_corpus(4))
    for (int T = 1; T <= 4; ++T) EXPECT_TRUE(validate_sigma(restrict_truncation(d, T)).passed()) << name;
}

TEST(Restrict, HomFromGeneratorIsStableAboveItsDegree) {
  for (const auto& [name, d] : d_corpus(6, false)) {
    for (int n = 0; n <= 4; ++n) {
      auto low = hom_sigma(path_standard_simplex(n, n + 1), restrict_truncation(d, n + 1));
      auto high = hom_sigma(path_standard_simplex(n, n + 2), restrict_truncation(d, n + 2));
      ASSERT_EQ(low.size(), high.size()) << name << " n=" << n;
      // restricting the higher maps reproduces the lower ones
      std::vector<SigmaMap> cut;
      for (const auto& f : high) cut.push_back(restrict_map(f, n + 1));
      std::sort(cut.begin(), cut.end());
      std::sort(low.begin(), low.end());
      EXPECT_EQ(cut, low) << name << " n=" << n;
    }
  }
}

TEST(Restrict, GeneratorDegreeAloneIsUnderconstrained) {
  // At truncation 1 nothing ties the edge 01 of P Delta[1] to its endpoints.
  auto d = path_standard_simplex(1, 3);
  auto g = path_standard_simplex(1, 1);
  EXPECT_EQ(hom_sigma(g, restrict_truncation(d, 1)).size(), 2u * 2u * 3u);
  EXPECT_EQ(hom_sigma(path_standard_simplex(1, 2), restrict_truncation(d, 2)).size(), 3u);
}

TEST(Tensor, MappingSpaceIsDiscrete) {
  std::vector<NamedSigma> pool = d_corpus(2, false);
  int checked = 0;
  for (std::size_t k = 0; k < pool.size(); k += 3)
    for (int n = 0; n <= 2; ++n) {
      auto a = to_presheaf(path_standard_simplex(n, 2));
      auto b = to_presheaf(pool[k].d);
      for (int top = 1; top <= 2; ++top) {
        auto zero = hom_presheaf(tensor_standard_simplex(a, 0, top), constant_in_space(b, top));
        auto one = hom_presheaf(tensor_standard_simplex(a, 1, top), constant_in_space(b, top));
        EXPECT_EQ(zero.size(), one.size()) << pool[k].name << " n=" << n;
        EXPECT_EQ(zero.size(), hom_presheaf(a, b).size());
        auto ta = tensor_standard_simplex(a, 1, top), cb = constant_in_space(b, top);
        if (search_space(ta, cb) <= 1e6) EXPECT_EQ(naive_hom(ta, cb).size(), one.size());
        ++checked;
      }
    }
  EXPECT_GT(checked, 10);
}
