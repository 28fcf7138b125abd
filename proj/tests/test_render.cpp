#include <gtest/gtest.h>

#include <regex>

#include "twoseg/twoseg.hpp"

using namespace twoseg;

namespace {

int count(const std::string& s, const std::string& pat) {
  int n = 0;
  for (auto pos = s.find(pat); pos != std::string::npos; pos = s.find(pat, pos + 1)) ++n;
  return n;
}

} // namespace

TEST(Render, PointIsOneStar) {
  auto svg = render_svg(path_standard_simplex(0, 1));
  EXPECT_EQ(count(svg, "class=\"star\""), 1);
  EXPECT_EQ(count(svg, "class=\"dot\""), 0);
  EXPECT_EQ(count(svg, "url(#hook)"), 0);
}

TEST(Render, SimplexTwoStaircase) {
  auto d = path_standard_simplex(2, 3);
  EXPECT_EQ(generator_degree(d), 2);
  auto svg = render_svg(d);
  EXPECT_EQ(count(svg, "class=\"star\""), 3);
  EXPECT_EQ(count(svg, "class=\"dot\""), 3);
  EXPECT_EQ(count(svg, "url(#hook)"), 3);
  EXPECT_EQ(count(svg, "url(#twohead)"), 3);
}

TEST(Render, ChainOfFourHasFourRows) {
  for (int t : {3, 4, 5}) {
    auto d = path_of_sset(nerve_poset(parse_poset_spec("0<1<2<3"), t));
    EXPECT_EQ(generator_degree(d), 3) << t;
    auto svg = render_svg(d);
    EXPECT_EQ(count(svg, "class=\"star\""), 4);
    EXPECT_EQ(count(svg, "class=\"dot\""), 6);
  }
}

TEST(Render, GeneratorDegreeIgnoresTruncation) {
  for (int n = 0; n <= 3; ++n)
    for (int T = std::max(n, 1); T <= 5; ++T) EXPECT_EQ(generator_degree(path_standard_simplex(n, T)), n);
}

TEST(Render, HighDegreeRefused) {
  try {
    render_svg(path_standard_simplex(1, 6));
    FAIL();
  } catch (const PreconditionError& err) {
    EXPECT_NE(std::string(err.what()).find("at most 5"), std::string::npos);
  }
}

TEST(Render, Deterministic) {
  auto d = path_standard_simplex(3, 4);
  EXPECT_EQ(render_svg(d), render_svg(d));
  EXPECT_TRUE(std::regex_search(render_svg(d), std::regex("^<svg [^>]*viewBox")));
}
