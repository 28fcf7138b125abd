#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace twoseg;
using namespace twoseg::testing;

namespace {

template <class T>
T reparse(const std::string& kind, const T& value) {
  auto f = parse_object_text(serialize({kind, value}));
  EXPECT_EQ(f.kind, kind);
  return std::get<T>(f.body);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(Io, SimplexRoundTrip) {
  auto x = standard_simplex(2, 4);
  EXPECT_EQ(reparse("sset", x), x);
}

TEST(Io, CorpusRoundTrip) {
  for (const auto& [name, x] : x_corpus(3)) {
    EXPECT_EQ(reparse("sset", x), x) << name;
    auto d = path_of_sset(x);
    EXPECT_EQ(reparse("sigma", d), d) << name;
  }
}

TEST(Io, CategoryAndProtoRoundTrip) {
  auto c = monoid_category("g", 0);
  auto c2 = reparse("category", c);
  EXPECT_EQ(c2.objects, c.objects);
  EXPECT_EQ(c2.compose, c.compose);
  auto e = builtin_pointed_sets(3);
  auto e2 = reparse("proto-exact", e);
  EXPECT_EQ(e2.mono, e.mono);
  EXPECT_EQ(e2.epi, e.epi);
  EXPECT_EQ(e2.zero, e.zero);
  EXPECT_EQ(serialize({"proto-exact", e2}), serialize({"proto-exact", e}));
}

TEST(Io, GroupoidSigmaRoundTrip) {
  auto d = nerve_exact(builtin_pointed_sets(2), 3);
  EXPECT_EQ(reparse("groupoid-sigma", d), d);
  auto disc = discrete_groupoid_diagram(path_standard_simplex(1, 2));
  EXPECT_EQ(reparse("groupoid-sigma", disc), disc);
}

TEST(Io, MissingEntryNamesLevelAndIndex) {
  auto d = build_fixtures();
  try {
    parse_object_text(d.at("missing-face.sset"));
    FAIL() << "missing entry accepted";
  } catch (const ValidationError& err) {
    std::string msg = err.what();
    EXPECT_NE(msg.find("level 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("index 9"), std::string::npos) << msg;
  }
}

TEST(Io, UnbalancedIsAParseError) {
  EXPECT_THROW(parse_object_text(build_fixtures().at("unbalanced.sset")), ParseError);
  EXPECT_THROW(parse_object_text("[1, 2]"), ParseError);
  EXPECT_THROW(parse_object_text("{\"truncation\": 1}"), ParseError);
}

TEST(Io, UnknownKind) {
  try {
    parse_object_text("{\"kind\": \"tensor\"}");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find("tensor"), std::string::npos);
  }
}

TEST(Io, UnknownNameInTable) {
  auto j = to_json(ObjectFile{"sset", standard_simplex(1, 2)});
  j["faces"]["1,0"][0] = "nowhere";
  EXPECT_THROW(parse_object_text(j.dump()), ValidationError);
}

TEST(Io, CompositionByPositionOrName) {
  auto d = discrete_groupoid_diagram(path_standard_simplex(0, 1));
  auto j = to_json(ObjectFile{"groupoid-sigma", d});
  auto& comp = j["augmentation"]["composition"];
  ASSERT_EQ(comp.size(), 1u);
  EXPECT_TRUE(comp[0][0].is_number_integer());
  const std::string id = j["augmentation"]["morphisms"][0][0].get<std::string>();
  comp[0] = {id, id, id};
  EXPECT_EQ(std::get<GroupoidSigmaDiagram>(parse_object_text(j.dump()).body), d);
  comp[0] = {0, 0, 7};
  EXPECT_THROW(parse_object_text(j.dump()), ValidationError);
}

TEST(Io, FixturesAreCurrent) {
  for (const auto& [name, text] : build_fixtures())
    EXPECT_EQ(read_file(std::string(TWOSEG_FIXTURE_DIR) + "/" + name), text) << name;
}

TEST(Io, ValidationReportWrapsStructuralErrors) {
  auto f = parse_object_text(build_fixtures().at("swapped.proto"));
  auto rep = validation_report(f);
  ASSERT_TRUE(rep.failed());
  EXPECT_EQ(rep.instances.front().condition, "validate");
  EXPECT_NE(rep.instances.front().witness.front().find("initial"), std::string::npos);
}
