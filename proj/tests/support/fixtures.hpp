#pragma once

#include <map>
#include <string>

#include "support/corpus.hpp"
#include "twoseg/twoseg.hpp"

namespace twoseg::testing {

/// File name -> exact file contents for everything under tests/fixtures.
inline std::map<std::string, std::string> build_fixtures() {
  std::map<std::string, std::string> out;
  auto x = nerve_poset(parse_poset_spec("0<1<2"), 3);
  out["nerve-poset-3.sset"] = serialize({"sset", x});

  auto p = path_standard_simplex(2, 3);
  out["path-simplex-2.sigma"] = serialize({"sigma", p});

  out["category-z2.category"] = serialize({"category", monoid_category("g", 0)});
  out["pointed-sets-2.proto"] = serialize({"proto-exact", builtin_pointed_sets(2)});

  // d_0 of the 2-simplex 012 rewired from 12 to 11.
  auto bad_face = x;
  bad_face.faces[2][0][4] = 3;
  out["corrupt-face.sset"] = serialize({"sset", bad_face});

  json missing = to_json(ObjectFile{"sset", x});
  missing["faces"]["2,0"].erase(missing["faces"]["2,0"].size() - 1);
  out["missing-face.sset"] = missing.dump(2) + "\n";

  std::string text = serialize({"sset", x});
  out["unbalanced.sset"] = text.substr(0, text.size() - 3) + "\n";

  // eps sends the vertex 1 to 00 instead of 11.
  auto bad_eps = p;
  bad_eps.eps[1] = p.eps[0];
  out["corrupt-eps.sigma"] = serialize({"sigma", bad_eps});

  auto swapped = swap_mono_epi(builtin_pointed_sets(3));
  out["swapped.proto"] = serialize({"proto-exact", swapped});
  out["swapped.gsigma"] = serialize({"groupoid-sigma", nerve_exact(swapped, 3, {false})});

  out["search-artifact.sset"] = serialize({"sset", search_non_2segal({1, 2, 3}).object});
  return out;
}

} // namespace twoseg::testing
