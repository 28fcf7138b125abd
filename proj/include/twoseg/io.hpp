#pragma once

// JSON object files: sset, sigma, groupoid-sigma, category, proto-exact.
// Levels are arrays of id strings; maps are arrays of target ids aligned with
// the source level, keyed "n,i" (sset) or "a,b" (sigma).

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twoseg/error.hpp"
#include "twoseg/groupoid_sigma.hpp"
#include "twoseg/nerve_exact.hpp"
#include "twoseg/sigma.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

using json = nlohmann::json;

using ObjectBody = std::variant<TruncatedSimplicialSet, PreaugBisimplicialSet, GroupoidSigmaDiagram,
                                FiniteCategoryData, ProtoExactData>;

struct ObjectFile {
  std::string kind;
  ObjectBody body;
};

namespace io_detail {

inline std::string key2(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

inline const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

inline int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

inline std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of ids");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(where + ": ids must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::map<std::string, int> index_of(const std::vector<std::string>& ids, const std::string& where) {
  std::map<std::string, int> out;
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (!out.emplace(ids[k], static_cast<int>(k)).second)
      throw ValidationError(where + ": duplicate id '" + ids[k] + "'");
  return out;
}

/// A map table: one target id per source element, in source order.
inline std::vector<int> table(const json* j, const std::vector<std::string>& source,
                              const std::map<std::string, int>& target, const std::string& where) {
  if (!j) throw ValidationError(where + ": missing table");
  if (!j->is_array()) throw ParseError(where + ": expected an array of ids");
  std::vector<int> out;
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (k >= j->size() || (*j)[k].is_null())
      throw ValidationError(where + ": missing entry for '" + source[k] + "' (index " +
                            std::to_string(k) + ")");
    if (!(*j)[k].is_string()) throw ParseError(where + ": ids must be strings");
    auto it = target.find((*j)[k].get<std::string>());
    if (it == target.end())
      throw ValidationError(where + ": entry for '" + source[k] + "' names unknown id '" +
                            (*j)[k].get<std::string>() + "'");
    out.push_back(it->second);
  }
  if (j->size() > source.size()) throw ValidationError(where + ": table longer than its source level");
  return out;
}

inline const json* find(const json& obj, const std::string& key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

inline const json* at_index(const json* arr, std::size_t k, const std::string& where) {
  if (!arr) return nullptr;
  if (!arr->is_array()) throw ParseError(where + ": expected an array of tables");
  return k < arr->size() ? &(*arr)[k] : nullptr;
}

inline json names_of(const std::vector<int>& tab, const std::vector<std::string>& target) {
  json out = json::array();
  for (int x : tab) out.push_back(target.at(x));
  return out;
}

inline const json& object_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_object()) throw ParseError(where + ": field '" + key + "' must be an object");
  return v;
}

} // namespace io_detail

// ---------------------------------------------------------------------------
// Simplicial sets

inline json to_json(const TruncatedSimplicialSet& x) {
  using io_detail::names_of;
  json faces = json::object(), degens = json::object();
  for (int n = 1; n <= x.truncation; ++n)
    for (int i = 0; i <= n; ++i) faces[std::to_string(n) + "," + std::to_string(i)] = names_of(x.faces[n][i], x.names[n - 1]);
  for (int n = 0; n < x.truncation; ++n)
    for (int i = 0; i <= n; ++i)
      degens[std::to_string(n) + "," + std::to_string(i)] = names_of(x.degens[n][i], x.names[n + 1]);
  return {{"kind", "sset"}, {"truncation", x.truncation}, {"levels", x.names},
          {"faces", faces}, {"degeneracies", degens}};
}

inline TruncatedSimplicialSet sset_from_json(const json& j) {
  using namespace io_detail;
  int t = integer(require(j, "truncation", "sset"), "sset.truncation");
  if (t < 0) throw ValidationError("sset: truncation must be non-negative");
  const json& lv = require(j, "levels", "sset");
  if (!lv.is_array()) throw ParseError("sset.levels: expected an array of levels");
  if (static_cast<int>(lv.size()) != t + 1)
    throw ValidationError("sset: expected " + std::to_string(t + 1) + " levels, found " +
                          std::to_string(lv.size()));
  std::vector<std::vector<std::string>> names;
  std::vector<std::map<std::string, int>> idx;
  for (int n = 0; n <= t; ++n) {
    names.push_back(strings(lv[n], "sset.levels[" + std::to_string(n) + "]"));
    idx.push_back(index_of(names.back(), "level " + std::to_string(n)));
  }
  auto x = TruncatedSimplicialSet::with_levels(names);
  const json& faces = object_field(j, "faces", "sset");
  const json& degens = object_field(j, "degeneracies", "sset");
  for (int n = 1; n <= t; ++n)
    for (int i = 0; i <= n; ++i) {
      std::string k = key2(n, i);
      x.faces[n][i] = table(find(faces, k), names[n], idx[n - 1], "face d_" + std::to_string(i) +
                                                                     " at level " + std::to_string(n));
    }
  for (int n = 0; n < t; ++n)
    for (int i = 0; i <= n; ++i) {
      std::string k = key2(n, i);
      x.degens[n][i] = table(find(degens, k), names[n], idx[n + 1],
                             "degeneracy s_" + std::to_string(i) + " at level " + std::to_string(n));
    }
  return x;
}

// ---------------------------------------------------------------------------
// Sigma-sets

inline json to_json(const PreaugBisimplicialSet& d) {
  using io_detail::key2;
  using io_detail::names_of;
  const int T = d.total_truncation;
  json levels = json::object(), vf = json::object(), vs = json::object(), hf = json::object(),
       hs = json::object();
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      levels[key2(a, b)] = d.levels[a][b];
      if (a >= 1) {
        json tabs = json::array();
        for (const auto& t : d.vface[a][b]) tabs.push_back(names_of(t, d.levels[a - 1][b]));
        vf[key2(a, b)] = tabs;
      }
      if (b >= 1) {
        json tabs = json::array();
        for (const auto& t : d.hface[a][b]) tabs.push_back(names_of(t, d.levels[a][b - 1]));
        hf[key2(a, b)] = tabs;
      }
      if (a + 2 + b <= T) {
        json vt = json::array(), ht = json::array();
        for (const auto& t : d.vdegen[a][b]) vt.push_back(names_of(t, d.levels[a + 1][b]));
        for (const auto& t : d.hdegen[a][b]) ht.push_back(names_of(t, d.levels[a][b + 1]));
        vs[key2(a, b)] = vt;
        hs[key2(a, b)] = ht;
      }
    }
  return {{"kind", "sigma"},
          {"total_truncation", T},
          {"augmentation", d.augmentation},
          {"levels", levels},
          {"vertical_faces", vf},
          {"vertical_degeneracies", vs},
          {"horizontal_faces", hf},
          {"horizontal_degeneracies", hs},
          {"eps", names_of(d.eps, d.levels[0][0])}};
}

inline PreaugBisimplicialSet sigma_from_json(const json& j) {
  using namespace io_detail;
  int T = integer(require(j, "total_truncation", "sigma"), "sigma.total_truncation");
  if (T < 1) throw ValidationError("sigma: total truncation must be >= 1");
  auto aug = strings(require(j, "augmentation", "sigma"), "sigma.augmentation");
  auto aug_idx = index_of(aug, "level -1");
  const json& levels = object_field(j, "levels", "sigma");
  std::map<std::pair<int, int>, std::map<std::string, int>> idx;
  auto d = PreaugBisimplicialSet::with_levels(T, aug, [&](int a, int b) {
    const json* lv = find(levels, key2(a, b));
    if (!lv) throw ValidationError("sigma: level " + key2(a, b) + " missing");
    auto names = strings(*lv, "sigma.levels." + key2(a, b));
    idx[{a, b}] = index_of(names, "level " + key2(a, b));
    return names;
  });
  const json& vf = object_field(j, "vertical_faces", "sigma");
  const json& vs = object_field(j, "vertical_degeneracies", "sigma");
  const json& hf = object_field(j, "horizontal_faces", "sigma");
  const json& hs = object_field(j, "horizontal_degeneracies", "sigma");
  auto where = [&](const char* what, int a, int b, int i) {
    return std::string(what) + " " + std::to_string(i) + " at level " + key2(a, b);
  };
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      const auto& src = d.levels[a][b];
      for (int i = 0; a >= 1 && i <= a; ++i) {
        auto w = where("vertical face", a, b, i);
        d.vface[a][b][i] = table(at_index(find(vf, key2(a, b)), i, w), src, idx[{a - 1, b}], w);
      }
      for (int i = 0; b >= 1 && i <= b; ++i) {
        auto w = where("horizontal face", a, b, i);
        d.hface[a][b][i] = table(at_index(find(hf, key2(a, b)), i, w), src, idx[{a, b - 1}], w);
      }
      if (a + 2 + b <= T) {
        for (int i = 0; i <= a; ++i) {
          auto w = where("vertical degeneracy", a, b, i);
          d.vdegen[a][b][i] = table(at_index(find(vs, key2(a, b)), i, w), src, idx[{a + 1, b}], w);
        }
        for (int i = 0; i <= b; ++i) {
          auto w = where("horizontal degeneracy", a, b, i);
          d.hdegen[a][b][i] = table(at_index(find(hs, key2(a, b)), i, w), src, idx[{a, b + 1}], w);
        }
      }
    }
  d.eps = table(find(j, "eps"), aug, idx[{0, 0}], "eps");
  return d;
}

// ---------------------------------------------------------------------------
// Categories and groupoids

namespace io_detail {

inline json morphism_list(const std::vector<std::string>& objects, const std::vector<Morphism>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back({m.name, objects.at(m.source), objects.at(m.target)});
  return out;
}

inline std::vector<Morphism> morphisms_from(const json& j, const std::map<std::string, int>& objects,
                                            const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of [name, source, target]");
  std::vector<Morphism> out;
  for (const auto& m : j) {
    if (!m.is_array() || m.size() != 3 || !m[0].is_string() || !m[1].is_string() || !m[2].is_string())
      throw ParseError(where + ": each morphism is [name, source, target]");
    auto s = objects.find(m[1].get<std::string>());
    auto t = objects.find(m[2].get<std::string>());
    if (s == objects.end() || t == objects.end())
      throw ValidationError(where + ": morphism '" + m[0].get<std::string>() + "' has an unknown endpoint");
    out.push_back({m[0].get<std::string>(), s->second, t->second});
  }
  return out;
}

inline std::vector<std::array<int, 3>> triples_from(const json& j, const std::map<std::string, int>& ms,
                                                    const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of [g, f, g o f]");
  std::vector<std::array<int, 3>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError(where + ": each entry is [g, f, g o f]");
    std::array<int, 3> tr{};
    for (int k = 0; k < 3; ++k) {
      if (t[k].is_number_integer()) {
        auto v = t[k].get<long long>();
        if (v < 0 || v >= static_cast<long long>(ms.size()))
          throw ValidationError(where + ": morphism position " + std::to_string(v) + " out of range");
        tr[k] = static_cast<int>(v);
        continue;
      }
      if (!t[k].is_string()) throw ParseError(where + ": morphism ids must be strings or positions");
      auto it = ms.find(t[k].get<std::string>());
      if (it == ms.end())
        throw ValidationError(where + ": unknown morphism '" + t[k].get<std::string>() + "'");
      tr[k] = it->second;
    }
    out.push_back(tr);
  }
  return out;
}

} // namespace io_detail

inline json category_body(const FiniteCategoryData& c) {
  json comp = json::array();
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g)
      if (c.compose[g][f] >= 0)
        comp.push_back({c.morphisms[g].name, c.morphisms[f].name, c.morphisms[c.compose[g][f]].name});
  json ids = json::array();
  for (int id : c.identities) ids.push_back(c.morphisms.at(id).name);
  return {{"objects", c.objects},
          {"morphisms", io_detail::morphism_list(c.objects, c.morphisms)},
          {"identities", ids},
          {"composition", comp}};
}

inline json to_json(const FiniteCategoryData& c) {
  json j = category_body(c);
  j["kind"] = "category";
  return j;
}

inline FiniteCategoryData category_from_json(const json& j, const std::string& where = "category") {
  using namespace io_detail;
  FiniteCategoryData c;
  c.objects = strings(require(j, "objects", where), where + ".objects");
  auto oidx = index_of(c.objects, where + " objects");
  c.morphisms = morphisms_from(require(j, "morphisms", where), oidx, where + ".morphisms");
  std::vector<std::string> mnames;
  for (const auto& m : c.morphisms) mnames.push_back(m.name);
  auto midx = index_of(mnames, where + " morphisms");
  c.identities = table(find(j, "identities"), c.objects, midx, where + " identities");
  c.set_composition(triples_from(require(j, "composition", where), midx, where + ".composition"));
  return c;
}

inline json to_json(const FiniteGroupoid& g) {
  std::vector<Morphism> ms;
  for (int m = 0; m < g.morphism_count(); ++m) ms.push_back({g.morphisms[m], g.source[m], g.target[m]});
  std::vector<std::array<int, 3>> comp;
  for (const auto& [key, gf] : g.composition)
    comp.push_back({static_cast<int>(key & 0xffffffffU), static_cast<int>(key >> 32), gf});
  std::sort(comp.begin(), comp.end());
  json cj = json::array();
  // Composites are written as morphism positions.
  for (auto [f, h, hf] : comp) cj.push_back({h, f, hf});
  json ids = json::array(), inv = json::array();
  for (int id : g.identity) ids.push_back(g.morphisms.at(id));
  for (int i : g.inverse) inv.push_back(g.morphisms.at(i));
  return {{"objects", g.objects},
          {"morphisms", io_detail::morphism_list(g.objects, ms)},
          {"identities", ids},
          {"inverses", inv},
          {"composition", cj}};
}

inline FiniteGroupoid groupoid_from_json(const json& j, const std::string& where) {
  using namespace io_detail;
  FiniteGroupoid g;
  auto objects = strings(require(j, "objects", where), where + ".objects");
  auto oidx = index_of(objects, where + " objects");
  for (const auto& o : objects) g.add_object(o);
  auto ms = morphisms_from(require(j, "morphisms", where), oidx, where + ".morphisms");
  for (const auto& m : ms) g.add_morphism(m.name, m.source, m.target);
  auto midx = index_of(g.morphisms, where + " morphisms");
  g.identity = table(find(j, "identities"), g.objects, midx, where + " identities");
  g.inverse = table(find(j, "inverses"), g.morphisms, midx, where + " inverses");
  for (auto [h, f, hf] : triples_from(require(j, "composition", where), midx, where + ".composition"))
    if (!g.composition.emplace(FiniteGroupoid::key(h, f), hf).second)
      throw ValidationError(where + ": composite '" + g.morphisms[h] + "' o '" + g.morphisms[f] +
                            "' listed twice");
  return g;
}

inline json to_json(const GroupoidFunctor& f, const FiniteGroupoid& target) {
  return {{"objects", io_detail::names_of(f.objects, target.objects)},
          {"morphisms", io_detail::names_of(f.morphisms, target.morphisms)}};
}

inline GroupoidFunctor functor_from_json(const json* j, const FiniteGroupoid& source,
                                         const FiniteGroupoid& target, const std::string& where) {
  using namespace io_detail;
  if (!j) throw ValidationError(where + ": missing functor");
  if (!j->is_object()) throw ParseError(where + ": a functor is an object with objects and morphisms");
  GroupoidFunctor f;
  auto oidx = index_of(target.objects, where + " target objects");
  auto midx = index_of(target.morphisms, where + " target morphisms");
  f.objects = table(find(*j, "objects"), source.objects, oidx, where + " objects");
  f.morphisms = table(find(*j, "morphisms"), source.morphisms, midx, where + " morphisms");
  return f;
}

inline json to_json(const GroupoidSigmaDiagram& d) {
  using io_detail::key2;
  const int T = d.total_truncation;
  json levels = json::object(), vf = json::object(), vs = json::object(), hf = json::object(),
       hs = json::object();
  auto list = [&](const std::vector<GroupoidFunctor>& fs, const FiniteGroupoid& target) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(to_json(f, target));
    return out;
  };
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      levels[key2(a, b)] = to_json(d.levels[a][b]);
      if (a >= 1) vf[key2(a, b)] = list(d.vface[a][b], d.level(a - 1, b));
      if (b >= 1) hf[key2(a, b)] = list(d.hface[a][b], d.level(a, b - 1));
      if (a + 2 + b <= T) {
        vs[key2(a, b)] = list(d.vdegen[a][b], d.level(a + 1, b));
        hs[key2(a, b)] = list(d.hdegen[a][b], d.level(a, b + 1));
      }
    }
  return {{"kind", "groupoid-sigma"},
          {"total_truncation", T},
          {"augmentation", to_json(d.augmentation)},
          {"levels", levels},
          {"vertical_faces", vf},
          {"vertical_degeneracies", vs},
          {"horizontal_faces", hf},
          {"horizontal_degeneracies", hs},
          {"eps", to_json(d.eps, d.level(0, 0))}};
}

inline GroupoidSigmaDiagram groupoid_sigma_from_json(const json& j) {
  using namespace io_detail;
  int T = integer(require(j, "total_truncation", "groupoid-sigma"), "groupoid-sigma.total_truncation");
  if (T < 1) throw ValidationError("groupoid-sigma: total truncation must be >= 1");
  GroupoidSigmaDiagram d;
  d.resize(T);
  d.augmentation = groupoid_from_json(require(j, "augmentation", "groupoid-sigma"), "level -1");
  const json& levels = object_field(j, "levels", "groupoid-sigma");
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      const json* lv = find(levels, key2(a, b));
      if (!lv) throw ValidationError("groupoid-sigma: level " + key2(a, b) + " missing");
      d.levels[a][b] = groupoid_from_json(*lv, "level " + key2(a, b));
    }
  const json& vf = object_field(j, "vertical_faces", "groupoid-sigma");
  const json& vs = object_field(j, "vertical_degeneracies", "groupoid-sigma");
  const json& hf = object_field(j, "horizontal_faces", "groupoid-sigma");
  const json& hs = object_field(j, "horizontal_degeneracies", "groupoid-sigma");
  auto where = [&](const char* what, int a, int b, int i) {
    return std::string(what) + " " + std::to_string(i) + " at level " + key2(a, b);
  };
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      const auto& src = d.levels[a][b];
      for (int i = 0; a >= 1 && i <= a; ++i) {
        auto w = where("vertical face", a, b, i);
        d.vface[a][b][i] = functor_from_json(at_index(find(vf, key2(a, b)), i, w), src, d.level(a - 1, b), w);
      }
      for (int i = 0; b >= 1 && i <= b; ++i) {
        auto w = where("horizontal face", a, b, i);
        d.hface[a][b][i] = functor_from_json(at_index(find(hf, key2(a, b)), i, w), src, d.level(a, b - 1), w);
      }
      if (a + 2 + b <= T) {
        for (int i = 0; i <= a; ++i) {
          auto w = where("vertical degeneracy", a, b, i);
          d.vdegen[a][b][i] =
              functor_from_json(at_index(find(vs, key2(a, b)), i, w), src, d.level(a + 1, b), w);
        }
        for (int i = 0; i <= b; ++i) {
          auto w = where("horizontal degeneracy", a, b, i);
          d.hdegen[a][b][i] =
              functor_from_json(at_index(find(hs, key2(a, b)), i, w), src, d.level(a, b + 1), w);
        }
      }
    }
  d.eps = functor_from_json(find(j, "eps"), d.augmentation, d.level(0, 0), "eps");
  return d;
}

// ---------------------------------------------------------------------------
// Proto-exact data

inline json to_json(const ProtoExactData& e) {
  const auto& c = e.category;
  json monos = json::array(), epis = json::array(), zeros = json::array();
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (e.mono[m]) monos.push_back(c.morphisms[m].name);
    if (e.epi[m]) epis.push_back(c.morphisms[m].name);
  }
  for (int o = 0; o < c.object_count(); ++o)
    if (e.zero[o]) zeros.push_back(c.objects[o]);
  auto squares = [&](const std::map<std::pair<int, int>, ExactSquare>& tab) {
    json out = json::array();
    for (const auto& [key, s] : tab)
      out.push_back({c.morphisms[s.top].name, c.morphisms[s.left].name, c.morphisms[s.right].name,
                     c.morphisms[s.bottom].name});
    return out;
  };
  return {{"kind", "proto-exact"}, {"category", category_body(c)}, {"monos", monos},
          {"epis", epis}, {"zeros", zeros}, {"pullbacks", squares(e.pullbacks)},
          {"pushouts", squares(e.pushouts)}};
}

inline ProtoExactData proto_exact_from_json(const json& j) {
  using namespace io_detail;
  ProtoExactData e;
  e.category = category_from_json(require(j, "category", "proto-exact"), "proto-exact.category");
  const auto& c = e.category;
  std::map<std::string, int> midx, oidx;
  for (int m = 0; m < c.morphism_count(); ++m) midx[c.morphisms[m].name] = m;
  for (int o = 0; o < c.object_count(); ++o) oidx[c.objects[o]] = o;
  auto flags = [&](const char* key, const std::map<std::string, int>& idx, int n) {
    std::vector<bool> out(n, false);
    for (const auto& name : strings(require(j, key, "proto-exact"), std::string("proto-exact.") + key)) {
      auto it = idx.find(name);
      if (it == idx.end())
        throw ValidationError(std::string("proto-exact ") + key + ": unknown id '" + name + "'");
      out[it->second] = true;
    }
    return out;
  };
  e.mono = flags("monos", midx, c.morphism_count());
  e.epi = flags("epis", midx, c.morphism_count());
  e.zero = flags("zeros", oidx, c.object_count());
  auto squares = [&](const char* key, bool by_cospan) {
    std::map<std::pair<int, int>, ExactSquare> out;
    const json& arr = require(j, key, "proto-exact");
    if (!arr.is_array()) throw ParseError(std::string("proto-exact.") + key + ": expected an array");
    for (const auto& sq : arr) {
      auto ids = strings(sq, std::string("proto-exact.") + key);
      if (ids.size() != 4)
        throw ParseError(std::string("proto-exact.") + key + ": a square is [top, left, right, bottom]");
      int v[4];
      for (int k = 0; k < 4; ++k) {
        auto it = midx.find(ids[k]);
        if (it == midx.end())
          throw ValidationError(std::string("proto-exact ") + key + ": unknown morphism '" + ids[k] + "'");
        v[k] = it->second;
      }
      ExactSquare s{v[0], v[1], v[2], v[3]};
      out[by_cospan ? std::make_pair(s.bottom, s.right) : std::make_pair(s.top, s.left)] = s;
    }
    return out;
  };
  e.pullbacks = squares("pullbacks", true);
  e.pushouts = squares("pushouts", false);
  return e;
}

// ---------------------------------------------------------------------------
// Files

inline json to_json(const ObjectFile& f) {
  return std::visit([](const auto& body) { return to_json(body); }, f.body);
}

inline ObjectFile object_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("object file: top level must be a JSON object");
  const json& kind = io_detail::require(j, "kind", "object file");
  if (!kind.is_string()) throw ParseError("object file: 'kind' must be a string");
  std::string k = kind.get<std::string>();
  try {
    if (k == "sset") return {k, sset_from_json(j)};
    if (k == "sigma") return {k, sigma_from_json(j)};
    if (k == "groupoid-sigma") return {k, groupoid_sigma_from_json(j)};
    if (k == "category") return {k, category_from_json(j)};
    if (k == "proto-exact") return {k, proto_exact_from_json(j)};
  } catch (const json::exception& ex) {
    throw ParseError(k + ": " + ex.what());
  }
  throw ParseError("object file: unknown kind '" + k + "'");
}

inline ObjectFile parse_object_text(const std::string& text, const std::string& origin = "<input>") {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(origin + ": " + ex.what());
  }
  try {
    return object_from_json(j);
  } catch (const ParseError& ex) {
    throw ParseError(origin + ": " + ex.what());
  } catch (const ValidationError& ex) {
    throw ValidationError(origin + ": " + ex.what());
  }
}

/// Reads and structurally checks an object file; law checks are left to
/// validation_report.
inline ObjectFile parse_object_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_object_text(ss.str(), path);
}

inline std::string serialize(const ObjectFile& f) { return to_json(f).dump(2) + "\n"; }

inline void write_object_file(const std::string& path, const ObjectFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << serialize(f);
}

/// Law checks for the object's kind. Structural violations become a single
/// failed instance rather than an exception.
inline CheckReport validation_report(const ObjectFile& f) {
  auto structural = [](const std::string& what, const std::exception& ex) {
    CheckReport rep;
    rep.scope = what;
    ++rep.checked;
    rep.fail({"validate", {}, what, FailureKind::structural, {ex.what()}});
    return rep;
  };
  try {
    if (auto* x = std::get_if<TruncatedSimplicialSet>(&f.body)) return validate_simplicial(*x);
    if (auto* d = std::get_if<PreaugBisimplicialSet>(&f.body)) return validate_sigma(*d);
    if (auto* g = std::get_if<GroupoidSigmaDiagram>(&f.body)) return validate_groupoid_sigma(*g);
    if (auto* c = std::get_if<FiniteCategoryData>(&f.body)) {
      validate_category(*c);
      CheckReport rep;
      rep.scope = "category axioms";
      rep.checked = 1;
      return rep;
    }
    const auto& e = std::get<ProtoExactData>(f.body);
    validate_proto_exact(e);
    CheckReport rep;
    rep.scope = "proto-exact axioms";
    rep.checked = 1;
    return rep;
  } catch (const ValidationError& ex) {
    return structural(f.kind + " structure", ex);
  }
}

} // namespace twoseg
