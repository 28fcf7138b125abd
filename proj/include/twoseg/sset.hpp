#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/hom_search.hpp"
#include "twoseg/monotone.hpp"
#include "twoseg/presheaf.hpp"
#include "twoseg/report.hpp"
#include "twoseg/simplicial_identities.hpp"

namespace twoseg {

inline constexpr int kMissing = -1;

/// Levels X_0..X_t with dense face and degeneracy tables over element indices.
struct TruncatedSimplicialSet {
  int truncation = 0;
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<int>>> faces;   // faces[n][i], 1 <= n <= t
  std::vector<std::vector<std::vector<int>>> degens;  // degens[n][i], 0 <= n < t

  int size(int n) const { return static_cast<int>(names.at(n).size()); }
  int d(int n, int i, int x) const { return faces[n][i][x]; }
  int s(int n, int i, int x) const { return degens[n][i][x]; }
  const std::string& name(int n, int x) const { return names[n][x]; }

  /// Allocates tables for the given level names with every entry missing.
  static TruncatedSimplicialSet with_levels(std::vector<std::vector<std::string>> levels) {
    if (levels.empty()) throw PreconditionError("simplicial set needs at least level 0");
    TruncatedSimplicialSet x;
    x.truncation = static_cast<int>(levels.size()) - 1;
    x.names = std::move(levels);
    x.faces.resize(x.truncation + 1);
    x.degens.resize(x.truncation + 1);
    for (int n = 1; n <= x.truncation; ++n)
      x.faces[n].assign(n + 1, std::vector<int>(x.names[n].size(), kMissing));
    for (int n = 0; n < x.truncation; ++n)
      x.degens[n].assign(n + 1, std::vector<int>(x.names[n].size(), kMissing));
    return x;
  }

  friend bool operator==(const TruncatedSimplicialSet&, const TruncatedSimplicialSet&) = default;
};

using SimplicialMap = PresheafMap;

/// Throws ValidationError on malformed tables (sizes, missing or out-of-range
/// entries, duplicate identifiers).
inline void check_structure(const TruncatedSimplicialSet& x) {
  const int t = x.truncation;
  if (t < 0 || static_cast<int>(x.names.size()) != t + 1)
    throw ValidationError("simplicial set: level count does not match truncation " +
                          std::to_string(t));
  for (int n = 0; n <= t; ++n) {
    std::set<std::string> seen;
    for (const auto& id : x.names[n])
      if (!seen.insert(id).second)
        throw ValidationError("level " + std::to_string(n) + ": duplicate element '" + id + "'");
  }
  auto check_table = [&](const std::vector<int>& table, int src, int tgt, const char* what,
                         int n, int i) {
    const std::string where = std::string(what) + " (" + std::to_string(n) + "," +
                              std::to_string(i) + ")";
    if (static_cast<int>(table.size()) != x.size(src))
      throw ValidationError(where + ": table has wrong length");
    for (int e = 0; e < x.size(src); ++e) {
      if (table[e] == kMissing)
        throw ValidationError(where + ": missing entry for '" + x.name(src, e) + "'");
      if (table[e] < 0 || table[e] >= x.size(tgt))
        throw ValidationError(where + ": entry for '" + x.name(src, e) + "' out of range");
    }
  };
  if (static_cast<int>(x.faces.size()) != t + 1 || static_cast<int>(x.degens.size()) != t + 1)
    throw ValidationError("simplicial set: table arrays do not match truncation");
  for (int n = 1; n <= t; ++n) {
    if (static_cast<int>(x.faces[n].size()) != n + 1)
      throw ValidationError("face tables at level " + std::to_string(n) + " incomplete");
    for (int i = 0; i <= n; ++i) check_table(x.faces[n][i], n, n - 1, "face", n, i);
  }
  for (int n = 0; n < t; ++n) {
    if (static_cast<int>(x.degens[n].size()) != n + 1)
      throw ValidationError("degeneracy tables at level " + std::to_string(n) + " incomplete");
    for (int i = 0; i <= n; ++i) check_table(x.degens[n][i], n, n + 1, "degeneracy", n, i);
  }
}

inline CheckReport validate_simplicial(const TruncatedSimplicialSet& x) {
  check_structure(x);
  CheckReport rep;
  rep.scope = "verified up to degree " + std::to_string(x.truncation);
  SimplicialDirection dir;
  dir.top = x.truncation;
  dir.size = [&](int n) { return x.size(n); };
  dir.face = [&](int n, int i, int e) { return x.d(n, i, e); };
  dir.degen = [&](int n, int i, int e) { return x.s(n, i, e); };
  dir.name = [&](int n, int e) { return x.name(n, e); };
  check_simplicial_identities(dir, rep);
  return rep;
}

/// Face composite X_n -> X_{|S|-1} selecting the ascending vertex list S,
/// dropping the largest omitted vertex first.
inline std::vector<int> vertex_selection(const TruncatedSimplicialSet& x, int n,
                                         const std::vector<int>& vertices) {
  std::vector<int> omitted;
  for (int v = n; v >= 0; --v)
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) omitted.push_back(v);
  std::vector<int> out(x.size(n));
  for (int e = 0; e < x.size(n); ++e) {
    int cur = e;
    int level = n;
    for (int v : omitted) cur = x.d(level--, v, cur);
    out[e] = cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

inline TruncatedSimplicialSet standard_simplex(int n, int t) {
  if (n < 0 || t < 0) throw PreconditionError("standard_simplex: need n, t >= 0");
  std::vector<std::vector<MonotoneMap>> maps(t + 1);
  std::vector<std::map<std::vector<int>, int>> index(t + 1);
  std::vector<std::vector<std::string>> names(t + 1);
  for (int m = 0; m <= t; ++m) {
    maps[m] = enumerate_monotone(m, n);
    for (std::size_t k = 0; k < maps[m].size(); ++k) {
      std::vector<int> v(maps[m][k].values().begin(), maps[m][k].values().end());
      index[m][v] = static_cast<int>(k);
      names[m].push_back(maps[m][k].label());
    }
  }
  auto x = TruncatedSimplicialSet::with_levels(std::move(names));
  for (int m = 1; m <= t; ++m)
    for (int i = 0; i <= m; ++i)
      for (std::size_t k = 0; k < maps[m].size(); ++k) {
        auto g = compose(MonotoneMap::coface(m, i), maps[m][k]);
        std::vector<int> v(g.values().begin(), g.values().end());
        x.faces[m][i][k] = index[m - 1].at(v);
      }
  for (int m = 0; m < t; ++m)
    for (int i = 0; i <= m; ++i)
      for (std::size_t k = 0; k < maps[m].size(); ++k) {
        auto g = compose(MonotoneMap::codegeneracy(m, i), maps[m][k]);
        std::vector<int> v(g.values().begin(), g.values().end());
        x.degens[m][i][k] = index[m + 1].at(v);
      }
  return x;
}

struct Morphism {
  std::string name;
  int source;
  int target;
};

/// A finite category given by explicit tables; compose[g][f] is g o f or -1.
struct FiniteCategoryData {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;
  std::vector<std::vector<int>> compose;

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int composite(int g, int f) const { return compose[g][f]; }

  /// Builds the square composition table from (g, f, g o f) triples.
  void set_composition(const std::vector<std::array<int, 3>>& triples) {
    compose.assign(morphisms.size(), std::vector<int>(morphisms.size(), -1));
    for (auto [g, f, gf] : triples) compose.at(g).at(f) = gf;
  }
};

inline void validate_category(const FiniteCategoryData& c) {
  const int no = c.object_count();
  const int nm = c.morphism_count();
  {
    std::set<std::string> seen;
    for (const auto& o : c.objects)
      if (!seen.insert(o).second) throw ValidationError("category: duplicate object '" + o + "'");
    seen.clear();
    for (const auto& m : c.morphisms)
      if (!seen.insert(m.name).second)
        throw ValidationError("category: duplicate morphism '" + m.name + "'");
  }
  for (const auto& m : c.morphisms)
    if (m.source < 0 || m.source >= no || m.target < 0 || m.target >= no)
      throw ValidationError("category: morphism '" + m.name + "' has an unknown endpoint");
  if (static_cast<int>(c.identities.size()) != no)
    throw ValidationError("category: identity table must list every object");
  for (int o = 0; o < no; ++o) {
    int id = c.identities[o];
    if (id < 0 || id >= nm || c.morphisms[id].source != o || c.morphisms[id].target != o)
      throw ValidationError("category: identity of '" + c.objects[o] + "' is not an endomorphism");
  }
  if (static_cast<int>(c.compose.size()) != nm)
    throw ValidationError("category: composition table has wrong size");
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      bool composable = c.morphisms[f].target == c.morphisms[g].source;
      int gf = c.compose[g][f];
      const std::string pair = "'" + c.morphisms[g].name + "' o '" + c.morphisms[f].name + "'";
      if (!composable) {
        if (gf != -1) throw ValidationError("category: composite " + pair + " of non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= nm) throw ValidationError("category: missing composite " + pair);
      if (c.morphisms[gf].source != c.morphisms[f].source ||
          c.morphisms[gf].target != c.morphisms[g].target)
        throw ValidationError("category: composite " + pair + " has wrong endpoints");
    }
  for (int f = 0; f < nm; ++f) {
    const auto& m = c.morphisms[f];
    if (c.compose[c.identities[m.target]][f] != f || c.compose[f][c.identities[m.source]] != f)
      throw ValidationError("category: unit law fails for '" + m.name + "'");
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.morphisms[f].target != c.morphisms[g].source) continue;
      for (int h = 0; h < nm; ++h) {
        if (c.morphisms[g].target != c.morphisms[h].source) continue;
        if (c.compose[h][c.compose[g][f]] != c.compose[c.compose[h][g]][f])
          throw ValidationError("category: associativity fails at ('" + c.morphisms[h].name +
                                "', '" + c.morphisms[g].name + "', '" + c.morphisms[f].name + "')");
      }
    }
}

/// Level n is the set of composable chains f_1, ..., f_n (f_1 applied first),
/// named by joining morphism names with '|'. Level 0 is the object set.
inline TruncatedSimplicialSet nerve_category(const FiniteCategoryData& c, int t) {
  validate_category(c);
  if (t < 0) throw PreconditionError("nerve: truncation must be non-negative");
  std::vector<std::vector<std::vector<int>>> chains(t + 1);
  std::vector<std::map<std::vector<int>, int>> index(t + 1);
  for (int o = 0; o < c.object_count(); ++o) chains[0].push_back({o});
  for (int n = 1; n <= t; ++n)
    for (const auto& ch : chains[n - 1]) {
      int end = n == 1 ? ch[0] : c.morphisms[ch.back()].target;
      for (int f = 0; f < c.morphism_count(); ++f) {
        if (c.morphisms[f].source != end) continue;
        std::vector<int> next = n == 1 ? std::vector<int>{} : ch;
        next.push_back(f);
        chains[n].push_back(std::move(next));
      }
    }
  std::vector<std::vector<std::string>> names(t + 1);
  for (int n = 0; n <= t; ++n)
    for (std::size_t k = 0; k < chains[n].size(); ++k) {
      index[n][chains[n][k]] = static_cast<int>(k);
      if (n == 0) {
        names[0].push_back(c.objects[chains[0][k][0]]);
      } else {
        std::vector<std::string> parts;
        for (int f : chains[n][k]) parts.push_back(c.morphisms[f].name);
        names[n].push_back(join(parts, "|"));
      }
    }
  auto x = TruncatedSimplicialSet::with_levels(std::move(names));
  auto vertex = [&](const std::vector<int>& ch, int n, int i) {
    if (n == 0) return ch[0];
    return i == 0 ? c.morphisms[ch[0]].source : c.morphisms[ch[i - 1]].target;
  };
  for (int n = 1; n <= t; ++n)
    for (std::size_t k = 0; k < chains[n].size(); ++k) {
      const auto& ch = chains[n][k];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> out;
        if (n == 1) {
          out = {i == 0 ? c.morphisms[ch[0]].target : c.morphisms[ch[0]].source};
        } else if (i == 0) {
          out.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          out.assign(ch.begin(), ch.end() - 1);
        } else {
          out.assign(ch.begin(), ch.begin() + (i - 1));
          out.push_back(c.composite(ch[i], ch[i - 1]));
          out.insert(out.end(), ch.begin() + (i + 1), ch.end());
        }
        x.faces[n][i][k] = index[n - 1].at(out);
      }
    }
  for (int n = 0; n < t; ++n)
    for (std::size_t k = 0; k < chains[n].size(); ++k) {
      const auto& ch = chains[n][k];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> out = n == 0 ? std::vector<int>{} : ch;
        out.insert(out.begin() + i, c.identities[vertex(ch, n, i)]);
        x.degens[n][i][k] = index[n + 1].at(out);
      }
    }
  return x;
}

// ---------------------------------------------------------------------------
// Maps

inline FinitePresheaf to_presheaf(const TruncatedSimplicialSet& x) {
  FinitePresheaf p;
  for (int n = 0; n <= x.truncation; ++n) {
    p.level_names.push_back("X_" + std::to_string(n));
    p.sizes.push_back(x.size(n));
  }
  std::map<std::pair<int, int>, int> face_index;
  for (int n = 1; n <= x.truncation; ++n)
    for (int i = 0; i <= n; ++i) {
      face_index[{n, i}] = static_cast<int>(p.maps.size());
      p.maps.push_back({n, n - 1, x.faces[n][i], -1,
                        "d(" + std::to_string(n) + "," + std::to_string(i) + ")"});
    }
  for (int n = 0; n < x.truncation; ++n)
    for (int i = 0; i <= n; ++i)
      p.maps.push_back({n, n + 1, x.degens[n][i], face_index.at({n + 1, i}),
                        "s(" + std::to_string(n) + "," + std::to_string(i) + ")"});
  return p;
}

inline std::vector<SimplicialMap> hom_simplicial(const TruncatedSimplicialSet& x,
                                                 const TruncatedSimplicialSet& y,
                                                 const HomOptions& opt = {}) {
  if (x.truncation != y.truncation)
    throw PreconditionError("hom_simplicial: truncations differ (" +
                            std::to_string(x.truncation) + " vs " +
                            std::to_string(y.truncation) + ")");
  return hom_presheaf(to_presheaf(x), to_presheaf(y), opt);
}

inline bool is_simplicial_map(const TruncatedSimplicialSet& x, const TruncatedSimplicialSet& y,
                              const SimplicialMap& f) {
  return x.truncation == y.truncation && is_natural(to_presheaf(x), to_presheaf(y), f);
}

/// Restriction to levels 0..t.
inline TruncatedSimplicialSet truncate(const TruncatedSimplicialSet& x, int t) {
  if (t < 0 || t > x.truncation) throw PreconditionError("truncate: level out of range");
  TruncatedSimplicialSet out;
  out.truncation = t;
  out.names.assign(x.names.begin(), x.names.begin() + t + 1);
  out.faces.assign(x.faces.begin(), x.faces.begin() + t + 1);
  out.degens.assign(x.degens.begin(), x.degens.begin() + t + 1);
  out.degens[t].clear();
  return out;
}

/// beta^* x for a monotone beta : [k] -> [n] and x in X_n, via the
/// epi-mono factorization: faces for the omitted vertices (largest first),
/// then degeneracies at the repeat positions in increasing order.
inline int pull_back_along(const TruncatedSimplicialSet& x, const MonotoneMap& beta, int elem) {
  auto [surj, inj] = factorize_epi_mono(beta);
  int level = beta.codomain();
  int cur = elem;
  auto omitted = inj.omitted();
  for (auto it = omitted.rbegin(); it != omitted.rend(); ++it) cur = x.d(level--, *it, cur);
  for (int p : surj.repeats()) cur = x.s(level++, p, cur);
  return cur;
}

// ---------------------------------------------------------------------------
// Pullbacks

struct LevelPullback {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> first;
  std::vector<int> second;
  std::map<std::pair<int, int>, int> index;

  int size() const { return static_cast<int>(pairs.size()); }
  int find(int a, int b) const {
    auto it = index.find({a, b});
    return it == index.end() ? -1 : it->second;
  }
};

/// {(a, b) | f(a) = g(b)}, ordered lexicographically.
inline LevelPullback level_pullback(const std::vector<int>& f, const std::vector<int>& g) {
  std::unordered_map<int, std::vector<int>> by_value;
  for (int b = 0; b < static_cast<int>(g.size()); ++b) by_value[g[b]].push_back(b);
  LevelPullback p;
  for (int a = 0; a < static_cast<int>(f.size()); ++a) {
    auto it = by_value.find(f[a]);
    if (it == by_value.end()) continue;
    for (int b : it->second) {
      p.index[{a, b}] = static_cast<int>(p.pairs.size());
      p.pairs.push_back({a, b});
      p.first.push_back(a);
      p.second.push_back(b);
    }
  }
  return p;
}

} // namespace twoseg
