#pragma once

// A finite presheaf flattened to levels and structure-map tables. Both
// simplicial sets and Sigma-sets are lowered to this form so that a single
// hom-set solver serves both.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twoseg {

struct StructureMap {
  int source = 0;
  int target = 0;
  std::vector<int> table;
  /// Index of a structure map r with r(this(x)) = x, or -1 for non-degeneracies.
  int retraction = -1;
  std::string name;
};

struct FinitePresheaf {
  std::vector<std::string> level_names;
  std::vector<int> sizes;
  std::vector<StructureMap> maps;

  int level_count() const noexcept { return static_cast<int>(sizes.size()); }
};

/// Components of a natural transformation, one table per level.
using PresheafMap = std::vector<std::vector<int>>;

inline bool same_shape(const FinitePresheaf& a, const FinitePresheaf& b) {
  if (a.sizes.size() != b.sizes.size() || a.maps.size() != b.maps.size()) return false;
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& x = a.maps[k];
    const auto& y = b.maps[k];
    if (x.source != y.source || x.target != y.target || x.retraction != y.retraction) return false;
  }
  return true;
}

inline bool is_natural(const FinitePresheaf& a, const FinitePresheaf& b, const PresheafMap& f) {
  if (f.size() != a.sizes.size()) return false;
  for (std::size_t l = 0; l < f.size(); ++l) {
    if (f[l].size() != static_cast<std::size_t>(a.sizes[l])) return false;
    for (int v : f[l])
      if (v < 0 || v >= b.sizes[l]) return false;
  }
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& ma = a.maps[k];
    const auto& mb = b.maps[k];
    for (int x = 0; x < a.sizes[ma.source]; ++x)
      if (f[ma.target][ma.table[x]] != mb.table[f[ma.source][x]]) return false;
  }
  return true;
}

/// g after f.
inline PresheafMap compose_maps(const PresheafMap& f, const PresheafMap& g) {
  PresheafMap out(f.size());
  for (std::size_t l = 0; l < f.size(); ++l) {
    out[l].reserve(f[l].size());
    for (int x : f[l]) out[l].push_back(g[l][x]);
  }
  return out;
}

inline PresheafMap identity_map(const FinitePresheaf& a) {
  PresheafMap out(a.sizes.size());
  for (std::size_t l = 0; l < a.sizes.size(); ++l)
    for (int x = 0; x < a.sizes[l]; ++x) out[l].push_back(x);
  return out;
}

/// For each element, the nondegenerate element it is a degeneracy of, and
/// the chain of degeneracy maps (applied first to last) that recovers it.
struct DegeneracyAnalysis {
  struct Entry {
    int base_level;
    int base;
    std::vector<int> chain;
  };
  std::vector<std::vector<Entry>> entries;

  bool is_nondegenerate(int level, int x) const {
    return entries[level][x].chain.empty();
  }
};

inline DegeneracyAnalysis analyze_degeneracies(const FinitePresheaf& a) {
  const int levels = a.level_count();
  // parent[l][x] = (map index, preimage) for the first degeneracy hitting x.
  std::vector<std::vector<std::pair<int, int>>> parent(levels);
  for (int l = 0; l < levels; ++l) parent[l].assign(a.sizes[l], {-1, -1});
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& s = a.maps[k];
    if (s.retraction < 0) continue;
    const auto& r = a.maps[s.retraction];
    for (int x = 0; x < a.sizes[s.target]; ++x) {
      if (parent[s.target][x].first >= 0) continue;
      int pre = r.table[x];
      if (s.table[pre] == x) parent[s.target][x] = {static_cast<int>(k), pre};
    }
  }
  DegeneracyAnalysis out;
  out.entries.resize(levels);
  for (int l = 0; l < levels; ++l) {
    out.entries[l].resize(a.sizes[l]);
    for (int x = 0; x < a.sizes[l]; ++x) {
      std::vector<int> chain;
      int lev = l;
      int cur = x;
      int guard = 0;
      while (parent[lev][cur].first >= 0) {
        auto [m, pre] = parent[lev][cur];
        chain.push_back(m);
        lev = a.maps[m].source;
        cur = pre;
        if (++guard > levels * 4 + 8)
          throw std::runtime_error("degeneracy analysis: cyclic degeneracy structure");
      }
      std::reverse(chain.begin(), chain.end());
      out.entries[l][x] = {lev, cur, std::move(chain)};
    }
  }
  return out;
}

} // namespace twoseg
