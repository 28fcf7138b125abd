#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/hom_search.hpp"
#include "twoseg/monotone.hpp"
#include "twoseg/presheaf.hpp"
#include "twoseg/report.hpp"
#include "twoseg/simplicial_identities.hpp"

namespace twoseg {

/// Bisimplicial levels D(a,b) for a+1+b <= T together with an augmentation
/// level D(-1) and eps : D(-1) -> D(0,0). Tables are indexed [a][b][i].
struct PreaugBisimplicialSet {
  int total_truncation = 1;
  std::vector<std::string> augmentation;
  std::vector<std::vector<std::vector<std::string>>> levels;
  std::vector<std::vector<std::vector<std::vector<int>>>> vface;  // a >= 1
  std::vector<std::vector<std::vector<std::vector<int>>>> vdegen; // a+2+b <= T
  std::vector<std::vector<std::vector<std::vector<int>>>> hface;  // b >= 1
  std::vector<std::vector<std::vector<std::vector<int>>>> hdegen; // a+2+b <= T
  std::vector<int> eps;

  bool has(int a, int b) const {
    return a >= 0 && b >= 0 && a + 1 + b <= total_truncation;
  }
  int size(int a, int b) const { return static_cast<int>(levels.at(a).at(b).size()); }
  int aug_size() const { return static_cast<int>(augmentation.size()); }
  const std::string& name(int a, int b, int x) const { return levels[a][b][x]; }

  int dv(int a, int b, int i, int x) const { return vface[a][b][i][x]; }
  int sv(int a, int b, int i, int x) const { return vdegen[a][b][i][x]; }
  int dh(int a, int b, int j, int x) const { return hface[a][b][j][x]; }
  int sh(int a, int b, int j, int x) const { return hdegen[a][b][j][x]; }

  /// Allocates empty tables (entries -1) for the given level names.
  static PreaugBisimplicialSet with_levels(
      int T, std::vector<std::string> aug,
      const std::function<std::vector<std::string>(int, int)>& level_names) {
    if (T < 1) throw PreconditionError("Sigma-set needs total truncation >= 1");
    PreaugBisimplicialSet d;
    d.total_truncation = T;
    d.augmentation = std::move(aug);
    d.levels.resize(T);
    d.vface.resize(T);
    d.vdegen.resize(T);
    d.hface.resize(T);
    d.hdegen.resize(T);
    for (int a = 0; a < T; ++a) {
      int bmax = T - 1 - a;
      d.levels[a].resize(bmax + 1);
      d.vface[a].resize(bmax + 1);
      d.vdegen[a].resize(bmax + 1);
      d.hface[a].resize(bmax + 1);
      d.hdegen[a].resize(bmax + 1);
      for (int b = 0; b <= bmax; ++b) d.levels[a][b] = level_names(a, b);
    }
    for (int a = 0; a < T; ++a)
      for (int b = 0; a + 1 + b <= T; ++b) {
        std::size_t n = d.levels[a][b].size();
        if (a >= 1) d.vface[a][b].assign(a + 1, std::vector<int>(n, -1));
        if (b >= 1) d.hface[a][b].assign(b + 1, std::vector<int>(n, -1));
        if (a + 2 + b <= T) {
          d.vdegen[a][b].assign(a + 1, std::vector<int>(n, -1));
          d.hdegen[a][b].assign(b + 1, std::vector<int>(n, -1));
        }
      }
    d.eps.assign(d.augmentation.size(), -1);
    return d;
  }

  friend bool operator==(const PreaugBisimplicialSet&, const PreaugBisimplicialSet&) = default;
};

using SigmaMap = PresheafMap;

inline void check_structure(const PreaugBisimplicialSet& d) {
  const int T = d.total_truncation;
  if (T < 1) throw ValidationError("Sigma-set: total truncation must be >= 1");
  if (static_cast<int>(d.levels.size()) != T)
    throw ValidationError("Sigma-set: level rows do not match total truncation");
  for (int a = 0; a < T; ++a)
    if (static_cast<int>(d.levels[a].size()) != T - a)
      throw ValidationError("Sigma-set: row " + std::to_string(a) + " has wrong length");
  auto unique = [](const std::vector<std::string>& ids, const std::string& where) {
    std::set<std::string> seen;
    for (const auto& id : ids)
      if (!seen.insert(id).second)
        throw ValidationError(where + ": duplicate element '" + id + "'");
  };
  unique(d.augmentation, "level -1");
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b)
      unique(d.levels[a][b], "level " + std::to_string(a) + "," + std::to_string(b));
  auto table = [&](const auto& tabs, int a, int b, int count, int ta, int tb,
                   const std::string& what) {
    if (static_cast<int>(tabs[a][b].size()) != count)
      throw ValidationError(what + " tables at " + std::to_string(a) + "," + std::to_string(b) +
                            " incomplete");
    for (int i = 0; i < count; ++i) {
      const auto& tab = tabs[a][b][i];
      std::string where = what + " (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(i) + ")";
      if (static_cast<int>(tab.size()) != d.size(a, b))
        throw ValidationError(where + ": table has wrong length");
      for (int x = 0; x < d.size(a, b); ++x) {
        if (tab[x] == -1)
          throw ValidationError(where + ": missing entry for '" + d.name(a, b, x) + "'");
        if (tab[x] < 0 || tab[x] >= d.size(ta, tb))
          throw ValidationError(where + ": entry for '" + d.name(a, b, x) + "' out of range");
      }
    }
  };
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      if (a >= 1) table(d.vface, a, b, a + 1, a - 1, b, "vertical face");
      if (b >= 1) table(d.hface, a, b, b + 1, a, b - 1, "horizontal face");
      if (a + 2 + b <= T) {
        table(d.vdegen, a, b, a + 1, a + 1, b, "vertical degeneracy");
        table(d.hdegen, a, b, b + 1, a, b + 1, "horizontal degeneracy");
      }
    }
  if (static_cast<int>(d.eps.size()) != d.aug_size())
    throw ValidationError("eps: table has wrong length");
  for (int u = 0; u < d.aug_size(); ++u) {
    if (d.eps[u] == -1)
      throw ValidationError("eps: missing entry for '" + d.augmentation[u] + "'");
    if (d.eps[u] < 0 || d.eps[u] >= d.size(0, 0))
      throw ValidationError("eps: entry for '" + d.augmentation[u] + "' out of range");
  }
}

inline CheckReport validate_sigma(const PreaugBisimplicialSet& d) {
  check_structure(d);
  const int T = d.total_truncation;
  CheckReport rep;
  rep.scope = "verified up to total degree " + std::to_string(T);
  for (int b = 0; b < T; ++b) {
    SimplicialDirection dir;
    dir.top = T - 1 - b;
    dir.size = [&d, b](int a) { return d.size(a, b); };
    dir.face = [&d, b](int a, int i, int x) { return d.dv(a, b, i, x); };
    dir.degen = [&d, b](int a, int i, int x) { return d.sv(a, b, i, x); };
    dir.name = [&d, b](int a, int x) { return d.name(a, b, x); };
    dir.d = "dv";
    dir.s = "sv";
    dir.prefix = {b};
    check_simplicial_identities(dir, rep);
  }
  for (int a = 0; a < T; ++a) {
    SimplicialDirection dir;
    dir.top = T - 1 - a;
    dir.size = [&d, a](int b) { return d.size(a, b); };
    dir.face = [&d, a](int b, int j, int x) { return d.dh(a, b, j, x); };
    dir.degen = [&d, a](int b, int j, int x) { return d.sh(a, b, j, x); };
    dir.name = [&d, a](int b, int x) { return d.name(a, b, x); };
    dir.d = "dh";
    dir.s = "sh";
    dir.prefix = {a};
    check_simplicial_identities(dir, rep);
  }
  // Vertical and horizontal structure maps commute.
  auto mixed = [&](const std::string& law, int a, int b, int i, int j, int ta, int tb,
                   auto lhs_fn, auto rhs_fn) {
    ++rep.checked;
    for (int x = 0; x < d.size(a, b); ++x) {
      int lhs = lhs_fn(x);
      int rhs = rhs_fn(x);
      if (lhs != rhs) {
        rep.fail({law, {a, b, i, j}, "element of level " + std::to_string(a) + "," +
                                         std::to_string(b),
                  FailureKind::structural, {d.name(a, b, x), d.name(ta, tb, lhs),
                                            d.name(ta, tb, rhs)}});
        return;
      }
    }
  };
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
          if (a >= 1 && b >= 1)
            mixed("dv_i dh_j = dh_j dv_i", a, b, i, j, a - 1, b - 1,
                  [&](int x) { return d.dv(a, b - 1, i, d.dh(a, b, j, x)); },
                  [&](int x) { return d.dh(a - 1, b, j, d.dv(a, b, i, x)); });
          if (a >= 1 && d.has(a, b + 1))
            mixed("dv_i sh_j = sh_j dv_i", a, b, i, j, a - 1, b + 1,
                  [&](int x) { return d.dv(a, b + 1, i, d.sh(a, b, j, x)); },
                  [&](int x) { return d.sh(a - 1, b, j, d.dv(a, b, i, x)); });
          if (b >= 1 && d.has(a + 1, b))
            mixed("dh_j sv_i = sv_i dh_j", a, b, i, j, a + 1, b - 1,
                  [&](int x) { return d.dh(a + 1, b, j, d.sv(a, b, i, x)); },
                  [&](int x) { return d.sv(a, b - 1, i, d.dh(a, b, j, x)); });
          if (d.has(a + 1, b + 1))
            mixed("sv_i sh_j = sh_j sv_i", a, b, i, j, a + 1, b + 1,
                  [&](int x) { return d.sv(a, b + 1, i, d.sh(a, b, j, x)); },
                  [&](int x) { return d.sh(a + 1, b, j, d.sv(a, b, i, x)); });
        }
    }
  return rep;
}

inline PreaugBisimplicialSet restrict_truncation(const PreaugBisimplicialSet& d, int T) {
  if (T < 1 || T > d.total_truncation)
    throw PreconditionError("restrict_truncation: need 1 <= T' <= " +
                            std::to_string(d.total_truncation));
  PreaugBisimplicialSet out = PreaugBisimplicialSet::with_levels(
      T, d.augmentation, [&](int a, int b) { return d.levels[a][b]; });
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      if (a >= 1) out.vface[a][b] = d.vface[a][b];
      if (b >= 1) out.hface[a][b] = d.hface[a][b];
      if (a + 2 + b <= T) {
        out.vdegen[a][b] = d.vdegen[a][b];
        out.hdegen[a][b] = d.hdegen[a][b];
      }
    }
  out.eps = d.eps;
  return out;
}

/// Presheaf levels: 0 is D(-1), then (a,b) in order of total degree, then a.
struct SigmaLayout {
  int T;
  std::map<std::pair<int, int>, int> level_of;
  std::vector<std::pair<int, int>> bidegree_of;  // index 0 is (-1,-1)

  explicit SigmaLayout(int total) : T(total) {
    bidegree_of.push_back({-1, -1});
    for (int deg = 1; deg <= T; ++deg)
      for (int a = 0; a < deg; ++a) {
        int b = deg - 1 - a;
        level_of[{a, b}] = static_cast<int>(bidegree_of.size());
        bidegree_of.push_back({a, b});
      }
  }
  int level(int a, int b) const { return level_of.at({a, b}); }
};

inline FinitePresheaf to_presheaf(const PreaugBisimplicialSet& d) {
  SigmaLayout lay(d.total_truncation);
  const int T = d.total_truncation;
  FinitePresheaf p;
  p.level_names.push_back("-1");
  p.sizes.push_back(d.aug_size());
  for (std::size_t k = 1; k < lay.bidegree_of.size(); ++k) {
    auto [a, b] = lay.bidegree_of[k];
    p.level_names.push_back(std::to_string(a) + "," + std::to_string(b));
    p.sizes.push_back(d.size(a, b));
  }
  p.maps.push_back({0, lay.level(0, 0), d.eps, -1, "eps"});
  std::map<std::tuple<char, int, int, int>, int> face_index;
  for (std::size_t k = 1; k < lay.bidegree_of.size(); ++k) {
    auto [a, b] = lay.bidegree_of[k];
    int src = static_cast<int>(k);
    for (int i = 0; a >= 1 && i <= a; ++i) {
      face_index[{'v', a, b, i}] = static_cast<int>(p.maps.size());
      p.maps.push_back({src, lay.level(a - 1, b), d.vface[a][b][i], -1,
                        "dv(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(i) + ")"});
    }
    for (int j = 0; b >= 1 && j <= b; ++j) {
      face_index[{'h', a, b, j}] = static_cast<int>(p.maps.size());
      p.maps.push_back({src, lay.level(a, b - 1), d.hface[a][b][j], -1,
                        "dh(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(j) + ")"});
    }
  }
  for (std::size_t k = 1; k < lay.bidegree_of.size(); ++k) {
    auto [a, b] = lay.bidegree_of[k];
    if (a + 2 + b > T) continue;
    int src = static_cast<int>(k);
    for (int i = 0; i <= a; ++i)
      p.maps.push_back({src, lay.level(a + 1, b), d.vdegen[a][b][i],
                        face_index.at({'v', a + 1, b, i}),
                        "sv(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(i) + ")"});
    for (int j = 0; j <= b; ++j)
      p.maps.push_back({src, lay.level(a, b + 1), d.hdegen[a][b][j],
                        face_index.at({'h', a, b + 1, j}),
                        "sh(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(j) + ")"});
  }
  return p;
}

inline std::vector<SigmaMap> hom_sigma(const PreaugBisimplicialSet& a,
                                       const PreaugBisimplicialSet& b,
                                       const HomOptions& opt = {}) {
  if (a.total_truncation != b.total_truncation)
    throw PreconditionError("hom_sigma: total truncations differ (" +
                            std::to_string(a.total_truncation) + " vs " +
                            std::to_string(b.total_truncation) + ")");
  return hom_presheaf(to_presheaf(a), to_presheaf(b), opt);
}

inline bool is_sigma_map(const PreaugBisimplicialSet& a, const PreaugBisimplicialSet& b,
                         const SigmaMap& f) {
  return a.total_truncation == b.total_truncation && is_natural(to_presheaf(a), to_presheaf(b), f);
}

/// Component of a Sigma-map at (a,b); (-1,-1) selects the augmentation.
inline const std::vector<int>& component(const SigmaMap& f, int T, int a, int b) {
  if (a < 0) return f.at(0);
  return f.at(SigmaLayout(T).level(a, b));
}

// ---------------------------------------------------------------------------
// Tensor with a standard simplex, in an extra simplicial direction truncated
// at `space_top`. Only used to witness that mapping spaces are discrete.

inline FinitePresheaf tensor_standard_simplex(const FinitePresheaf& a, int ell, int space_top) {
  std::vector<int> simplex_size;
  std::vector<std::vector<std::vector<int>>> sface(space_top + 1), sdegen(space_top + 1);
  {
    std::vector<std::vector<MonotoneMap>> maps(space_top + 1);
    std::vector<std::map<std::vector<int>, int>> idx(space_top + 1);
    for (int k = 0; k <= space_top; ++k) {
      maps[k] = enumerate_monotone(k, ell);
      simplex_size.push_back(static_cast<int>(maps[k].size()));
      for (std::size_t e = 0; e < maps[k].size(); ++e)
        idx[k][{maps[k][e].values().begin(), maps[k][e].values().end()}] = static_cast<int>(e);
    }
    for (int k = 1; k <= space_top; ++k)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> tab;
        for (const auto& m : maps[k]) {
          auto g = compose(MonotoneMap::coface(k, i), m);
          tab.push_back(idx[k - 1].at({g.values().begin(), g.values().end()}));
        }
        sface[k].push_back(std::move(tab));
      }
    for (int k = 0; k < space_top; ++k)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> tab;
        for (const auto& m : maps[k]) {
          auto g = compose(MonotoneMap::codegeneracy(k, i), m);
          tab.push_back(idx[k + 1].at({g.values().begin(), g.values().end()}));
        }
        sdegen[k].push_back(std::move(tab));
      }
  }
  // Element (x, e) of level (l, k) is stored at x * |Delta[ell]_k| + e.
  const int L = a.level_count();
  auto level = [L](int l, int k) { return k * L + l; };
  FinitePresheaf out;
  for (int k = 0; k <= space_top; ++k)
    for (int l = 0; l < L; ++l) {
      out.level_names.push_back(a.level_names[l] + "|" + std::to_string(k));
      out.sizes.push_back(a.sizes[l] * simplex_size[k]);
    }
  const int base_maps = static_cast<int>(a.maps.size());
  for (int k = 0; k <= space_top; ++k)
    for (const auto& m : a.maps) {
      std::vector<int> tab;
      for (int x = 0; x < a.sizes[m.source]; ++x)
        for (int e = 0; e < simplex_size[k]; ++e) tab.push_back(m.table[x] * simplex_size[k] + e);
      out.maps.push_back({level(m.source, k), level(m.target, k), std::move(tab),
                          m.retraction < 0 ? -1 : k * base_maps + m.retraction, m.name});
    }
  std::map<std::pair<int, int>, int> space_face_index;  // (k, i) -> base index over levels
  for (int k = 1; k <= space_top; ++k)
    for (int i = 0; i <= k; ++i) {
      space_face_index[{k, i}] = static_cast<int>(out.maps.size());
      for (int l = 0; l < L; ++l) {
        std::vector<int> tab;
        for (int x = 0; x < a.sizes[l]; ++x)
          for (int e = 0; e < simplex_size[k]; ++e)
            tab.push_back(x * simplex_size[k - 1] + sface[k][i][e]);
        out.maps.push_back({level(l, k), level(l, k - 1), std::move(tab), -1,
                            "space d(" + std::to_string(k) + "," + std::to_string(i) + ")"});
      }
    }
  for (int k = 0; k < space_top; ++k)
    for (int i = 0; i <= k; ++i)
      for (int l = 0; l < L; ++l) {
        std::vector<int> tab;
        for (int x = 0; x < a.sizes[l]; ++x)
          for (int e = 0; e < simplex_size[k]; ++e)
            tab.push_back(x * simplex_size[k + 1] + sdegen[k][i][e]);
        out.maps.push_back({level(l, k), level(l, k + 1), std::move(tab),
                            space_face_index.at({k + 1, i}) + l,
                            "space s(" + std::to_string(k) + "," + std::to_string(i) + ")"});
      }
  return out;
}

/// The levelwise-constant extension of b in the extra direction; same shape
/// as tensor_standard_simplex(a, ell, space_top) when b has a's shape.
inline FinitePresheaf constant_in_space(const FinitePresheaf& b, int space_top) {
  const int L = b.level_count();
  auto level = [L](int l, int k) { return k * L + l; };
  FinitePresheaf out;
  for (int k = 0; k <= space_top; ++k)
    for (int l = 0; l < L; ++l) {
      out.level_names.push_back(b.level_names[l] + "|" + std::to_string(k));
      out.sizes.push_back(b.sizes[l]);
    }
  const int base_maps = static_cast<int>(b.maps.size());
  for (int k = 0; k <= space_top; ++k)
    for (const auto& m : b.maps)
      out.maps.push_back({level(m.source, k), level(m.target, k), m.table,
                          m.retraction < 0 ? -1 : k * base_maps + m.retraction, m.name});
  std::map<std::pair<int, int>, int> space_face_index;
  auto ident = [&](int l) {
    std::vector<int> tab(b.sizes[l]);
    for (int x = 0; x < b.sizes[l]; ++x) tab[x] = x;
    return tab;
  };
  for (int k = 1; k <= space_top; ++k)
    for (int i = 0; i <= k; ++i) {
      space_face_index[{k, i}] = static_cast<int>(out.maps.size());
      for (int l = 0; l < L; ++l)
        out.maps.push_back({level(l, k), level(l, k - 1), ident(l), -1, "space d"});
    }
  for (int k = 0; k < space_top; ++k)
    for (int i = 0; i <= k; ++i)
      for (int l = 0; l < L; ++l)
        out.maps.push_back({level(l, k), level(l, k + 1), ident(l),
                            space_face_index.at({k + 1, i}) + l, "space s"});
  return out;
}

} // namespace twoseg
