#pragma once

// The S-construction S_n D = Hom(P Delta[n], D), the unit X -> S P X, the
// counit P S D -> D, and the set-level roundtrip check.

#include <map>
#include <string>
#include <vector>

#include "twoseg/bijection.hpp"
#include "twoseg/hom_search.hpp"
#include "twoseg/path.hpp"
#include "twoseg/segal.hpp"
#include "twoseg/sigma.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

/// Index of a monotone value table within the lexicographic enumeration of
/// maps [k] -> [n].
class SimplexIndex {
public:
  SimplexIndex(int n, int top) {
    for (int k = 0; k <= top; ++k) {
      auto maps = enumerate_monotone(k, n);
      std::map<std::vector<int>, int> idx;
      for (std::size_t e = 0; e < maps.size(); ++e)
        idx[{maps[e].values().begin(), maps[e].values().end()}] = static_cast<int>(e);
      index_.push_back(std::move(idx));
      maps_.push_back(std::move(maps));
    }
  }
  int find(const MonotoneMap& m) const {
    return index_.at(m.domain()).at({m.values().begin(), m.values().end()});
  }
  const MonotoneMap& at(int k, int e) const { return maps_.at(k).at(e); }

private:
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<std::vector<MonotoneMap>> maps_;
};

/// P(alpha_*) : P Delta[m] -> P Delta[n] at total truncation T, for alpha : [m] -> [n].
inline SigmaMap path_of_monotone(const MonotoneMap& alpha, int T) {
  const int m = alpha.domain();
  const int n = alpha.codomain();
  SimplexIndex src(m, T), tgt(n, T);
  SigmaLayout lay(T);
  SigmaMap out(lay.bidegree_of.size());
  for (int v = 0; v <= m; ++v) out[0].push_back(alpha(v));
  for (std::size_t k = 1; k < lay.bidegree_of.size(); ++k) {
    auto [a, b] = lay.bidegree_of[k];
    const int deg = a + 1 + b;
    const int count = static_cast<int>(enumerate_monotone(deg, m).size());
    for (int e = 0; e < count; ++e) out[k].push_back(tgt.find(compose(src.at(deg, e), alpha)));
  }
  return out;
}

/// Index of the identity of [n] at bidegree (a,b), a+1+b = n, in P Delta[n].
inline int generator_index(int n) {
  SimplexIndex idx(n, n);
  return idx.find(MonotoneMap::identity(n));
}

struct SConstruction {
  int T = 0;
  std::vector<PreaugBisimplicialSet> simplices;  // P Delta[n] at total truncation T
  std::vector<std::vector<SigmaMap>> elements;   // S_n D, sorted
  std::vector<std::map<SigmaMap, int>> index;
  TruncatedSimplicialSet sset;

  int find(int n, const SigmaMap& f) const {
    auto it = index.at(n).find(f);
    return it == index.at(n).end() ? -1 : it->second;
  }
};

/// S_n D = Hom(P Delta[n] truncated at T, D) for 0 <= n <= T. Structure maps
/// precompose with P of the cosimplicial maps of Delta.
inline SConstruction s_construction(const PreaugBisimplicialSet& d, const HomOptions& opt = {}) {
  check_structure(d);
  SConstruction s;
  s.T = d.total_truncation;
  const int T = s.T;
  const FinitePresheaf target = to_presheaf(d);
  SigmaLayout lay(T);
  for (int n = 0; n <= T; ++n) {
    s.simplices.push_back(path_standard_simplex(n, T));
    s.elements.push_back(hom_presheaf(to_presheaf(s.simplices[n]), target, opt));
    std::map<SigmaMap, int> idx;
    for (std::size_t e = 0; e < s.elements[n].size(); ++e)
      idx[s.elements[n][e]] = static_cast<int>(e);
    s.index.push_back(std::move(idx));
  }
  std::vector<std::vector<std::string>> names(T + 1);
  for (int n = 0; n <= T; ++n) {
    std::map<std::string, int> used;
    const int gen = n == 0 ? 0 : generator_index(n);
    for (const auto& f : s.elements[n]) {
      std::string label;
      if (n == 0) {
        label = d.augmentation[f[0][0]];
      } else {
        std::vector<std::string> parts;
        for (int a = 0; a < n; ++a) parts.push_back(d.name(a, n - 1 - a, f[lay.level(a, n - 1 - a)][gen]));
        label = "[" + join(parts, "|") + "]";
      }
      int dup = used[label]++;
      if (dup > 0) label += "#" + std::to_string(dup);
      names[n].push_back(std::move(label));
    }
  }
  s.sset = TruncatedSimplicialSet::with_levels(std::move(names));
  auto induced = [&](const MonotoneMap& alpha, int n, int m, std::vector<int>& table) {
    SigmaMap pa = path_of_monotone(alpha, T);
    for (std::size_t e = 0; e < s.elements[n].size(); ++e) {
      SigmaMap g = compose_maps(pa, s.elements[n][e]);
      int k = s.find(m, g);
      if (k < 0) throw std::logic_error("S-construction: precomposite is not a Sigma-map");
      table[e] = k;
    }
  };
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i) induced(MonotoneMap::coface(n, i), n, n - 1, s.sset.faces[n][i]);
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i)
      induced(MonotoneMap::codegeneracy(n, i), n, n + 1, s.sset.degens[n][i]);
  return s;
}

inline TruncatedSimplicialSet sdot(const PreaugBisimplicialSet& d, const HomOptions& opt = {}) {
  return s_construction(d, opt).sset;
}

/// |Hom(P Delta[n], restrict(D, max(n,1)))|, the level as defined with the
/// smallest truncation that contains the generators.
inline std::vector<SigmaMap> sdot_level_minimal(const PreaugBisimplicialSet& d, int n,
                                                const HomOptions& opt = {}) {
  const int T = std::max(n, 1);
  return hom_sigma(path_standard_simplex(n, T), restrict_truncation(d, T), opt);
}

/// Restriction of a Sigma-map at total truncation T to the levels of T' <= T.
inline SigmaMap restrict_map(const SigmaMap& f, int T) {
  SigmaLayout lay(T);
  return SigmaMap(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lay.bidegree_of.size()));
}

// ---------------------------------------------------------------------------
// Unit and counit

/// eta_n(x) = P(chi_x) where chi_x : Delta[n] -> X classifies x.
inline std::vector<std::vector<int>> unit_map(const TruncatedSimplicialSet& x,
                                              const SConstruction& spx) {
  const int T = x.truncation;
  if (spx.T != T) throw PreconditionError("unit: S-construction has a different truncation");
  SigmaLayout lay(T);
  std::vector<std::vector<int>> eta(T + 1);
  for (int n = 0; n <= T; ++n) {
    SimplexIndex simp(n, T);
    for (int e = 0; e < x.size(n); ++e) {
      SigmaMap f(lay.bidegree_of.size());
      for (int v = 0; v <= n; ++v)
        f[0].push_back(pull_back_along(x, MonotoneMap::constant(0, n, v), e));
      for (std::size_t k = 1; k < lay.bidegree_of.size(); ++k) {
        auto [a, b] = lay.bidegree_of[k];
        const int deg = a + 1 + b;
        const int count = static_cast<int>(enumerate_monotone(deg, n).size());
        for (int c = 0; c < count; ++c) f[k].push_back(pull_back_along(x, simp.at(deg, c), e));
      }
      int idx = spx.find(n, f);
      if (idx < 0) throw std::logic_error("unit: classifying map is not a Sigma-map");
      eta[n].push_back(idx);
    }
  }
  return eta;
}

struct Counit {
  std::vector<int> augmentation;  // S_0 D -> D(-1)
  std::map<std::pair<int, int>, std::vector<int>> grid;  // S_{a+1+b} D -> D(a,b)
};

inline Counit counit_map(const PreaugBisimplicialSet& d, const SConstruction& sd) {
  SigmaLayout lay(sd.T);
  Counit c;
  for (const auto& f : sd.elements[0]) c.augmentation.push_back(f[0][0]);
  for (int a = 0; a < sd.T; ++a)
    for (int b = 0; a + 1 + b <= sd.T; ++b) {
      const int n = a + 1 + b;
      const int gen = generator_index(n);
      std::vector<int> tab;
      for (const auto& f : sd.elements[n]) tab.push_back(f[lay.level(a, b)][gen]);
      c.grid[{a, b}] = std::move(tab);
    }
  (void)d;
  return c;
}

/// S_{n+1} D -> D(0,n), evaluation at the generator in the first row.
inline std::vector<int> first_row_map(const SConstruction& sd, int n) {
  if (n < 0 || n + 1 > sd.T) throw PreconditionError("first row: need 0 <= n and n+1 <= T");
  SigmaLayout lay(sd.T);
  const int gen = generator_index(n + 1);
  std::vector<int> tab;
  for (const auto& f : sd.elements[n + 1]) tab.push_back(f[lay.level(0, n)][gen]);
  return tab;
}

inline CheckReport first_row_bijection(const PreaugBisimplicialSet& d, const SConstruction& sd,
                                       int n) {
  CheckReport rep;
  rep.scope = "S_" + std::to_string(n + 1) + " -> D(0," + std::to_string(n) + ")";
  auto tab = first_row_map(sd, n);
  check_bijection(
      rep, "first-row", {n}, "S_{n+1} D -> D_{0,n}", tab, d.size(0, n),
      [&](int e) { return sd.sset.name(n + 1, e); }, [&](int y) { return d.name(0, n, y); });
  return rep;
}

inline CheckReport check_unit_bijective(const TruncatedSimplicialSet& x, const SConstruction& spx,
                                        int max_level = -1) {
  CheckReport rep;
  if (max_level < 0) max_level = x.truncation;
  rep.scope = "eta_n for n <= " + std::to_string(max_level);
  auto eta = unit_map(x, spx);
  for (int n = 0; n <= max_level && n <= x.truncation; ++n)
    check_bijection(
        rep, "unit", {n}, "eta_n: X_n -> S_n P X", eta[n], spx.sset.size(n),
        [&](int e) { return x.name(n, e); }, [&](int e) { return spx.sset.name(n, e); });
  return rep;
}

inline CheckReport check_counit_bijective(const PreaugBisimplicialSet& d, const SConstruction& sd,
                                          int max_degree = -1) {
  CheckReport rep;
  if (max_degree < 0) max_degree = sd.T;
  rep.scope = "eps_{a,b} for a+1+b <= " + std::to_string(max_degree) + " and eps_{-1}";
  Counit c = counit_map(d, sd);
  check_bijection(
      rep, "counit", {-1}, "eps_{-1}: S_0 D -> D_{-1}", c.augmentation, d.aug_size(),
      [&](int e) { return sd.sset.name(0, e); }, [&](int y) { return d.augmentation[y]; });
  for (const auto& [ab, tab] : c.grid) {
    auto [a, b] = ab;
    if (a + 1 + b > max_degree) continue;
    check_bijection(
        rep, "counit", {a, b},
        "eps_{" + std::to_string(a) + "," + std::to_string(b) + "}: S_" +
            std::to_string(a + 1 + b) + " D -> D_{" + std::to_string(a) + "," +
            std::to_string(b) + "}",
        tab, d.size(a, b), [&, n = a + 1 + b](int e) { return sd.sset.name(n, e); },
        [&, a = a, b = b](int y) { return d.name(a, b, y); });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Roundtrip

inline CheckReport roundtrip_verify(const TruncatedSimplicialSet& x, const HomOptions& opt = {}) {
  CheckReport rep;
  rep.scope = "verified up to degree " + std::to_string(x.truncation);
  CheckReport seg = check_2segal(x);
  if (seg.failed()) {
    ++rep.checked;
    std::vector<std::string> failing;
    for (const auto& inst : seg.instances) failing.push_back(inst.condition + index_string(inst.index));
    rep.fail({"precondition", {}, "input is not 2-Segal", FailureKind::precondition, failing});
    return rep;
  }
  auto px = path_of_sset(x);
  auto spx = s_construction(px, opt);
  rep.add_subreport("unit", check_unit_bijective(x, spx));
  rep.add_subreport("2segal-of-sdot", check_2segal(spx.sset));
  rep.add_subreport("sadss-of-path", check_sadss(px));
  if (seg.verdict == Verdict::partial) rep.mark_partial("2-Segal precondition only partially checkable");
  return rep;
}

inline CheckReport roundtrip_verify(const PreaugBisimplicialSet& d, const HomOptions& opt = {}) {
  CheckReport rep;
  rep.scope = "verified up to total degree " + std::to_string(d.total_truncation);
  CheckReport pre = check_sadss(d);
  if (pre.failed()) {
    ++rep.checked;
    std::vector<std::string> failing;
    for (const auto& inst : pre.instances) failing.push_back(inst.condition + index_string(inst.index));
    rep.fail({"precondition", {}, "input is not a stable augmented double Segal object",
              FailureKind::precondition, failing});
    return rep;
  }
  auto sd = s_construction(d, opt);
  rep.add_subreport("counit", check_counit_bijective(d, sd));
  rep.add_subreport("2segal-of-sdot", check_2segal(sd.sset));
  rep.add_subreport("sadss-of-path", check_sadss(path_of_sset(sd.sset)));
  if (pre.verdict == Verdict::partial) rep.mark_partial("sadss precondition only partially checkable");
  return rep;
}

} // namespace twoseg
