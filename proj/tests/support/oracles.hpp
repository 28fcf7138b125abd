#pragma once

// Deliberately naive reimplementations used as test oracles.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twoseg/twoseg.hpp"

namespace twoseg::testing {

inline double search_space(const FinitePresheaf& a, const FinitePresheaf& b) {
  double s = 1;
  for (int l = 0; l < a.level_count(); ++l) s *= std::pow(static_cast<double>(b.sizes[l]), a.sizes[l]);
  return s;
}

/// Every per-level assignment, filtered by naturality.
inline std::vector<PresheafMap> naive_hom(const FinitePresheaf& a, const FinitePresheaf& b) {
  std::vector<std::pair<int, int>> vars;
  for (int l = 0; l < a.level_count(); ++l)
    for (int x = 0; x < a.sizes[l]; ++x) {
      if (b.sizes[l] == 0) return {};
      vars.push_back({l, x});
    }
  PresheafMap f(a.level_count());
  for (int l = 0; l < a.level_count(); ++l) f[l].assign(a.sizes[l], 0);
  std::vector<PresheafMap> out;
  while (true) {
    if (is_natural(a, b, f)) out.push_back(f);
    int k = static_cast<int>(vars.size()) - 1;
    for (; k >= 0; --k) {
      auto [l, x] = vars[k];
      if (++f[l][x] < b.sizes[l]) break;
      f[l][x] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

/// Face on the ascending vertex list S, deleting omitted vertices smallest first.
inline int naive_face(const TruncatedSimplicialSet& x, int n, const std::vector<int>& keep, int e) {
  int removed = 0, level = n;
  for (int v = 0; v <= n; ++v) {
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) continue;
    e = x.d(level--, v - removed, e);
    ++removed;
  }
  return e;
}

/// Every decomposition of the (n+1)-gon along a diagonal (i, j), 3 <= n <= t.
inline bool naive_2segal(const TruncatedSimplicialSet& x) {
  for (int n = 3; n <= x.truncation; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) {
        if (i == 0 && j == n) continue;
        std::vector<int> outer, inner;
        for (int v = 0; v <= i; ++v) outer.push_back(v);
        for (int v = j; v <= n; ++v) outer.push_back(v);
        for (int v = i; v <= j; ++v) inner.push_back(v);
        const int no = static_cast<int>(outer.size()) - 1, ni = j - i;
        std::set<std::pair<int, int>> target;
        for (int p = 0; p < x.size(no); ++p)
          for (int q = 0; q < x.size(ni); ++q)
            if (naive_face(x, no, {i, i + 1}, p) == naive_face(x, ni, {0, ni}, q)) target.insert({p, q});
        std::set<std::pair<int, int>> image;
        for (int e = 0; e < x.size(n); ++e)
          if (!image.insert({naive_face(x, n, outer, e), naive_face(x, n, inner, e)}).second) return false;
        if (image != target) return false;
      }
  return true;
}

/// X_1 -> X_2 x_{X_1} X_0 for both degenerate triangles.
inline bool naive_unital(const TruncatedSimplicialSet& x) {
  if (x.truncation < 2) return true;
  for (int face : {0, 2}) {
    std::set<std::pair<int, int>> target, image;
    for (int s = 0; s < x.size(2); ++s)
      for (int v = 0; v < x.size(0); ++v)
        if (x.d(2, face, s) == x.s(0, 0, v)) target.insert({s, v});
    for (int e = 0; e < x.size(1); ++e) {
      std::pair<int, int> p = face == 0 ? std::pair{x.s(1, 1, e), x.d(1, 0, e)}
                                        : std::pair{x.s(1, 0, e), x.d(1, 1, e)};
      if (!image.insert(p).second) return false;
    }
    if (image != target) return false;
  }
  return true;
}

/// Structure constants of the category algebra in the basis of x = nerve_category(c, t).
inline StructureConstants category_algebra(const FiniteCategoryData& c, const TruncatedSimplicialSet& x) {
  StructureConstants s;
  s.basis = x.names[1];
  const int n = s.size();
  std::map<std::string, int> morphism;
  for (int m = 0; m < c.morphism_count(); ++m) morphism[c.morphisms[m].name] = m;
  s.table.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int h = 0; h < n; ++h) {
        int f = morphism.at(s.basis[a]), g = morphism.at(s.basis[b]);
        if (c.morphisms[f].target == c.morphisms[g].source && c.compose[g][f] == morphism.at(s.basis[h]))
          s.table[(static_cast<std::size_t>(a) * n + b) * n + h] = 1;
      }
  return s;
}

inline std::int64_t naive_assoc_defect(const StructureConstants& s) {
  const int n = s.size();
  std::int64_t bad = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < n; ++f) {
          std::int64_t l = 0, r = 0;
          for (int e = 0; e < n; ++e) {
            l += s(a, b, e) * s(e, c, f);
            r += s(b, c, e) * s(a, e, f);
          }
          bad += l != r;
        }
  return bad;
}

/// Square grids with mono rows, epi columns and a bicartesian square, by brute force.
inline std::size_t naive_exact_squares(const ProtoExactData& e) {
  const auto& c = e.category;
  std::size_t count = 0;
  for (int top = 0; top < c.morphism_count(); ++top)
    for (int left = 0; left < c.morphism_count(); ++left)
      for (int right = 0; right < c.morphism_count(); ++right)
        for (int bottom = 0; bottom < c.morphism_count(); ++bottom) {
          if (!e.mono[top] || !e.mono[bottom] || !e.epi[left] || !e.epi[right]) continue;
          ExactSquare s{top, left, right, bottom};
          if (c.morphisms[top].source != c.morphisms[left].source ||
              c.morphisms[top].target != c.morphisms[right].source ||
              c.morphisms[left].target != c.morphisms[bottom].source ||
              c.morphisms[right].target != c.morphisms[bottom].target)
            continue;
          if (commutes(e, s) && is_pullback(e, s) && is_pushout(e, s)) ++count;
        }
  return count;
}

} // namespace twoseg::testing
