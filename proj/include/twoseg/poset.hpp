#pragma once

// Finite posets: the covering-relation mini-language, poset categories,
// their nerves, and enumeration up to isomorphism.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

struct FinitePoset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> le;  // le[x][y]: x <= y, reflexive and transitive

  int size() const { return static_cast<int>(elements.size()); }
};

/// Parses "0<1<2;0<3": ';'-separated chains of '<'-separated names. Elements
/// appear in order of first mention; isolated elements are single-name chains.
inline FinitePoset parse_poset_spec(const std::string& spec) {
  FinitePoset p;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> covers;
  auto element = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    index[name] = p.size();
    p.elements.push_back(name);
    return p.size() - 1;
  };
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(';', pos);
    if (end == std::string::npos) end = spec.size();
    std::string chain = spec.substr(pos, end - pos);
    std::vector<std::string> names;
    std::size_t cpos = 0;
    while (true) {
      std::size_t lt = chain.find('<', cpos);
      std::string tok = chain.substr(cpos, lt == std::string::npos ? std::string::npos : lt - cpos);
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      names.push_back(tok);
      if (lt == std::string::npos) break;
      cpos = lt + 1;
    }
    bool blank = names.size() == 1 && names[0].empty();
    if (!blank) {
      int prev = -1;
      for (const auto& n : names) {
        if (n.empty()) throw ParseError("poset spec: empty element name in '" + chain + "'");
        for (char ch : n)
          if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw ParseError("poset spec: invalid character '" + std::string(1, ch) + "' in '" + n + "'");
        int cur = element(n);
        if (prev >= 0) covers.push_back({prev, cur});
        prev = cur;
      }
    }
    if (end == spec.size()) break;
    pos = end + 1;
  }
  const int n = p.size();
  p.le.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) p.le[x][x] = true;
  for (auto [x, y] : covers) p.le[x][y] = true;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.le[x][k] && p.le[k][y]) p.le[x][y] = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (p.le[x][y] && p.le[y][x])
        throw ValidationError("poset spec: cycle through '" + p.elements[x] + "' and '" +
                              p.elements[y] + "'");
  return p;
}

/// The covering relation written back in the mini-language.
inline std::string poset_spec(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::string> parts;
  std::vector<bool> mentioned(n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.le[x][y]) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && p.le[x][z] && p.le[z][y]) cover = false;
      if (cover) {
        parts.push_back(p.elements[x] + "<" + p.elements[y]);
        mentioned[x] = mentioned[y] = true;
      }
    }
  for (int x = 0; x < n; ++x)
    if (!mentioned[x]) parts.push_back(p.elements[x]);
  return join(parts, ";");
}

inline FiniteCategoryData poset_category(const FinitePoset& p) {
  FiniteCategoryData c;
  c.objects = p.elements;
  const int n = p.size();
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.le[x][y]) {
        arrow[x][y] = c.morphism_count();
        c.morphisms.push_back({p.elements[x] + "<=" + p.elements[y], x, y});
      }
  for (int x = 0; x < n; ++x) c.identities.push_back(arrow[x][x]);
  c.compose.assign(c.morphism_count(), std::vector<int>(c.morphism_count(), -1));
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g)
      if (c.morphisms[f].target == c.morphisms[g].source)
        c.compose[g][f] = arrow[c.morphisms[f].source][c.morphisms[g].target];
  return c;
}

/// Nerve of a poset; n-simplices are weakly increasing chains named by their
/// vertex sequence ("012", or "a.b.c" when some name is longer than one character).
inline TruncatedSimplicialSet nerve_poset(const FinitePoset& p, int t) {
  auto x = nerve_category(poset_category(p), t);
  bool short_names = std::all_of(p.elements.begin(), p.elements.end(),
                                 [](const std::string& e) { return e.size() == 1; });
  for (int n = 1; n <= t; ++n)
    for (auto& name : x.names[n]) {
      std::vector<std::string> verts;
      std::size_t pos = 0;
      while (true) {
        std::size_t bar = name.find('|', pos);
        std::string arrow = name.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        std::size_t le = arrow.find("<=");
        if (verts.empty()) verts.push_back(arrow.substr(0, le));
        verts.push_back(arrow.substr(le + 2));
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
      name = join(verts, short_names ? "" : ".");
    }
  return x;
}

/// One representative per isomorphism class of posets on n elements named
/// "0".."n-1", ordered by the canonical strict-order bitmask.
inline std::vector<FinitePoset> posets_up_to_iso(int n) {
  if (n < 0 || n > 4) throw PreconditionError("poset enumeration supports 0..4 elements");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) pairs.push_back({x, y});
  const int np = static_cast<int>(pairs.size());
  std::vector<int> perm(n);
  std::map<unsigned long, std::vector<std::vector<bool>>> classes;
  for (unsigned long mask = 0; mask < (1UL << np); ++mask) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int k = 0; k < np; ++k)
      if (mask >> k & 1) lt[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (lt[x][y] && lt[y][x]) ok = false;
        for (int z = 0; z < n && ok; ++z)
          if (lt[x][y] && lt[y][z] && !lt[x][z]) ok = false;
      }
    if (!ok) continue;
    unsigned long canon = ~0UL;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      unsigned long m = 0;
      for (int k = 0; k < np; ++k)
        if (lt[pairs[k].first][pairs[k].second]) {
          int a = perm[pairs[k].first], b = perm[pairs[k].second];
          int idx = static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
          m |= 1UL << idx;
        }
      canon = std::min(canon, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (classes.count(canon)) continue;
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int k = 0; k < np; ++k)
      if (canon >> k & 1) rel[pairs[k].first][pairs[k].second] = true;
    classes[canon] = rel;
  }
  std::vector<FinitePoset> out;
  for (auto& [mask, rel] : classes) {
    FinitePoset p;
    for (int x = 0; x < n; ++x) p.elements.push_back(std::to_string(x));
    p.le = rel;
    for (int x = 0; x < n; ++x) p.le[x][x] = true;
    out.push_back(std::move(p));
  }
  return out;
}

} // namespace twoseg
