#pragma once

// Smallest-first search for a truncated simplicial set that fails the 2-Segal
// condition, over objects with free edges, boundary-determined 2-simplices and
// coskeletal higher levels.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/segal.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

struct SearchOptions {
  int max_x0 = 1;
  int max_x1 = 2;
  int truncation = 3;
};

struct SearchResult {
  bool found = false;
  std::size_t examined = 0;
  TruncatedSimplicialSet object;
  CheckReport report;  // check_2segal of the object when found
  std::vector<std::string> description;
};

struct Skeleton2 {
  int vertices = 1;
  std::vector<std::pair<int, int>> edges;          // nondegenerate edges (source, target)
  std::vector<std::tuple<int, int, int>> extras;   // nondegenerate (d0, d1, d2), edge ids
};

namespace detail {

/// Edge ids: vertex v's degenerate edge is v; nondegenerate edge k is vertices + k.
inline TruncatedSimplicialSet skeleton_to_sset(const Skeleton2& sk) {
  const int nv = sk.vertices;
  const int ne = nv + static_cast<int>(sk.edges.size());
  auto src = [&](int e) { return e < nv ? e : sk.edges[e - nv].first; };
  auto tgt = [&](int e) { return e < nv ? e : sk.edges[e - nv].second; };
  std::vector<std::string> edge_name;
  for (int v = 0; v < nv; ++v) edge_name.push_back("id" + std::to_string(v));
  for (std::size_t k = 0; k < sk.edges.size(); ++k) edge_name.push_back("x" + std::to_string(k + 1));
  std::vector<std::tuple<int, int, int>> tri;
  std::map<std::tuple<int, int, int>, int> tri_index;
  auto add = [&](std::tuple<int, int, int> t) {
    if (tri_index.emplace(t, static_cast<int>(tri.size())).second) tri.push_back(t);
  };
  for (int e = 0; e < ne; ++e) {
    add({e, e, src(e)});
    add({tgt(e), e, e});
  }
  for (const auto& t : sk.extras) add(t);
  std::vector<std::string> v0, v1, v2;
  for (int v = 0; v < nv; ++v) v0.push_back(std::to_string(v));
  v1 = edge_name;
  for (auto [a, b, c] : tri) v2.push_back("<" + edge_name[a] + "," + edge_name[b] + "," + edge_name[c] + ">");
  auto x = TruncatedSimplicialSet::with_levels({v0, v1, v2});
  for (int e = 0; e < ne; ++e) {
    x.faces[1][0][e] = tgt(e);
    x.faces[1][1][e] = src(e);
  }
  for (int v = 0; v < nv; ++v) x.degens[0][0][v] = v;
  for (std::size_t k = 0; k < tri.size(); ++k) {
    x.faces[2][0][k] = std::get<0>(tri[k]);
    x.faces[2][1][k] = std::get<1>(tri[k]);
    x.faces[2][2][k] = std::get<2>(tri[k]);
  }
  for (int e = 0; e < ne; ++e) {
    x.degens[1][0][e] = tri_index.at({e, e, src(e)});
    x.degens[1][1][e] = tri_index.at({tgt(e), e, e});
  }
  return x;
}

} // namespace detail

/// Extends an n-truncated simplicial set (n >= 2) by coskeletal levels up to t.
inline TruncatedSimplicialSet coskeletal_extension(const TruncatedSimplicialSet& x, int t) {
  if (x.truncation < 2) throw PreconditionError("coskeletal extension needs truncation >= 2");
  std::vector<std::vector<std::string>> names = x.names;
  auto out = x;
  for (int n = x.truncation + 1; n <= t; ++n) {
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> index;
    std::vector<int> cur(n + 1);
    auto extend = [&](auto&& self, int j) -> void {
      if (j > n) {
        index[cur] = static_cast<int>(tuples.size());
        tuples.push_back(cur);
        return;
      }
      for (int s = 0; s < out.size(n - 1); ++s) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i) ok = out.d(n - 1, i, s) == out.d(n - 1, j - 1, cur[i]);
        if (!ok) continue;
        cur[j] = s;
        self(self, j + 1);
      }
    };
    extend(extend, 0);
    std::vector<std::string> level;
    for (const auto& tp : tuples) {
      std::string nm = "c" + std::to_string(n) + ":";
      for (int k = 0; k <= n; ++k) nm += (k ? "." : "") + std::to_string(tp[k]);
      level.push_back(nm);
    }
    names.push_back(level);
    auto next = TruncatedSimplicialSet::with_levels(names);
    for (int m = 0; m <= out.truncation; ++m) {
      if (m >= 1) next.faces[m] = out.faces[m];
      if (m < out.truncation) next.degens[m] = out.degens[m];
    }
    for (std::size_t k = 0; k < tuples.size(); ++k)
      for (int i = 0; i <= n; ++i) next.faces[n][i][k] = tuples[k][i];
    // s_j tau has faces s_{j-1} d_i tau (i < j), tau (i = j, j+1), s_j d_{i-1} tau (i > j+1).
    for (int tau = 0; tau < out.size(n - 1); ++tau)
      for (int j = 0; j <= n - 1; ++j) {
        std::vector<int> faces(n + 1);
        for (int i = 0; i <= n; ++i) {
          if (i < j) faces[i] = out.s(n - 2, j - 1, out.d(n - 1, i, tau));
          else if (i == j || i == j + 1) faces[i] = tau;
          else faces[i] = out.s(n - 2, j, out.d(n - 1, i - 1, tau));
        }
        next.degens[n - 1][j][tau] = index.at(faces);
      }
    out = std::move(next);
  }
  return out;
}

/// Objects are ordered by (|X_0|, |X_1|, number of extra 2-simplices), then
/// lexicographically; the first one failing check_2segal is returned.
inline SearchResult search_non_2segal(const SearchOptions& opt) {
  if (opt.truncation < 3) throw PreconditionError("search: truncation must be >= 3");
  if (opt.max_x0 < 1 || opt.max_x1 < opt.max_x0)
    throw PreconditionError("search: need 1 <= max-x0 <= max-x1");
  SearchResult res;
  for (int nv = 1; nv <= opt.max_x0; ++nv)
    for (int m = 0; nv + m <= opt.max_x1; ++m) {
      std::vector<std::pair<int, int>> pairs;
      for (int s = 0; s < nv; ++s)
        for (int t = 0; t < nv; ++t) pairs.push_back({s, t});
      std::vector<int> choice(m, 0);
      while (true) {
        Skeleton2 sk;
        sk.vertices = nv;
        for (int c : choice) sk.edges.push_back(pairs[c]);
        const int ne = nv + m;
        auto src = [&](int e) { return e < nv ? e : sk.edges[e - nv].first; };
        auto tgt = [&](int e) { return e < nv ? e : sk.edges[e - nv].second; };
        std::vector<std::tuple<int, int, int>> candidates;
        for (int d0 = 0; d0 < ne; ++d0)
          for (int d1 = 0; d1 < ne; ++d1)
            for (int d2 = 0; d2 < ne; ++d2) {
              if (src(d2) != src(d1) || tgt(d2) != src(d0) || tgt(d0) != tgt(d1)) continue;
              bool degenerate = (d0 == d1 && d2 == src(d0) && d2 < nv) ||
                                (d1 == d2 && d0 == tgt(d1) && d0 < nv);
              if (!degenerate) candidates.push_back({d0, d1, d2});
            }
        const int nc = static_cast<int>(candidates.size());
        for (int r = 0; r <= nc; ++r) {
          std::vector<int> pick(r);
          for (int k = 0; k < r; ++k) pick[k] = k;
          while (true) {
            sk.extras.clear();
            for (int k : pick) sk.extras.push_back(candidates[k]);
            auto x = coskeletal_extension(detail::skeleton_to_sset(sk), opt.truncation);
            ++res.examined;
            auto rep = check_2segal(x);
            if (rep.failed()) {
              res.found = true;
              res.object = std::move(x);
              res.report = std::move(rep);
              res.description.push_back("|X_0| = " + std::to_string(nv));
              res.description.push_back("|X_1| = " + std::to_string(ne));
              auto en = [&](int e) { return res.object.name(1, e); };
              for (const auto& [a, b, c] : sk.extras)
                res.description.push_back("extra 2-simplex with (d0,d1,d2) = (" + en(a) + "," + en(b) +
                                          "," + en(c) + ")");
              return res;
            }
            int k = r - 1;
            while (k >= 0 && pick[k] == nc - r + k) --k;
            if (k < 0) break;
            ++pick[k];
            for (int q = k + 1; q < r; ++q) pick[q] = pick[q - 1] + 1;
          }
        }
        int k = m - 1;
        while (k >= 0 && choice[k] + 1 == static_cast<int>(pairs.size())) --k;
        if (k < 0) break;
        ++choice[k];
        for (int q = k + 1; q < m; ++q) choice[q] = choice[k];
      }
    }
  return res;
}

} // namespace twoseg
