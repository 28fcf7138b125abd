#pragma once

// Scan of the simplicial identities for one simplicial direction, given as
// callbacks. Shared by simplicial sets, both directions of a Sigma-set and
// the object/morphism tables of groupoid-valued diagrams.

#include <functional>
#include <string>
#include <vector>

#include "twoseg/report.hpp"

namespace twoseg {

struct SimplicialDirection {
  int top = 0;  // highest level present
  std::function<int(int)> size;
  std::function<int(int, int, int)> face;   // (level, i, x) -> element of level-1
  std::function<int(int, int, int)> degen;  // (level, i, x) -> element of level+1
  std::function<std::string(int, int)> name;
  std::string d = "d";
  std::string s = "s";
  std::vector<int> prefix;  // index components placed before (n, i, j)
};

namespace detail {

inline void identity_failure(CheckReport& rep, const SimplicialDirection& dir,
                             const std::string& law, int n, int i, int j, int x, int lhs_level,
                             int lhs, int rhs) {
  std::vector<int> idx = dir.prefix;
  idx.insert(idx.end(), {n, i, j});
  rep.fail({law, idx, "element of level " + std::to_string(n),
            FailureKind::structural,
            {dir.name(n, x), dir.name(lhs_level, lhs), dir.name(lhs_level, rhs)}});
}

} // namespace detail

/// Appends every violated identity to `rep`; `checked` counts (law, n, i, j) instances.
inline void check_simplicial_identities(const SimplicialDirection& dir, CheckReport& rep) {
  const std::string& d = dir.d;
  const std::string& s = dir.s;
  const int t = dir.top;
  for (int n = 2; n <= t; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        ++rep.checked;
        for (int x = 0; x < dir.size(n); ++x) {
          int lhs = dir.face(n - 1, i, dir.face(n, j, x));
          int rhs = dir.face(n - 1, j - 1, dir.face(n, i, x));
          if (lhs != rhs) {
            detail::identity_failure(rep, dir, d + "_i " + d + "_j = " + d + "_{j-1} " + d + "_i",
                                     n, i, j, x, n - 2, lhs, rhs);
            break;
          }
        }
      }
  for (int n = 0; n < t; ++n)
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n + 1; ++i) {
        ++rep.checked;
        for (int x = 0; x < dir.size(n); ++x) {
          int up = dir.degen(n, j, x);
          int lhs = dir.face(n + 1, i, up);
          int rhs;
          std::string law;
          if (i == j || i == j + 1) {
            rhs = x;
            law = d + "_i " + s + "_j = id (i = j, j+1)";
          } else if (i < j) {
            rhs = dir.degen(n - 1, j - 1, dir.face(n, i, x));
            law = d + "_i " + s + "_j = " + s + "_{j-1} " + d + "_i (i < j)";
          } else {
            rhs = dir.degen(n - 1, j, dir.face(n, i - 1, x));
            law = d + "_i " + s + "_j = " + s + "_j " + d + "_{i-1} (i > j+1)";
          }
          if (lhs != rhs) {
            detail::identity_failure(rep, dir, law, n, i, j, x, n, lhs, rhs);
            break;
          }
        }
      }
    }
  for (int n = 0; n + 2 <= t; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i) {
        ++rep.checked;
        for (int x = 0; x < dir.size(n); ++x) {
          int lhs = dir.degen(n + 1, i, dir.degen(n, j, x));
          int rhs = dir.degen(n + 1, j + 1, dir.degen(n, i, x));
          if (lhs != rhs) {
            detail::identity_failure(rep, dir, s + "_i " + s + "_j = " + s + "_{j+1} " + s + "_i",
                                     n, i, j, x, n + 2, lhs, rhs);
            break;
          }
        }
      }
}

} // namespace twoseg
