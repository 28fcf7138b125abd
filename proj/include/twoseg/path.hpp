#pragma once

#include <string>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/sigma.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

/// P_{a,b} X = X_{a+1+b}, P_{-1} X = X_0. Vertical structure maps at (a,b)
/// are d_i, s_i for i <= a; horizontal ones are d_{j+1+a}, s_{j+1+a}; eps = s_0.
inline PreaugBisimplicialSet path_of_sset(const TruncatedSimplicialSet& x) {
  const int T = x.truncation;
  if (T < 1) throw PreconditionError("path construction needs truncation >= 1 (got 0)");
  auto d = PreaugBisimplicialSet::with_levels(
      T, x.names[0], [&](int a, int b) { return x.names[a + 1 + b]; });
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      const int n = a + 1 + b;
      for (int i = 0; a >= 1 && i <= a; ++i) d.vface[a][b][i] = x.faces[n][i];
      for (int j = 0; b >= 1 && j <= b; ++j) d.hface[a][b][j] = x.faces[n][j + 1 + a];
      if (n + 1 <= T) {
        for (int i = 0; i <= a; ++i) d.vdegen[a][b][i] = x.degens[n][i];
        for (int j = 0; j <= b; ++j) d.hdegen[a][b][j] = x.degens[n][j + 1 + a];
      }
    }
  d.eps = x.degens[0][0];
  return d;
}

/// Component at (a,b) is f_{a+1+b}; at the augmentation it is f_0.
inline SigmaMap path_of_map(const SimplicialMap& f) {
  const int T = static_cast<int>(f.size()) - 1;
  if (T < 1) throw PreconditionError("path of a map needs truncation >= 1");
  SigmaLayout lay(T);
  SigmaMap out(lay.bidegree_of.size());
  out[0] = f[0];
  for (std::size_t k = 1; k < lay.bidegree_of.size(); ++k) {
    auto [a, b] = lay.bidegree_of[k];
    out[k] = f[a + 1 + b];
  }
  return out;
}

/// P Delta[n] with total truncation T (default max(n, 1)).
inline PreaugBisimplicialSet path_standard_simplex(int n, int T = -1) {
  if (n < 0) throw PreconditionError("path_standard_simplex: n must be >= 0");
  if (T < 0) T = std::max(n, 1);
  return path_of_sset(standard_simplex(n, T));
}

} // namespace twoseg
