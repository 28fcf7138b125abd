#pragma once

// Incidence-style structure constants on X_1 and their associativity.
// Beyond the scope of the construction itself: a behavioral test only.

#include <cstdint>
#include <string>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/parallel.hpp"
#include "twoseg/report.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

struct StructureConstants {
  std::vector<std::string> basis;
  std::vector<std::int64_t> table;  // c(a,b,c) at (a*n + b)*n + c

  int size() const { return static_cast<int>(basis.size()); }
  std::int64_t operator()(int a, int b, int c) const {
    const int n = size();
    return table[(static_cast<std::size_t>(a) * n + b) * n + c];
  }
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

/// c(a,b,c) = #{sigma in X_2 : d_2 sigma = a, d_0 sigma = b, d_1 sigma = c}.
inline StructureConstants structure_constants(const TruncatedSimplicialSet& x) {
  if (x.truncation < 2) throw PreconditionError("structure constants need truncation >= 2");
  StructureConstants s;
  s.basis = x.names[1];
  const int n = s.size();
  s.table.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int sigma = 0; sigma < x.size(2); ++sigma)
    ++s.table[(static_cast<std::size_t>(x.d(2, 2, sigma)) * n + x.d(2, 0, sigma)) * n +
              x.d(2, 1, sigma)];
  return s;
}

inline nlohmann::json to_json(const StructureConstants& s) {
  nlohmann::json nonzero = nlohmann::json::array();
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s(a, b, c) != 0) nonzero.push_back({s.basis[a], s.basis[b], s.basis[c], s(a, b, c)});
  return {{"basis", s.basis}, {"constants", nonzero}};
}

/// sum_e c(a,b,e) c(e,c,f) = sum_e c(b,c,e) c(a,e,f) for all (a,b,c,f).
inline CheckReport check_associativity(const StructureConstants& s, int jobs = 1) {
  CheckReport rep;
  const int n = s.size();
  rep.scope = "all " + std::to_string(n) + "^4 basis quadruples";
  std::vector<std::size_t> first_bad(n, SIZE_MAX);
  parallel_for(n, jobs, [&](int a) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < n; ++f) {
          std::int64_t lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += s(a, b, e) * s(e, c, f);
            rhs += s(b, c, e) * s(a, e, f);
          }
          if (lhs != rhs) {
            std::size_t pos = (static_cast<std::size_t>(b) * n + c) * n + f;
            if (pos < first_bad[a]) first_bad[a] = pos;
            return;
          }
        }
  });
  rep.checked = static_cast<std::size_t>(n) * n * n * n;
  for (int a = 0; a < n; ++a) {
    if (first_bad[a] == SIZE_MAX) continue;
    int f = static_cast<int>(first_bad[a] % n);
    int c = static_cast<int>(first_bad[a] / n % n);
    int b = static_cast<int>(first_bad[a] / n / n);
    std::int64_t lhs = 0, rhs = 0;
    for (int e = 0; e < n; ++e) {
      lhs += s(a, b, e) * s(e, c, f);
      rhs += s(b, c, e) * s(a, e, f);
    }
    rep.fail({"associativity", {a, b, c, f}, "sum_e c(a,b,e) c(e,c,f) = sum_e c(b,c,e) c(a,e,f)",
              FailureKind::structural,
              {s.basis[a], s.basis[b], s.basis[c], s.basis[f], "lhs=" + std::to_string(lhs),
               "rhs=" + std::to_string(rhs)}});
    break;
  }
  return rep;
}

} // namespace twoseg
