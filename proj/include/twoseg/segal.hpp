#pragma once

#include <string>
#include <vector>

#include "twoseg/bijection.hpp"
#include "twoseg/report.hpp"
#include "twoseg/sigma.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

using NameFn = std::function<std::string(int)>;

/// Checks that x -> (p(x), q(x)) is a bijection onto the strict pullback of
/// f : A -> C and g : B -> C.
inline bool check_pullback_comparison(CheckReport& rep, const std::string& condition,
                                      const std::vector<int>& index, const std::string& role,
                                      const std::vector<int>& p, const std::vector<int>& q,
                                      const std::vector<int>& f, const std::vector<int>& g,
                                      const NameFn& src_name, const NameFn& a_name,
                                      const NameFn& b_name) {
  LevelPullback pb = level_pullback(f, g);
  std::vector<int> table(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    table[x] = pb.find(p[x], q[x]);
    if (table[x] < 0) {
      ++rep.checked;
      rep.fail({condition, index, role + " (square does not commute)", FailureKind::structural,
                {src_name(static_cast<int>(x))}});
      return false;
    }
  }
  return check_bijection(rep, condition, index, role, table, pb.size(), src_name,
                         [&](int k) {
                           return "(" + a_name(pb.first[k]) + ", " + b_name(pb.second[k]) + ")";
                         });
}

/// Checks that (a, b) -> h(a, b) from the pullback of f and g is a bijection.
inline bool check_map_from_pullback(CheckReport& rep, const std::string& condition,
                                    const std::vector<int>& index, const std::string& role,
                                    const std::vector<int>& f, const std::vector<int>& g,
                                    const std::function<int(int, int)>& h, int target_size,
                                    const NameFn& a_name, const NameFn& b_name,
                                    const NameFn& target_name) {
  LevelPullback pb = level_pullback(f, g);
  std::vector<int> table;
  table.reserve(pb.size());
  for (int k = 0; k < pb.size(); ++k) table.push_back(h(pb.first[k], pb.second[k]));
  return check_bijection(
      rep, condition, index, role, table, target_size,
      [&](int k) { return "(" + a_name(pb.first[k]) + ", " + b_name(pb.second[k]) + ")"; },
      target_name);
}

inline std::string vertex_list(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

// ---------------------------------------------------------------------------
// Set-level 2-Segal and unitality

/// Both families for every n >= 2 with n+1 <= t:
///   lower: X_{n+1} -> X_{0,1,2} x_{X_{0,2}} X_{0,2,...,n+1}
///   upper: X_{n+1} -> X_{n-1,n,n+1} x_{X_{n-1,n+1}} X_{0,...,n-1,n+1}
inline CheckReport check_2segal(const TruncatedSimplicialSet& x) {
  CheckReport rep;
  const int t = x.truncation;
  rep.scope = "verified up to degree " + std::to_string(t);
  if (t < 3) {
    rep.mark_partial("truncation " + std::to_string(t) + " < 3: no 2-Segal instance fits");
    return rep;
  }
  auto names = [&](int level) { return [&x, level](int e) { return x.name(level, e); }; };
  for (int n = 2; n + 1 <= t; ++n) {
    std::vector<int> lower_tri{0, 1, 2};
    std::vector<int> lower_poly{0};
    for (int v = 2; v <= n + 1; ++v) lower_poly.push_back(v);
    std::vector<int> upper_tri{n - 1, n, n + 1};
    std::vector<int> upper_poly;
    for (int v = 0; v <= n - 1; ++v) upper_poly.push_back(v);
    upper_poly.push_back(n + 1);

    struct Family {
      const char* name;
      std::vector<int> tri, poly, tri_edge, poly_edge;
    };
    std::vector<Family> fams{
        {"2segal-lower", lower_tri, lower_poly, {0, 2}, {0, 1}},
        {"2segal-upper", upper_tri, upper_poly, {0, 2}, {n - 1, n}},
    };
    for (const auto& fam : fams) {
      auto p = vertex_selection(x, n + 1, fam.tri);
      auto q = vertex_selection(x, n + 1, fam.poly);
      auto f = vertex_selection(x, 2, fam.tri_edge);
      auto g = vertex_selection(x, n, fam.poly_edge);
      std::vector<int> shared{fam.tri[fam.tri_edge[0]], fam.tri[fam.tri_edge[1]]};
      std::string role = "X_" + std::to_string(n + 1) + " -> X_" + vertex_list(fam.tri) +
                         " x_{X_" + vertex_list(shared) + "} X_" + vertex_list(fam.poly);
      check_pullback_comparison(rep, fam.name, {n}, role, p, q, f, g, names(n + 1), names(2),
                                names(n));
    }
  }
  return rep;
}

inline CheckReport check_unital(const TruncatedSimplicialSet& x) {
  CheckReport rep;
  rep.scope = "verified up to degree " + std::to_string(x.truncation);
  if (x.truncation < 2) {
    rep.mark_partial("truncation " + std::to_string(x.truncation) + " < 2: unital squares do not fit");
    return rep;
  }
  auto names = [&](int level) { return [&x, level](int e) { return x.name(level, e); }; };
  const int n1 = x.size(1);
  std::vector<int> s1(n1), s0(n1), d0(n1), d1(n1);
  for (int e = 0; e < n1; ++e) {
    s1[e] = x.s(1, 1, e);
    s0[e] = x.s(1, 0, e);
    d0[e] = x.d(1, 0, e);
    d1[e] = x.d(1, 1, e);
  }
  std::vector<int> face20(x.size(2)), face22(x.size(2)), deg00(x.size(0));
  for (int e = 0; e < x.size(2); ++e) {
    face20[e] = x.d(2, 0, e);
    face22[e] = x.d(2, 2, e);
  }
  for (int e = 0; e < x.size(0); ++e) deg00[e] = x.s(0, 0, e);
  check_pullback_comparison(rep, "unital-s1-d0", {1}, "(s_1, d_0): X_1 -> X_2 x_{X_1} X_0 over (d_0, s_0)",
                            s1, d0, face20, deg00, names(1), names(2), names(0));
  check_pullback_comparison(rep, "unital-s0-d1", {1}, "(s_0, d_1): X_1 -> X_2 x_{X_1} X_0 over (d_2, s_0)",
                            s0, d1, face22, deg00, names(1), names(2), names(0));
  return rep;
}

// ---------------------------------------------------------------------------
// Stable augmented double Segal conditions

namespace detail {

inline std::vector<int> iterate_faces(const PreaugBisimplicialSet& d, char dir, int a, int b,
                                      bool last, int times) {
  std::vector<int> out(d.size(a, b));
  for (int x = 0; x < d.size(a, b); ++x) {
    int cur = x, ca = a, cb = b;
    for (int k = 0; k < times; ++k) {
      if (dir == 'v') {
        cur = d.dv(ca, cb, last ? ca : 0, cur);
        --ca;
      } else {
        cur = d.dh(ca, cb, last ? cb : 0, cur);
        --cb;
      }
    }
    out[x] = cur;
  }
  return out;
}

inline NameFn level_names(const PreaugBisimplicialSet& d, int a, int b) {
  if (a < 0) return [&d](int x) { return d.augmentation[x]; };
  return [&d, a, b](int x) { return d.name(a, b, x); };
}

} // namespace detail

inline CheckReport check_double_segal(const PreaugBisimplicialSet& d) {
  CheckReport rep;
  const int T = d.total_truncation;
  rep.scope = "verified up to total degree " + std::to_string(T);
  using detail::iterate_faces;
  using detail::level_names;
  for (int m = 0; m + 1 <= T; ++m)
    for (int k = 0; k + 1 + m <= T; ++k)
      for (int l = 0; k + l + 1 + m <= T; ++l) {
        // (k+l, m): first k+1 vertical vertices and last l+1, glued at vertex k.
        auto p = iterate_faces(d, 'v', k + l, m, true, l);
        auto q = iterate_faces(d, 'v', k + l, m, false, k);
        auto f = iterate_faces(d, 'v', k, m, false, k);
        auto g = iterate_faces(d, 'v', l, m, true, l);
        std::string role = "D_{" + std::to_string(k + l) + "," + std::to_string(m) + "} -> D_{" +
                           std::to_string(k) + "," + std::to_string(m) + "} x_{D_{0," +
                           std::to_string(m) + "}} D_{" + std::to_string(l) + "," +
                           std::to_string(m) + "}";
        check_pullback_comparison(rep, "double-segal-vertical", {k, l, m}, role, p, q, f, g,
                                  level_names(d, k + l, m), level_names(d, k, m),
                                  level_names(d, l, m));
        auto ph = iterate_faces(d, 'h', m, k + l, true, l);
        auto qh = iterate_faces(d, 'h', m, k + l, false, k);
        auto fh = iterate_faces(d, 'h', m, k, false, k);
        auto gh = iterate_faces(d, 'h', m, l, true, l);
        std::string roleh = "D_{" + std::to_string(m) + "," + std::to_string(k + l) + "} -> D_{" +
                            std::to_string(m) + "," + std::to_string(k) + "} x_{D_{" +
                            std::to_string(m) + ",0}} D_{" + std::to_string(m) + "," +
                            std::to_string(l) + "}";
        check_pullback_comparison(rep, "double-segal-horizontal", {k, l, m}, roleh, ph, qh, fh, gh,
                                  level_names(d, m, k + l), level_names(d, m, k),
                                  level_names(d, m, l));
      }
  return rep;
}

inline CheckReport check_stability(const PreaugBisimplicialSet& d) {
  CheckReport rep;
  const int T = d.total_truncation;
  rep.scope = "verified up to total degree " + std::to_string(T);
  if (T < 3) {
    rep.mark_partial("total truncation " + std::to_string(T) + " < 3: D(1,1) not present");
    return rep;
  }
  using detail::level_names;
  const auto& dh11 = d.hface[1][1];
  const auto& dv11 = d.vface[1][1];
  const auto& dv10 = d.vface[1][0];
  const auto& dh01 = d.hface[0][1];
  check_pullback_comparison(rep, "stability-span", {1, 1},
                            "(d^h_1, d^v_1): D_{1,1} -> D_{1,0} x_{D_{0,0}} D_{0,1}", dh11[1],
                            dv11[1], dv10[1], dh01[1], level_names(d, 1, 1), level_names(d, 1, 0),
                            level_names(d, 0, 1));
  check_pullback_comparison(rep, "stability-cospan", {1, 1},
                            "(d^v_0, d^h_0): D_{1,1} -> D_{0,1} x_{D_{0,0}} D_{1,0}", dv11[0],
                            dh11[0], dh01[0], dv10[0], level_names(d, 1, 1), level_names(d, 0, 1),
                            level_names(d, 1, 0));
  return rep;
}

inline CheckReport check_augmentation(const PreaugBisimplicialSet& d) {
  CheckReport rep;
  const int T = d.total_truncation;
  rep.scope = "verified up to total degree " + std::to_string(T);
  if (T < 2) {
    rep.mark_partial("total truncation 1: D(1,0) and D(0,1) not present");
    return rep;
  }
  using detail::level_names;
  const auto& dv10 = d.vface[1][0];
  const auto& dh01 = d.hface[0][1];
  check_map_from_pullback(
      rep, "augmentation-vertical", {1, 0},
      "d^v_1: D_{1,0} x_{D_{0,0}} D_{-1} -> D_{0,0} over (d^v_0, eps)", dv10[0], d.eps,
      [&](int y, int) { return dv10[1][y]; }, d.size(0, 0), level_names(d, 1, 0),
      level_names(d, -1, -1), level_names(d, 0, 0));
  check_map_from_pullback(
      rep, "augmentation-horizontal", {0, 1},
      "d^h_0: D_{-1} x_{D_{0,0}} D_{0,1} -> D_{0,0} over (eps, d^h_1)", d.eps, dh01[1],
      [&](int, int z) { return dh01[0][z]; }, d.size(0, 0), level_names(d, -1, -1),
      level_names(d, 0, 1), level_names(d, 0, 0));
  return rep;
}

inline CheckReport check_sadss(const PreaugBisimplicialSet& d) {
  CheckReport rep;
  rep.scope = "verified up to total degree " + std::to_string(d.total_truncation);
  rep.add_subreport("double-segal", check_double_segal(d));
  rep.add_subreport("stability", check_stability(d));
  rep.add_subreport("augmentation", check_augmentation(d));
  return rep;
}

/// eps = (d^v_1 o pi_1) o (s^v_0 eps, id), where the first map is a section of
/// the projection to D(-1) and the second is a bijection; hence eps is injective.
inline CheckReport check_augmentation_retract(const PreaugBisimplicialSet& d) {
  CheckReport rep;
  rep.scope = "verified up to total degree " + std::to_string(d.total_truncation);
  if (d.total_truncation < 2) {
    rep.mark_partial("total truncation 1: D(1,0) not present");
    return rep;
  }
  CheckReport pre = check_sadss(d);
  if (!pre.passed()) {
    ++rep.checked;
    std::vector<std::string> failing;
    for (const auto& inst : pre.instances) failing.push_back(inst.condition + index_string(inst.index));
    rep.fail({"precondition", {}, "input is not a stable augmented double Segal object",
              FailureKind::precondition, failing});
    return rep;
  }
  using detail::level_names;
  const auto& dv10 = d.vface[1][0];
  const auto& sv00 = d.vdegen[0][0][0];
  LevelPullback pb = level_pullback(dv10[0], d.eps);
  auto pair_name = [&](int k) {
    return "(" + d.name(1, 0, pb.first[k]) + ", " + d.augmentation[pb.second[k]] + ")";
  };
  std::vector<int> section(d.aug_size());
  ++rep.checked;
  bool sectioned = true;
  for (int u = 0; u < d.aug_size(); ++u) {
    section[u] = pb.find(sv00[d.eps[u]], u);
    if (section[u] < 0 || pb.second[section[u]] != u) {
      rep.fail({"retract-section", {-1}, "u -> (s^v_0 eps u, u) into D_{1,0} x_{D_{0,0}} D_{-1}",
                FailureKind::structural, {d.augmentation[u]}});
      sectioned = false;
      break;
    }
  }
  std::vector<int> tilted;
  for (int k = 0; k < pb.size(); ++k) tilted.push_back(dv10[1][pb.first[k]]);
  check_bijection(rep, "retract-comparison", {1, 0},
                  "d^v_1 o pi_1: D_{1,0} x_{D_{0,0}} D_{-1} -> D_{0,0}", tilted, d.size(0, 0),
                  pair_name, level_names(d, 0, 0));
  if (sectioned) {
    ++rep.checked;
    for (int u = 0; u < d.aug_size(); ++u)
      if (tilted[section[u]] != d.eps[u]) {
        rep.fail({"retract-composite", {-1}, "d^v_1 o pi_1 o section = eps",
                  FailureKind::structural, {d.augmentation[u], d.name(0, 0, tilted[section[u]]),
                                            d.name(0, 0, d.eps[u])}});
        break;
      }
  }
  ++rep.checked;
  std::vector<int> seen(d.size(0, 0), -1);
  for (int u = 0; u < d.aug_size(); ++u) {
    int y = d.eps[u];
    if (seen[y] >= 0) {
      rep.fail({"eps-injective", {-1}, "eps: D_{-1} -> D_{0,0}", FailureKind::not_injective,
                {d.augmentation[seen[y]], d.augmentation[u], d.name(0, 0, y)}});
      break;
    }
    seen[y] = u;
  }
  return rep;
}

} // namespace twoseg
