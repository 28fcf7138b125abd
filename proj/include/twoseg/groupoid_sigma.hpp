#pragma once

// Sigma-diagrams of finite groupoids and the homotopy-invariant form of the
// stable augmented double Segal conditions.

#include <cstdint>
#include <string>
#include <vector>

#include "twoseg/groupoid.hpp"
#include "twoseg/segal.hpp"
#include "twoseg/sigma.hpp"

namespace twoseg {

struct GroupoidSigmaDiagram {
  int total_truncation = 0;
  FiniteGroupoid augmentation;
  std::vector<std::vector<FiniteGroupoid>> levels;
  std::vector<std::vector<std::vector<GroupoidFunctor>>> vface;   // a >= 1
  std::vector<std::vector<std::vector<GroupoidFunctor>>> vdegen;  // a+2+b <= T
  std::vector<std::vector<std::vector<GroupoidFunctor>>> hface;   // b >= 1
  std::vector<std::vector<std::vector<GroupoidFunctor>>> hdegen;  // a+2+b <= T
  GroupoidFunctor eps;

  const FiniteGroupoid& level(int a, int b) const {
    return a < 0 ? augmentation : levels.at(a).at(b);
  }

  /// Allocates the level grid and per-level functor slots.
  void resize(int T) {
    total_truncation = T;
    levels.assign(T, {});
    vface.assign(T, {});
    vdegen.assign(T, {});
    hface.assign(T, {});
    hdegen.assign(T, {});
    for (int a = 0; a < T; ++a) {
      int n = T - a;
      levels[a].resize(n);
      vface[a].resize(n);
      vdegen[a].resize(n);
      hface[a].resize(n);
      hdegen[a].resize(n);
      for (int b = 0; b < n; ++b) {
        if (a >= 1) vface[a][b].resize(a + 1);
        if (b >= 1) hface[a][b].resize(b + 1);
        if (a + 2 + b <= T) {
          vdegen[a][b].resize(a + 1);
          hdegen[a][b].resize(b + 1);
        }
      }
    }
  }

  friend bool operator==(const GroupoidSigmaDiagram&, const GroupoidSigmaDiagram&) = default;
};

namespace detail {

template <class Pick, class Name>
PreaugBisimplicialSet groupoid_sigma_part(const GroupoidSigmaDiagram& d, Pick pick, Name names) {
  PreaugBisimplicialSet s;
  s.total_truncation = d.total_truncation;
  s.augmentation = names(d.augmentation);
  s.eps = pick(d.eps);
  const int T = d.total_truncation;
  s.levels.resize(T);
  s.vface.resize(T);
  s.vdegen.resize(T);
  s.hface.resize(T);
  s.hdegen.resize(T);
  auto tables = [&](const std::vector<GroupoidFunctor>& fs) {
    std::vector<std::vector<int>> out;
    for (const auto& f : fs) out.push_back(pick(f));
    return out;
  };
  for (int a = 0; a < T; ++a) {
    int n = T - a;
    s.levels[a].resize(n);
    s.vface[a].resize(n);
    s.vdegen[a].resize(n);
    s.hface[a].resize(n);
    s.hdegen[a].resize(n);
    for (int b = 0; b < n; ++b) {
      s.levels[a][b] = names(d.levels[a][b]);
      s.vface[a][b] = tables(d.vface[a][b]);
      s.vdegen[a][b] = tables(d.vdegen[a][b]);
      s.hface[a][b] = tables(d.hface[a][b]);
      s.hdegen[a][b] = tables(d.hdegen[a][b]);
    }
  }
  return s;
}

} // namespace detail

/// The Sigma-set of objects.
inline PreaugBisimplicialSet object_part(const GroupoidSigmaDiagram& d) {
  return detail::groupoid_sigma_part(
      d, [](const GroupoidFunctor& f) { return f.objects; },
      [](const FiniteGroupoid& g) { return g.objects; });
}

/// The Sigma-set of morphisms.
inline PreaugBisimplicialSet morphism_part(const GroupoidSigmaDiagram& d) {
  return detail::groupoid_sigma_part(
      d, [](const GroupoidFunctor& f) { return f.morphisms; },
      [](const FiniteGroupoid& g) { return g.morphisms; });
}

/// Groupoid laws, functoriality of every structure map, and the identities
/// on objects and on morphisms.
inline CheckReport validate_groupoid_sigma(const GroupoidSigmaDiagram& d) {
  const int T = d.total_truncation;
  if (T < 1) throw ValidationError("groupoid Sigma-diagram: total truncation must be >= 1");
  if (static_cast<int>(d.levels.size()) != T)
    throw ValidationError("groupoid Sigma-diagram: level rows do not match total truncation");
  for (int a = 0; a < T; ++a)
    if (static_cast<int>(d.levels[a].size()) != T - a)
      throw ValidationError("groupoid Sigma-diagram: row " + std::to_string(a) + " has wrong length");
  auto at = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  validate_groupoid(d.augmentation, "level -1");
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) validate_groupoid(d.levels[a][b], "level " + at(a, b));
  check_structure(object_part(d));
  check_structure(morphism_part(d));
  validate_functor(d.eps, d.augmentation, d.level(0, 0), "eps");
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      const auto& src = d.levels[a][b];
      for (int i = 0; a >= 1 && i <= a; ++i)
        validate_functor(d.vface[a][b][i], src, d.level(a - 1, b),
                         "dv_" + std::to_string(i) + " at " + at(a, b));
      for (int j = 0; b >= 1 && j <= b; ++j)
        validate_functor(d.hface[a][b][j], src, d.level(a, b - 1),
                         "dh_" + std::to_string(j) + " at " + at(a, b));
      if (a + 2 + b <= T) {
        for (int i = 0; i <= a; ++i)
          validate_functor(d.vdegen[a][b][i], src, d.level(a + 1, b),
                           "sv_" + std::to_string(i) + " at " + at(a, b));
        for (int j = 0; j <= b; ++j)
          validate_functor(d.hdegen[a][b][j], src, d.level(a, b + 1),
                           "sh_" + std::to_string(j) + " at " + at(a, b));
      }
    }
  CheckReport rep;
  rep.scope = "verified up to total degree " + std::to_string(T);
  rep.add_subreport("objects", validate_sigma(object_part(d)));
  rep.add_subreport("morphisms", validate_sigma(morphism_part(d)));
  return rep;
}

/// A Sigma-set viewed as a diagram of discrete groupoids.
inline GroupoidSigmaDiagram discrete_groupoid_diagram(const PreaugBisimplicialSet& s) {
  auto discrete = [](const std::vector<std::string>& names) {
    FiniteGroupoid g;
    for (const auto& n : names) {
      int o = g.add_object(n);
      int m = g.add_morphism("id(" + n + ")", o, o);
      g.identity[o] = m;
      g.inverse[m] = m;
      g.composition[FiniteGroupoid::key(m, m)] = m;
    }
    return g;
  };
  auto functor = [](const std::vector<int>& table) { return GroupoidFunctor{table, table}; };
  GroupoidSigmaDiagram d;
  const int T = s.total_truncation;
  d.resize(T);
  d.augmentation = discrete(s.augmentation);
  d.eps = functor(s.eps);
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      d.levels[a][b] = discrete(s.levels[a][b]);
      for (std::size_t i = 0; i < s.vface[a][b].size(); ++i) d.vface[a][b][i] = functor(s.vface[a][b][i]);
      for (std::size_t i = 0; i < s.vdegen[a][b].size(); ++i) d.vdegen[a][b][i] = functor(s.vdegen[a][b][i]);
      for (std::size_t j = 0; j < s.hface[a][b].size(); ++j) d.hface[a][b][j] = functor(s.hface[a][b][j]);
      for (std::size_t j = 0; j < s.hdegen[a][b].size(); ++j) d.hdegen[a][b][j] = functor(s.hdegen[a][b][j]);
    }
  return d;
}

// ---------------------------------------------------------------------------
// Homotopy pullback comparisons

/// Checks that S -> A x^h_C B, s -> (p s, q s, id), is an equivalence of
/// groupoids; the square f p = g q must commute strictly.
inline bool check_groupoid_pullback_comparison(
    CheckReport& rep, const std::string& condition, const std::vector<int>& index,
    const std::string& role, const FiniteGroupoid& s, const FiniteGroupoid& a,
    const FiniteGroupoid& b, const FiniteGroupoid& c, const GroupoidFunctor& p,
    const GroupoidFunctor& q, const GroupoidFunctor& f, const GroupoidFunctor& g) {
  for (int x = 0; x < s.object_count(); ++x)
    if (f.objects[p.objects[x]] != g.objects[q.objects[x]]) {
      ++rep.checked;
      rep.fail({condition, index, role + " (square does not commute)", FailureKind::structural,
                {s.objects[x]}});
      return false;
    }
  for (int m = 0; m < s.morphism_count(); ++m)
    if (f.morphisms[p.morphisms[m]] != g.morphisms[q.morphisms[m]]) {
      ++rep.checked;
      rep.fail({condition, index, role + " (square does not commute)", FailureKind::structural,
                {s.morphisms[m]}});
      return false;
    }
  IsoComma ic(a, b, c, f, g);
  return check_equivalence(
      rep, condition, index, role, shape_of(s), ic.shape(),
      [&](int x) {
        int px = p.objects[x];
        return ic.find(px, q.objects[x], c.identity[f.objects[px]]);
      },
      [&](int, std::int64_t m) {
        int mm = static_cast<int>(m);
        return IsoComma::pack(p.morphisms[mm], q.morphisms[mm]);
      });
}

/// Checks that A x^h_C B -> E, induced by h on the chosen factor, is an equivalence.
inline bool check_groupoid_map_from_pullback(
    CheckReport& rep, const std::string& condition, const std::vector<int>& index,
    const std::string& role, const FiniteGroupoid& a, const FiniteGroupoid& b,
    const FiniteGroupoid& c, const FiniteGroupoid& e, const GroupoidFunctor& f,
    const GroupoidFunctor& g, const GroupoidFunctor& h, bool from_first) {
  IsoComma ic(a, b, c, f, g);
  return check_equivalence(
      rep, condition, index, role, ic.shape(), shape_of(e),
      [&](int k) {
        const auto& [x, y, phi] = ic.objects()[k];
        return h.objects[from_first ? x : y];
      },
      [&](int, std::int64_t key) {
        auto [alpha, beta] = IsoComma::unpack(key);
        return static_cast<std::int64_t>(h.morphisms[from_first ? alpha : beta]);
      });
}

namespace detail {

inline GroupoidFunctor iterate_groupoid_faces(const GroupoidSigmaDiagram& d, char dir, int a, int b,
                                              bool last, int times) {
  GroupoidFunctor cur = identity_functor(d.level(a, b));
  int ca = a, cb = b;
  for (int k = 0; k < times; ++k) {
    if (dir == 'v') {
      cur = compose_functors(cur, d.vface[ca][cb][last ? ca : 0]);
      --ca;
    } else {
      cur = compose_functors(cur, d.hface[ca][cb][last ? cb : 0]);
      --cb;
    }
  }
  return cur;
}

} // namespace detail

inline CheckReport check_double_segal_groupoid(const GroupoidSigmaDiagram& d) {
  CheckReport rep;
  const int T = d.total_truncation;
  rep.scope = "verified up to total degree " + std::to_string(T);
  using detail::iterate_groupoid_faces;
  auto lvl = [](int a, int b) { return "D_{" + std::to_string(a) + "," + std::to_string(b) + "}"; };
  for (int m = 0; m + 1 <= T; ++m)
    for (int k = 0; k + 1 + m <= T; ++k)
      for (int l = 0; k + l + 1 + m <= T; ++l) {
        check_groupoid_pullback_comparison(
            rep, "double-segal-vertical", {k, l, m},
            lvl(k + l, m) + " -> " + lvl(k, m) + " x^h_{" + lvl(0, m) + "} " + lvl(l, m),
            d.level(k + l, m), d.level(k, m), d.level(l, m), d.level(0, m),
            iterate_groupoid_faces(d, 'v', k + l, m, true, l),
            iterate_groupoid_faces(d, 'v', k + l, m, false, k),
            iterate_groupoid_faces(d, 'v', k, m, false, k),
            iterate_groupoid_faces(d, 'v', l, m, true, l));
        check_groupoid_pullback_comparison(
            rep, "double-segal-horizontal", {k, l, m},
            lvl(m, k + l) + " -> " + lvl(m, k) + " x^h_{" + lvl(m, 0) + "} " + lvl(m, l),
            d.level(m, k + l), d.level(m, k), d.level(m, l), d.level(m, 0),
            iterate_groupoid_faces(d, 'h', m, k + l, true, l),
            iterate_groupoid_faces(d, 'h', m, k + l, false, k),
            iterate_groupoid_faces(d, 'h', m, k, false, k),
            iterate_groupoid_faces(d, 'h', m, l, true, l));
      }
  return rep;
}

inline CheckReport check_stability_groupoid(const GroupoidSigmaDiagram& d) {
  CheckReport rep;
  const int T = d.total_truncation;
  rep.scope = "verified up to total degree " + std::to_string(T);
  if (T < 3) {
    rep.mark_partial("total truncation " + std::to_string(T) + " < 3: D(1,1) not present");
    return rep;
  }
  check_groupoid_pullback_comparison(
      rep, "stability-span", {1, 1}, "(d^h_1, d^v_1): D_{1,1} -> D_{1,0} x^h_{D_{0,0}} D_{0,1}",
      d.level(1, 1), d.level(1, 0), d.level(0, 1), d.level(0, 0), d.hface[1][1][1],
      d.vface[1][1][1], d.vface[1][0][1], d.hface[0][1][1]);
  check_groupoid_pullback_comparison(
      rep, "stability-cospan", {1, 1}, "(d^v_0, d^h_0): D_{1,1} -> D_{0,1} x^h_{D_{0,0}} D_{1,0}",
      d.level(1, 1), d.level(0, 1), d.level(1, 0), d.level(0, 0), d.vface[1][1][0],
      d.hface[1][1][0], d.hface[0][1][0], d.vface[1][0][0]);
  return rep;
}

inline CheckReport check_augmentation_groupoid(const GroupoidSigmaDiagram& d) {
  CheckReport rep;
  const int T = d.total_truncation;
  rep.scope = "verified up to total degree " + std::to_string(T);
  if (T < 2) {
    rep.mark_partial("total truncation 1: D(1,0) and D(0,1) not present");
    return rep;
  }
  check_groupoid_map_from_pullback(
      rep, "augmentation-vertical", {1, 0},
      "d^v_1: D_{1,0} x^h_{D_{0,0}} D_{-1} -> D_{0,0} over (d^v_0, eps)", d.level(1, 0),
      d.augmentation, d.level(0, 0), d.level(0, 0), d.vface[1][0][0], d.eps, d.vface[1][0][1],
      true);
  check_groupoid_map_from_pullback(
      rep, "augmentation-horizontal", {0, 1},
      "d^h_0: D_{-1} x^h_{D_{0,0}} D_{0,1} -> D_{0,0} over (eps, d^h_1)", d.augmentation,
      d.level(0, 1), d.level(0, 0), d.level(0, 0), d.eps, d.hface[0][1][1], d.hface[0][1][0],
      false);
  return rep;
}

inline CheckReport check_sadss_groupoid(const GroupoidSigmaDiagram& d) {
  CheckReport rep;
  rep.scope = "verified up to total degree " + std::to_string(d.total_truncation);
  rep.add_subreport("double-segal", check_double_segal_groupoid(d));
  rep.add_subreport("stability", check_stability_groupoid(d));
  rep.add_subreport("augmentation", check_augmentation_groupoid(d));
  return rep;
}

} // namespace twoseg
