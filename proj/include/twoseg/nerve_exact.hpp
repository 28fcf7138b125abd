#pragma once

// Proto-exact categories given by finite tables, and the Sigma-diagram of
// groupoids of mono/epi grids with bicartesian unit squares.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/groupoid_sigma.hpp"
#include "twoseg/sset.hpp"

namespace twoseg {

/// A commutative square
///     A --top--> B
///     |          |
///   left       right
///     v          v
///     C -bottom-> D
/// with top, bottom admissible monos and left, right admissible epis.
struct ExactSquare {
  int top = -1;
  int left = -1;
  int right = -1;
  int bottom = -1;
  friend bool operator==(const ExactSquare&, const ExactSquare&) = default;
};

struct ProtoExactData {
  FiniteCategoryData category;
  std::vector<bool> mono;  // per morphism
  std::vector<bool> epi;   // per morphism
  std::vector<bool> zero;  // per object
  std::map<std::pair<int, int>, ExactSquare> pullbacks;  // (bottom, right) -> square
  std::map<std::pair<int, int>, ExactSquare> pushouts;   // (top, left) -> square

  const Morphism& morphism(int m) const { return category.morphisms[m]; }
  int compose(int g, int f) const { return category.compose[g][f]; }
};

inline bool commutes(const ProtoExactData& e, const ExactSquare& s) {
  return e.compose(s.right, s.top) == e.compose(s.bottom, s.left);
}

inline bool is_pullback(const ProtoExactData& e, const ExactSquare& s) {
  const auto& c = e.category;
  const int b = e.morphism(s.right).source, cc = e.morphism(s.bottom).source;
  for (int u = 0; u < c.morphism_count(); ++u) {
    if (c.morphisms[u].target != b) continue;
    const int x = c.morphisms[u].source;
    for (int v = 0; v < c.morphism_count(); ++v) {
      if (c.morphisms[v].target != cc || c.morphisms[v].source != x) continue;
      if (e.compose(s.right, u) != e.compose(s.bottom, v)) continue;
      int count = 0;
      for (int w = 0; w < c.morphism_count(); ++w)
        if (c.morphisms[w].source == x && c.morphisms[w].target == e.morphism(s.top).source &&
            e.compose(s.top, w) == u && e.compose(s.left, w) == v)
          ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

inline bool is_pushout(const ProtoExactData& e, const ExactSquare& s) {
  const auto& c = e.category;
  const int b = e.morphism(s.top).target, cc = e.morphism(s.left).target;
  const int d = e.morphism(s.right).target;
  for (int u = 0; u < c.morphism_count(); ++u) {
    if (c.morphisms[u].source != b) continue;
    const int y = c.morphisms[u].target;
    for (int v = 0; v < c.morphism_count(); ++v) {
      if (c.morphisms[v].source != cc || c.morphisms[v].target != y) continue;
      if (e.compose(u, s.top) != e.compose(v, s.left)) continue;
      int count = 0;
      for (int w = 0; w < c.morphism_count(); ++w)
        if (c.morphisms[w].source == d && c.morphisms[w].target == y &&
            e.compose(w, s.right) == u && e.compose(w, s.bottom) == v)
          ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

inline bool is_exact_square(const ProtoExactData& e, const ExactSquare& s) {
  const auto& m = e.category.morphisms;
  auto in = [&](int x) { return x >= 0 && x < e.category.morphism_count(); };
  if (!in(s.top) || !in(s.left) || !in(s.right) || !in(s.bottom)) return false;
  if (m[s.top].source != m[s.left].source || m[s.top].target != m[s.right].source ||
      m[s.left].target != m[s.bottom].source || m[s.right].target != m[s.bottom].target)
    return false;
  return e.mono[s.top] && e.mono[s.bottom] && e.epi[s.left] && e.epi[s.right] && commutes(e, s) &&
         is_pullback(e, s) && is_pushout(e, s);
}

inline std::vector<int> isomorphisms(const FiniteCategoryData& c) {
  std::vector<int> inverse(c.morphism_count(), -1);
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g)
      if (c.morphisms[g].source == c.morphisms[f].target &&
          c.morphisms[g].target == c.morphisms[f].source &&
          c.compose[g][f] == c.identities[c.morphisms[f].source] &&
          c.compose[f][g] == c.identities[c.morphisms[f].target]) {
        inverse[f] = g;
        break;
      }
  return inverse;
}

/// Throws ValidationError naming the first violated axiom.
inline void validate_proto_exact(const ProtoExactData& e) {
  validate_category(e.category);
  const auto& c = e.category;
  const int nm = c.morphism_count();
  const int no = c.object_count();
  if (static_cast<int>(e.mono.size()) != nm || static_cast<int>(e.epi.size()) != nm)
    throw ValidationError("proto-exact: mono/epi flags must list every morphism");
  if (static_cast<int>(e.zero.size()) != no)
    throw ValidationError("proto-exact: zero flags must list every object");
  auto name = [&](int m) { return "'" + c.morphisms[m].name + "'"; };
  auto inv = isomorphisms(c);
  for (int f = 0; f < nm; ++f)
    if (inv[f] >= 0 && (!e.mono[f] || !e.epi[f]))
      throw ValidationError("proto-exact: isomorphism " + name(f) + " must be both mono and epi");
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int gf = c.compose[g][f];
      if (gf < 0) continue;
      if (e.mono[g] && e.mono[f] && !e.mono[gf])
        throw ValidationError("proto-exact: monos not closed under composition at " + name(g) +
                              " o " + name(f));
      if (e.epi[g] && e.epi[f] && !e.epi[gf])
        throw ValidationError("proto-exact: epis not closed under composition at " + name(g) +
                              " o " + name(f));
    }
  bool any_zero = false;
  for (int z = 0; z < no; ++z) {
    if (!e.zero[z]) continue;
    any_zero = true;
    for (int x = 0; x < no; ++x) {
      int monos_out = 0, epis_in = 0;
      for (int m = 0; m < nm; ++m) {
        if (c.morphisms[m].source == z && c.morphisms[m].target == x && e.mono[m]) ++monos_out;
        if (c.morphisms[m].source == x && c.morphisms[m].target == z && e.epi[m]) ++epis_in;
      }
      if (monos_out != 1)
        throw ValidationError("proto-exact: zero object '" + c.objects[z] +
                              "' is not initial among admissible monos (target '" + c.objects[x] + "')");
      if (epis_in != 1)
        throw ValidationError("proto-exact: zero object '" + c.objects[z] +
                              "' is not terminal among admissible epis (source '" + c.objects[x] + "')");
    }
  }
  if (!any_zero) throw ValidationError("proto-exact: no zero object");
  for (int bottom = 0; bottom < nm; ++bottom)
    for (int right = 0; right < nm; ++right) {
      if (!e.mono[bottom] || !e.epi[right] ||
          c.morphisms[bottom].target != c.morphisms[right].target)
        continue;
      auto it = e.pullbacks.find({bottom, right});
      if (it == e.pullbacks.end())
        throw ValidationError("proto-exact: no pullback listed for cospan (" + name(bottom) + ", " +
                              name(right) + ")");
      if (it->second.bottom != bottom || it->second.right != right || !is_exact_square(e, it->second))
        throw ValidationError("proto-exact: listed pullback of (" + name(bottom) + ", " +
                              name(right) + ") is not a bicartesian mono/epi square");
    }
  for (int top = 0; top < nm; ++top)
    for (int left = 0; left < nm; ++left) {
      if (!e.mono[top] || !e.epi[left] || c.morphisms[top].source != c.morphisms[left].source)
        continue;
      auto it = e.pushouts.find({top, left});
      if (it == e.pushouts.end())
        throw ValidationError("proto-exact: no pushout listed for span (" + name(top) + ", " +
                              name(left) + ")");
      if (it->second.top != top || it->second.left != left || !is_exact_square(e, it->second))
        throw ValidationError("proto-exact: listed pushout of (" + name(top) + ", " + name(left) +
                              ") is not a bicartesian mono/epi square");
    }
  for (const auto& [key, sq] : e.pullbacks)
    if (key != std::make_pair(sq.bottom, sq.right))
      throw ValidationError("proto-exact: pullback entry keyed by the wrong cospan");
  for (const auto& [key, sq] : e.pushouts)
    if (key != std::make_pair(sq.top, sq.left))
      throw ValidationError("proto-exact: pushout entry keyed by the wrong span");
}

// ---------------------------------------------------------------------------
// Finite pointed sets

/// Pointed sets P_0, ..., P_{max_size-1} with P_k = {*, 1, ..., k}; all pointed
/// maps; monos are injections, epis are surjections that are injective away
/// from the fibre over the basepoint.
inline ProtoExactData builtin_pointed_sets(int max_size) {
  if (max_size < 1 || max_size > 9)
    throw PreconditionError("pointed sets: max size must lie in 1..9");
  ProtoExactData e;
  auto& c = e.category;
  for (int k = 0; k < max_size; ++k) c.objects.push_back("P" + std::to_string(k));
  std::vector<std::vector<int>> values;
  std::map<std::vector<int>, int> by_values;  // (source, target, images...) -> morphism
  for (int i = 0; i < max_size; ++i)
    for (int j = 0; j < max_size; ++j) {
      std::vector<int> img(i + 1, 0);
      while (true) {
        std::string label = "f" + std::to_string(i) + std::to_string(j) + ":";
        for (int v : img) label += std::to_string(v);
        int id = c.morphism_count();
        c.morphisms.push_back({label, i, j});
        values.push_back(img);
        std::vector<int> key{i, j};
        key.insert(key.end(), img.begin(), img.end());
        by_values[key] = id;
        int pos = i;
        while (pos >= 1 && img[pos] == j) img[pos--] = 0;
        if (pos < 1) break;
        ++img[pos];
      }
    }
  const int nm = c.morphism_count();
  c.identities.resize(max_size);
  for (int m = 0; m < nm; ++m) {
    const auto& v = values[m];
    bool identity = c.morphisms[m].source == c.morphisms[m].target;
    for (std::size_t x = 0; x < v.size() && identity; ++x) identity = v[x] == static_cast<int>(x);
    if (identity) c.identities[c.morphisms[m].source] = m;
    std::vector<int> hits(c.morphisms[m].target + 1, 0);
    for (int x : v) ++hits[x];
    bool injective = true, epi = true;
    for (std::size_t y = 0; y < hits.size(); ++y) {
      if (hits[y] > 1) injective = false;
      if (y >= 1 && hits[y] != 1) epi = false;
    }
    e.mono.push_back(injective);
    e.epi.push_back(epi);
  }
  c.compose.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (c.morphisms[f].target != c.morphisms[g].source) continue;
      std::vector<int> key{c.morphisms[f].source, c.morphisms[g].target};
      for (int x : values[f]) key.push_back(values[g][x]);
      c.compose[g][f] = by_values.at(key);
    }
  e.zero.assign(max_size, false);
  e.zero[0] = true;
  auto lookup = [&](int s, int t, const std::vector<int>& img) {
    std::vector<int> key{s, t};
    key.insert(key.end(), img.begin(), img.end());
    return by_values.at(key);
  };
  // Pullback of a mono C -> D along an epi B -> D: the part of B over the image.
  for (int bottom = 0; bottom < nm; ++bottom)
    for (int right = 0; right < nm; ++right) {
      if (!e.mono[bottom] || !e.epi[right] ||
          c.morphisms[bottom].target != c.morphisms[right].target)
        continue;
      const auto& m = values[bottom];
      const auto& ep = values[right];
      std::vector<int> preimage(c.morphisms[right].target + 1, -1);
      for (std::size_t x = 0; x < m.size(); ++x) preimage[m[x]] = static_cast<int>(x);
      std::vector<int> keep;
      for (std::size_t b = 0; b < ep.size(); ++b)
        if (preimage[ep[b]] >= 0) keep.push_back(static_cast<int>(b));
      int a = static_cast<int>(keep.size()) - 1;
      std::vector<int> left_img;
      for (int b : keep) left_img.push_back(preimage[ep[b]]);
      ExactSquare sq{lookup(a, c.morphisms[right].source, keep),
                     lookup(a, c.morphisms[bottom].source, left_img), right, bottom};
      e.pullbacks[{bottom, right}] = sq;
    }
  // Pushout of a mono A -> B along an epi A -> C: C followed by the part of B
  // outside the image.
  for (int top = 0; top < nm; ++top)
    for (int left = 0; left < nm; ++left) {
      if (!e.mono[top] || !e.epi[left] || c.morphisms[top].source != c.morphisms[left].source)
        continue;
      const auto& m = values[top];
      const auto& ep = values[left];
      int bsize = c.morphisms[top].target + 1;
      int csize = c.morphisms[left].target + 1;
      std::vector<int> from(bsize, -1);
      for (std::size_t x = 0; x < m.size(); ++x) from[m[x]] = static_cast<int>(x);
      std::vector<int> right_img(bsize);
      int next = csize;
      for (int b = 0; b < bsize; ++b) right_img[b] = from[b] >= 0 ? ep[from[b]] : next++;
      int d = next - 1;
      std::vector<int> bottom_img(csize);
      for (int x = 0; x < csize; ++x) bottom_img[x] = x;
      ExactSquare sq{top, left, lookup(c.morphisms[top].target, d, right_img),
                     lookup(c.morphisms[left].target, d, bottom_img)};
      e.pushouts[{top, left}] = sq;
    }
  return e;
}

/// Exchanges the roles of admissible monos and epis, without validating.
inline ProtoExactData swap_mono_epi(ProtoExactData e) {
  std::swap(e.mono, e.epi);
  e.pullbacks.clear();
  e.pushouts.clear();
  return e;
}

// ---------------------------------------------------------------------------
// Grids

/// A functor [a] x [b] -> E: cell objects, horizontal arrows (i,j)->(i,j+1)
/// and vertical arrows (i,j)->(i+1,j), row-major.
struct Grid {
  int a = 0;
  int b = 0;
  std::vector<int> cells;
  std::vector<int> horizontal;
  std::vector<int> vertical;

  int cell(int i, int j) const { return cells[i * (b + 1) + j]; }
  int h(int i, int j) const { return horizontal[i * b + j]; }
  int v(int i, int j) const { return vertical[i * (b + 1) + j]; }

  std::vector<int> key() const {
    std::vector<int> k = cells;
    k.insert(k.end(), horizontal.begin(), horizontal.end());
    k.insert(k.end(), vertical.begin(), vertical.end());
    return k;
  }
  friend bool operator==(const Grid&, const Grid&) = default;
};

struct GridLevel {
  std::vector<Grid> grids;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> morphism_cells;  // cell isos per groupoid morphism
  std::map<std::pair<int, std::vector<int>>, int> morphism_index;
  FiniteGroupoid groupoid;
};

struct NerveExactOptions {
  bool validate_input = true;
};

namespace detail {

class NerveExactBuilder {
public:
  NerveExactBuilder(const ProtoExactData& e, int T) : e_(e), T_(T), c_(e.category) {
    inverse_ = isomorphisms(c_);
    isos_out_.resize(c_.object_count());
    for (int m = 0; m < c_.morphism_count(); ++m)
      if (inverse_[m] >= 0) isos_out_[c_.morphisms[m].source].push_back(m);
    monos_out_.resize(c_.object_count());
    epis_out_.resize(c_.object_count());
    for (int m = 0; m < c_.morphism_count(); ++m) {
      if (e.mono[m]) monos_out_[c_.morphisms[m].source].push_back(m);
      if (e.epi[m]) epis_out_[c_.morphisms[m].source].push_back(m);
    }
    for (int top = 0; top < c_.morphism_count(); ++top) {
      if (!e.mono[top]) continue;
      for (int left : epis_out_[c_.morphisms[top].source])
        for (int right : epis_out_[c_.morphisms[top].target])
          for (int bottom : monos_out_[c_.morphisms[left].target]) {
            ExactSquare sq{top, left, right, bottom};
            if (c_.morphisms[bottom].target == c_.morphisms[right].target && commutes(e, sq) &&
                is_pullback(e, sq) && is_pushout(e, sq))
              completions_[{top, left}].push_back({right, bottom});
          }
    }
  }

  GroupoidSigmaDiagram build() {
    GroupoidSigmaDiagram d;
    d.resize(T_);
    levels_.assign(T_, {});
    for (int a = 0; a < T_; ++a) {
      levels_[a].resize(T_ - a);
      for (int b = 0; a + 1 + b <= T_; ++b) {
        enumerate(a, b);
        build_groupoid(a, b);
      }
    }
    build_augmentation(d);
    for (int a = 0; a < T_; ++a)
      for (int b = 0; a + 1 + b <= T_; ++b) {
        for (int i = 0; a >= 1 && i <= a; ++i)
          d.vface[a][b][i] = structure(a, b, a - 1, b, [&](const Grid& g) { return vface(g, i); },
                                       [&](const Grid& g, const std::vector<int>& p) {
                                         return drop_row(g, p, i);
                                       });
        for (int j = 0; b >= 1 && j <= b; ++j)
          d.hface[a][b][j] = structure(a, b, a, b - 1, [&](const Grid& g) { return hface(g, j); },
                                       [&](const Grid& g, const std::vector<int>& p) {
                                         return drop_column(g, p, j);
                                       });
        if (a + 2 + b <= T_) {
          for (int i = 0; i <= a; ++i)
            d.vdegen[a][b][i] = structure(a, b, a + 1, b, [&](const Grid& g) { return vdegen(g, i); },
                                          [&](const Grid& g, const std::vector<int>& p) {
                                            return repeat_row(g, p, i);
                                          });
          for (int j = 0; j <= b; ++j)
            d.hdegen[a][b][j] = structure(a, b, a, b + 1, [&](const Grid& g) { return hdegen(g, j); },
                                          [&](const Grid& g, const std::vector<int>& p) {
                                            return repeat_column(g, p, j);
                                          });
        }
        d.levels[a][b] = std::move(levels_[a][b].groupoid);
      }
    return d;
  }

private:
  const ProtoExactData& e_;
  int T_;
  const FiniteCategoryData& c_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> isos_out_, monos_out_, epis_out_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> completions_;
  std::vector<std::vector<GridLevel>> levels_;

  int src(int m) const { return c_.morphisms[m].source; }
  int tgt(int m) const { return c_.morphisms[m].target; }
  int comp(int g, int f) const { return c_.compose[g][f]; }

  void add_grid(GridLevel& level, const Grid& g) {
    level.index[g.key()] = static_cast<int>(level.grids.size());
    level.grids.push_back(g);
  }

  void enumerate(int a, int b) {
    GridLevel& level = levels_[a][b];
    Grid g;
    g.a = a;
    g.b = b;
    g.cells.assign((a + 1) * (b + 1), -1);
    g.horizontal.assign((a + 1) * b, -1);
    g.vertical.assign(a * (b + 1), -1);
    for (int x = 0; x < c_.object_count(); ++x) {
      g.cells[0] = x;
      first_row(level, g, 1);
    }
  }

  void first_row(GridLevel& level, Grid& g, int j) {
    if (j > g.b) {
      next_row(level, g, 1, 0);
      return;
    }
    for (int m : monos_out_[g.cells[j - 1]]) {
      g.horizontal[j - 1] = m;
      g.cells[j] = tgt(m);
      first_row(level, g, j + 1);
    }
  }

  // Fills row i cell by cell; j is the next column.
  void next_row(GridLevel& level, Grid& g, int i, int j) {
    if (i > g.a) {
      add_grid(level, g);
      return;
    }
    const int w = g.b + 1;
    if (j == 0) {
      for (int v : epis_out_[g.cells[(i - 1) * w]]) {
        g.vertical[(i - 1) * w] = v;
        g.cells[i * w] = tgt(v);
        next_row(level, g, i, 1);
      }
      return;
    }
    if (j > g.b) {
      next_row(level, g, i + 1, 0);
      return;
    }
    auto it = completions_.find({g.horizontal[(i - 1) * g.b + j - 1], g.vertical[(i - 1) * w + j - 1]});
    if (it == completions_.end()) return;
    for (auto [right, bottom] : it->second) {
      g.vertical[(i - 1) * w + j] = right;
      g.horizontal[i * g.b + j - 1] = bottom;
      g.cells[i * w + j] = tgt(right);
      next_row(level, g, i, j + 1);
    }
  }

  std::string grid_name(const Grid& g) const {
    if (g.horizontal.empty() && g.vertical.empty()) return c_.objects[g.cells[0]];
    std::string s;
    auto list = [&](const std::vector<int>& ms) {
      std::string out;
      for (std::size_t k = 0; k < ms.size(); ++k) out += (k ? "," : "") + c_.morphisms[ms[k]].name;
      return out;
    };
    if (!g.horizontal.empty()) s += "h[" + list(g.horizontal) + "]";
    if (!g.vertical.empty()) s += std::string(s.empty() ? "" : " ") + "v[" + list(g.vertical) + "]";
    return s;
  }

  /// The grid phi . g . phi^{-1} for cellwise isos phi out of g.
  Grid conjugate(const Grid& g, const std::vector<int>& phi) const {
    Grid out = g;
    const int w = g.b + 1;
    for (std::size_t k = 0; k < phi.size(); ++k) out.cells[k] = tgt(phi[k]);
    for (int i = 0; i <= g.a; ++i)
      for (int j = 0; j < g.b; ++j)
        out.horizontal[i * g.b + j] =
            comp(comp(phi[i * w + j + 1], g.h(i, j)), inverse_[phi[i * w + j]]);
    for (int i = 0; i < g.a; ++i)
      for (int j = 0; j <= g.b; ++j)
        out.vertical[i * w + j] = comp(comp(phi[(i + 1) * w + j], g.v(i, j)), inverse_[phi[i * w + j]]);
    return out;
  }

  void build_groupoid(int a, int b) {
    GridLevel& level = levels_[a][b];
    auto& gr = level.groupoid;
    for (const auto& g : level.grids) gr.add_object(grid_name(g));
    const int ncells = (a + 1) * (b + 1);
    for (int s = 0; s < static_cast<int>(level.grids.size()); ++s) {
      const Grid& g = level.grids[s];
      std::vector<int> phi(ncells), pos(ncells, 0);
      while (true) {
        for (int k = 0; k < ncells; ++k) phi[k] = isos_out_[g.cells[k]][pos[k]];
        Grid moved = conjugate(g, phi);
        auto it = level.index.find(moved.key());
        if (it == level.index.end())
          throw ValidationError("exact nerve: level " + std::to_string(a) + "," + std::to_string(b) +
                                " is not closed under isomorphism at '" + gr.objects[s] + "'");
        std::string name = gr.objects[s] + " ~";
        for (int k = 0; k < ncells; ++k) name += (k ? "," : " ") + c_.morphisms[phi[k]].name;
        int m = gr.add_morphism(name, s, it->second);
        level.morphism_cells.push_back(phi);
        level.morphism_index[{s, phi}] = m;
        bool identity = true;
        for (int k = 0; k < ncells; ++k) identity = identity && phi[k] == c_.identities[g.cells[k]];
        if (identity) gr.identity[s] = m;
        int k = ncells - 1;
        while (k >= 0 && pos[k] + 1 == static_cast<int>(isos_out_[g.cells[k]].size())) pos[k--] = 0;
        if (k < 0) break;
        ++pos[k];
      }
    }
    std::vector<std::vector<int>> out(gr.object_count());
    for (int m = 0; m < gr.morphism_count(); ++m) out[gr.source[m]].push_back(m);
    for (int f = 0; f < gr.morphism_count(); ++f) {
      const auto& pf = level.morphism_cells[f];
      std::vector<int> inv(ncells);
      for (int k = 0; k < ncells; ++k) inv[k] = inverse_[pf[k]];
      gr.inverse[f] = level.morphism_index.at({gr.target[f], inv});
      for (int g : out[gr.target[f]]) {
        const auto& pg = level.morphism_cells[g];
        std::vector<int> gf(ncells);
        for (int k = 0; k < ncells; ++k) gf[k] = comp(pg[k], pf[k]);
        gr.composition[FiniteGroupoid::key(g, f)] = level.morphism_index.at({gr.source[f], gf});
      }
    }
  }

  void build_augmentation(GroupoidSigmaDiagram& d) {
    auto& aug = d.augmentation;
    std::map<int, int> obj;
    for (int x = 0; x < c_.object_count(); ++x)
      if (e_.zero[x]) obj[x] = aug.add_object(c_.objects[x]);
    std::map<int, int> mor;
    for (auto [x, ox] : obj)
      for (int m : isos_out_[x])
        if (obj.count(tgt(m))) mor[m] = aug.add_morphism(c_.morphisms[m].name, ox, obj.at(tgt(m)));
    for (auto [x, ox] : obj) aug.identity[ox] = mor.at(c_.identities[x]);
    for (auto [m, am] : mor) {
      aug.inverse[am] = mor.at(inverse_[m]);
      for (auto [n, an] : mor)
        if (src(n) == tgt(m)) aug.composition[FiniteGroupoid::key(an, am)] = mor.at(comp(n, m));
    }
    const GridLevel& base = levels_[0][0];
    for (auto [x, ox] : obj) d.eps.objects.push_back(base.index.at({x}));
    d.eps.morphisms.assign(aug.morphism_count(), -1);
    for (auto [m, am] : mor) d.eps.morphisms[am] = base.morphism_index.at({base.index.at({src(m)}), {m}});
  }

  template <class OnGrid, class OnIsos>
  GroupoidFunctor structure(int a, int b, int ta, int tb, OnGrid on_grid, OnIsos on_isos) {
    const GridLevel& from = levels_[a][b];
    const GridLevel& to = levels_[ta][tb];
    GroupoidFunctor f;
    for (const auto& g : from.grids) {
      Grid image = on_grid(g);
      auto it = to.index.find(image.key());
      if (it == to.index.end())
        throw ValidationError("exact nerve: structure map from level " + std::to_string(a) + "," +
                              std::to_string(b) + " leaves the grids of level " + std::to_string(ta) +
                              "," + std::to_string(tb));
      f.objects.push_back(it->second);
    }
    for (int m = 0; m < from.groupoid.morphism_count(); ++m) {
      const Grid& g = from.grids[from.groupoid.source[m]];
      f.morphisms.push_back(
          to.morphism_index.at({f.objects[from.groupoid.source[m]], on_isos(g, from.morphism_cells[m])}));
    }
    return f;
  }

  // Structure maps on grids.
  Grid vface(const Grid& g, int i) const {
    Grid out;
    out.a = g.a - 1;
    out.b = g.b;
    for (int r = 0; r <= g.a; ++r) {
      if (r == i) continue;
      for (int j = 0; j <= g.b; ++j) out.cells.push_back(g.cell(r, j));
      for (int j = 0; j < g.b; ++j) out.horizontal.push_back(g.h(r, j));
    }
    for (int r = 0; r < g.a; ++r) {
      if (r == i - 1 && i < g.a) {
        for (int j = 0; j <= g.b; ++j) out.vertical.push_back(comp(g.v(r + 1, j), g.v(r, j)));
        continue;
      }
      if (r == i || (i == g.a && r == i - 1)) continue;
      for (int j = 0; j <= g.b; ++j) out.vertical.push_back(g.v(r, j));
    }
    return out;
  }

  Grid hface(const Grid& g, int j) const { return transpose(vface(transpose(g), j)); }

  Grid vdegen(const Grid& g, int i) const {
    Grid out;
    out.a = g.a + 1;
    out.b = g.b;
    for (int r = 0; r <= g.a; ++r)
      for (int rep = 0; rep < (r == i ? 2 : 1); ++rep) {
        for (int j = 0; j <= g.b; ++j) out.cells.push_back(g.cell(r, j));
        for (int j = 0; j < g.b; ++j) out.horizontal.push_back(g.h(r, j));
      }
    for (int r = 0; r <= g.a; ++r) {
      if (r == i)
        for (int j = 0; j <= g.b; ++j) out.vertical.push_back(c_.identities[g.cell(r, j)]);
      if (r < g.a)
        for (int j = 0; j <= g.b; ++j) out.vertical.push_back(g.v(r, j));
    }
    return out;
  }

  Grid hdegen(const Grid& g, int j) const { return transpose(vdegen(transpose(g), j)); }

  static Grid transpose(const Grid& g) {
    Grid t;
    t.a = g.b;
    t.b = g.a;
    for (int j = 0; j <= g.b; ++j)
      for (int i = 0; i <= g.a; ++i) t.cells.push_back(g.cell(i, j));
    for (int j = 0; j <= g.b; ++j)
      for (int i = 0; i < g.a; ++i) t.horizontal.push_back(g.v(i, j));
    for (int j = 0; j < g.b; ++j)
      for (int i = 0; i <= g.a; ++i) t.vertical.push_back(g.h(i, j));
    return t;
  }

  // Cellwise isos under the same structure maps.
  static std::vector<int> drop_row(const Grid& g, const std::vector<int>& p, int i) {
    std::vector<int> out;
    for (int r = 0; r <= g.a; ++r)
      for (int j = 0; j <= g.b && r != i; ++j) out.push_back(p[r * (g.b + 1) + j]);
    return out;
  }
  static std::vector<int> repeat_row(const Grid& g, const std::vector<int>& p, int i) {
    std::vector<int> out;
    for (int r = 0; r <= g.a; ++r)
      for (int rep = 0; rep < (r == i ? 2 : 1); ++rep)
        for (int j = 0; j <= g.b; ++j) out.push_back(p[r * (g.b + 1) + j]);
    return out;
  }
  static std::vector<int> transpose_cells(int a, int b, const std::vector<int>& p) {
    std::vector<int> out;
    for (int j = 0; j <= b; ++j)
      for (int i = 0; i <= a; ++i) out.push_back(p[i * (b + 1) + j]);
    return out;
  }
  static std::vector<int> drop_column(const Grid& g, const std::vector<int>& p, int j) {
    Grid t = transpose(g);
    return transpose_cells(t.a - 1, t.b, drop_row(t, transpose_cells(g.a, g.b, p), j));
  }
  static std::vector<int> repeat_column(const Grid& g, const std::vector<int>& p, int j) {
    Grid t = transpose(g);
    return transpose_cells(t.a + 1, t.b, repeat_row(t, transpose_cells(g.a, g.b, p), j));
  }
};

} // namespace detail

/// The exact nerve truncated at total degree T (levels a+1+b <= T).
inline GroupoidSigmaDiagram nerve_exact(const ProtoExactData& e, int T,
                                        const NerveExactOptions& opt = {}) {
  if (T < 1) throw PreconditionError("exact nerve needs total truncation >= 1");
  if (opt.validate_input) validate_proto_exact(e);
  return detail::NerveExactBuilder(e, T).build();
}

} // namespace twoseg
