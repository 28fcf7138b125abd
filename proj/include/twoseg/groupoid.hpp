#pragma once

// Finite groupoids as 1-truncated levels: functors, equivalence decision,
// iso-comma objects as homotopy pullbacks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/report.hpp"

namespace twoseg {

struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<int> identity;  // per object
  std::vector<int> inverse;
  std::unordered_map<std::uint64_t, int> composition;  // key(g, f) -> g o f

  static std::uint64_t key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
  }
  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int compose(int g, int f) const {
    auto it = composition.find(key(g, f));
    if (it == composition.end())
      throw ValidationError("groupoid: no composite for '" + morphisms.at(g) + "' o '" +
                            morphisms.at(f) + "'");
    return it->second;
  }
  int add_object(std::string name) {
    objects.push_back(std::move(name));
    identity.push_back(-1);
    return object_count() - 1;
  }
  int add_morphism(std::string name, int s, int t) {
    morphisms.push_back(std::move(name));
    source.push_back(s);
    target.push_back(t);
    inverse.push_back(-1);
    return morphism_count() - 1;
  }

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;
};

struct GroupoidFunctor {
  std::vector<int> objects;
  std::vector<int> morphisms;
  friend bool operator==(const GroupoidFunctor&, const GroupoidFunctor&) = default;
};

inline GroupoidFunctor identity_functor(const FiniteGroupoid& g) {
  GroupoidFunctor f;
  f.objects.resize(g.object_count());
  f.morphisms.resize(g.morphism_count());
  std::iota(f.objects.begin(), f.objects.end(), 0);
  std::iota(f.morphisms.begin(), f.morphisms.end(), 0);
  return f;
}

/// g after f.
inline GroupoidFunctor compose_functors(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  GroupoidFunctor out;
  for (int o : f.objects) out.objects.push_back(g.objects.at(o));
  for (int m : f.morphisms) out.morphisms.push_back(g.morphisms.at(m));
  return out;
}

/// Throws ValidationError unless the tables form a groupoid.
inline void validate_groupoid(const FiniteGroupoid& g, const std::string& where = "groupoid") {
  const int no = g.object_count();
  const int nm = g.morphism_count();
  if (static_cast<int>(g.source.size()) != nm || static_cast<int>(g.target.size()) != nm ||
      static_cast<int>(g.inverse.size()) != nm || static_cast<int>(g.identity.size()) != no)
    throw ValidationError(where + ": table sizes disagree");
  {
    std::set<std::string> seen;
    for (const auto& o : g.objects)
      if (!seen.insert(o).second) throw ValidationError(where + ": duplicate object '" + o + "'");
    seen.clear();
    for (const auto& m : g.morphisms)
      if (!seen.insert(m).second) throw ValidationError(where + ": duplicate morphism '" + m + "'");
  }
  for (int m = 0; m < nm; ++m)
    if (g.source[m] < 0 || g.source[m] >= no || g.target[m] < 0 || g.target[m] >= no)
      throw ValidationError(where + ": morphism '" + g.morphisms[m] + "' has an unknown endpoint");
  for (int o = 0; o < no; ++o) {
    int id = g.identity[o];
    if (id < 0 || id >= nm || g.source[id] != o || g.target[id] != o)
      throw ValidationError(where + ": identity of '" + g.objects[o] + "' is not an endomorphism");
  }
  std::vector<std::vector<int>> out(no);
  for (int m = 0; m < nm; ++m) out[g.source[m]].push_back(m);
  std::size_t composable = 0;
  for (int f = 0; f < nm; ++f)
    for (int h : out[g.target[f]]) {
      ++composable;
      auto it = g.composition.find(FiniteGroupoid::key(h, f));
      if (it == g.composition.end())
        throw ValidationError(where + ": missing composite '" + g.morphisms[h] + "' o '" +
                              g.morphisms[f] + "'");
      int hf = it->second;
      if (hf < 0 || hf >= nm || g.source[hf] != g.source[f] || g.target[hf] != g.target[h])
        throw ValidationError(where + ": composite '" + g.morphisms[h] + "' o '" + g.morphisms[f] +
                              "' has wrong endpoints");
    }
  if (composable != g.composition.size())
    throw ValidationError(where + ": composition table lists non-composable pairs");
  for (int f = 0; f < nm; ++f) {
    if (g.compose(g.identity[g.target[f]], f) != f || g.compose(f, g.identity[g.source[f]]) != f)
      throw ValidationError(where + ": unit law fails for '" + g.morphisms[f] + "'");
    int inv = g.inverse[f];
    if (inv < 0 || inv >= nm || g.source[inv] != g.target[f] || g.target[inv] != g.source[f] ||
        g.compose(inv, f) != g.identity[g.source[f]] || g.compose(f, inv) != g.identity[g.target[f]])
      throw ValidationError(where + ": '" + g.morphisms[f] + "' has no two-sided inverse");
  }
  for (int f = 0; f < nm; ++f)
    for (int h : out[g.target[f]]) {
      int hf = g.compose(h, f);
      for (int k : out[g.target[h]])
        if (g.compose(k, hf) != g.compose(g.compose(k, h), f))
          throw ValidationError(where + ": associativity fails at ('" + g.morphisms[k] + "', '" +
                                g.morphisms[h] + "', '" + g.morphisms[f] + "')");
    }
}

inline void validate_functor(const GroupoidFunctor& f, const FiniteGroupoid& a,
                             const FiniteGroupoid& b, const std::string& where = "functor") {
  if (static_cast<int>(f.objects.size()) != a.object_count() ||
      static_cast<int>(f.morphisms.size()) != a.morphism_count())
    throw ValidationError(where + ": table sizes do not match the source groupoid");
  for (int o : f.objects)
    if (o < 0 || o >= b.object_count()) throw ValidationError(where + ": object image out of range");
  for (int m : f.morphisms)
    if (m < 0 || m >= b.morphism_count())
      throw ValidationError(where + ": morphism image out of range");
  for (int m = 0; m < a.morphism_count(); ++m) {
    int fm = f.morphisms[m];
    if (b.source[fm] != f.objects[a.source[m]] || b.target[fm] != f.objects[a.target[m]])
      throw ValidationError(where + ": image of '" + a.morphisms[m] + "' has wrong endpoints");
  }
  for (int o = 0; o < a.object_count(); ++o)
    if (f.morphisms[a.identity[o]] != b.identity[f.objects[o]])
      throw ValidationError(where + ": identity of '" + a.objects[o] + "' not preserved");
  for (const auto& [k, gf] : a.composition) {
    int g = static_cast<int>(k >> 32);
    int h = static_cast<int>(k & 0xffffffffU);
    if (f.morphisms[gf] != b.compose(f.morphisms[g], f.morphisms[h]))
      throw ValidationError(where + ": composite '" + a.morphisms[g] + "' o '" + a.morphisms[h] +
                            "' not preserved");
  }
}

// ---------------------------------------------------------------------------
// Connected components and automorphisms

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  /// Dense component ids in order of smallest member.
  std::vector<int> labels(int& count) {
    std::vector<int> lab(parent_.size(), -1), root_label(parent_.size(), -1);
    count = 0;
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) {
      int r = find(x);
      if (root_label[r] < 0) root_label[r] = count++;
      lab[x] = root_label[r];
    }
    return lab;
  }

private:
  std::vector<int> parent_;
};

/// pi_0 and automorphism data of a groupoid, as consumed by the equivalence test.
struct GroupoidShape {
  int objects = 0;
  int component_count = 0;
  std::vector<int> component;
  std::vector<int> representative;  // smallest object of each component
  std::function<std::vector<std::int64_t>(int)> automorphisms;
  std::function<std::string(int)> object_name;
  std::function<std::string(std::int64_t)> automorphism_name;
};

inline GroupoidShape shape_of(const FiniteGroupoid& g) {
  GroupoidShape s;
  s.objects = g.object_count();
  UnionFind uf(s.objects);
  for (int m = 0; m < g.morphism_count(); ++m) uf.unite(g.source[m], g.target[m]);
  s.component = uf.labels(s.component_count);
  s.representative.assign(s.component_count, -1);
  for (int o = 0; o < s.objects; ++o)
    if (s.representative[s.component[o]] < 0) s.representative[s.component[o]] = o;
  auto aut = std::make_shared<std::vector<std::vector<std::int64_t>>>(s.objects);
  for (int m = 0; m < g.morphism_count(); ++m)
    if (g.source[m] == g.target[m]) (*aut)[g.source[m]].push_back(m);
  s.automorphisms = [aut](int o) { return (*aut)[o]; };
  s.object_name = [&g](int o) { return g.objects[o]; };
  s.automorphism_name = [&g](std::int64_t m) { return g.morphisms[static_cast<int>(m)]; };
  return s;
}

/// Decides whether a functor is an equivalence: bijective on pi_0, and a
/// bijection Aut(x) -> Aut(F x) at one representative x per component.
inline bool check_equivalence(CheckReport& rep, const std::string& condition,
                              const std::vector<int>& index, const std::string& role,
                              const GroupoidShape& src, const GroupoidShape& tgt,
                              const std::function<int(int)>& on_objects,
                              const std::function<std::int64_t(int, std::int64_t)>& on_automorphisms) {
  ++rep.checked;
  std::vector<int> hit(tgt.component_count, -1);
  for (int c = 0; c < src.component_count; ++c) {
    int x = src.representative[c];
    int tc = tgt.component[on_objects(x)];
    if (hit[tc] >= 0) {
      rep.fail({condition, index, role + " (not full: non-isomorphic objects identified)",
                FailureKind::not_injective,
                {src.object_name(src.representative[hit[tc]]), src.object_name(x)}});
      return false;
    }
    hit[tc] = c;
  }
  for (int tc = 0; tc < tgt.component_count; ++tc)
    if (hit[tc] < 0) {
      rep.fail({condition, index, role + " (not essentially surjective)",
                FailureKind::not_surjective, {tgt.object_name(tgt.representative[tc])}});
      return false;
    }
  for (int c = 0; c < src.component_count; ++c) {
    int x = src.representative[c];
    int fx = on_objects(x);
    auto ax = src.automorphisms(x);
    auto afx = tgt.automorphisms(fx);
    std::map<std::int64_t, std::int64_t> image;
    for (auto a : ax) {
      auto fa = on_automorphisms(x, a);
      auto [it, fresh] = image.emplace(fa, a);
      if (!fresh) {
        rep.fail({condition, index, role + " (not faithful)", FailureKind::not_injective,
                  {src.object_name(x), src.automorphism_name(it->second), src.automorphism_name(a)}});
        return false;
      }
    }
    for (auto b : afx)
      if (!image.count(b)) {
        rep.fail({condition, index, role + " (not full on automorphisms)",
                  FailureKind::not_surjective, {tgt.object_name(fx), tgt.automorphism_name(b)}});
        return false;
      }
  }
  return true;
}

inline CheckReport is_equivalence(const GroupoidFunctor& f, const FiniteGroupoid& a,
                                  const FiniteGroupoid& b) {
  validate_functor(f, a, b);
  CheckReport rep;
  rep.scope = "functor of finite groupoids";
  check_equivalence(rep, "equivalence", {}, "F", shape_of(a), shape_of(b),
                    [&](int o) { return f.objects[o]; },
                    [&](int, std::int64_t m) { return f.morphisms[static_cast<int>(m)]; });
  return rep;
}

// ---------------------------------------------------------------------------
// Iso-comma objects

/// Hom-sets of a groupoid indexed by endpoints.
class HomIndex {
public:
  explicit HomIndex(const FiniteGroupoid& g) : out_(g.object_count()) {
    for (int m = 0; m < g.morphism_count(); ++m) {
      homs_[{g.source[m], g.target[m]}].push_back(m);
      out_[g.source[m]].push_back(m);
    }
  }
  const std::vector<int>& hom(int x, int y) const {
    static const std::vector<int> none;
    auto it = homs_.find({x, y});
    return it == homs_.end() ? none : it->second;
  }
  const std::vector<int>& out(int x) const { return out_[x]; }

private:
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  std::vector<std::vector<int>> out_;
};

/// Objects (a, b, phi : F a -> G b) of the iso-comma of F : A -> C and G : B -> C,
/// with components and automorphism groups computed without listing all morphisms.
class IsoComma {
public:
  using Object = std::tuple<int, int, int>;

  IsoComma(const FiniteGroupoid& a, const FiniteGroupoid& b, const FiniteGroupoid& c,
           const GroupoidFunctor& f, const GroupoidFunctor& g)
      : a_(a), b_(b), c_(c), f_(f), g_(g), a_hom_(a), b_hom_(b), c_hom_(c) {
    for (int x = 0; x < a.object_count(); ++x)
      for (int y = 0; y < b.object_count(); ++y)
        for (int phi : c_hom_.hom(f.objects[x], g.objects[y])) {
          index_[{x, y, phi}] = static_cast<int>(objects_.size());
          objects_.push_back({x, y, phi});
        }
    UnionFind uf(static_cast<int>(objects_.size()));
    for (int k = 0; k < static_cast<int>(objects_.size()); ++k) {
      auto [x, y, phi] = objects_[k];
      for (int alpha : a_hom_.out(x)) {
        int moved = c.compose(phi, c.inverse[f.morphisms[alpha]]);
        uf.unite(k, index_.at({a.target[alpha], y, moved}));
      }
      for (int beta : b_hom_.out(y)) {
        int moved = c.compose(g.morphisms[beta], phi);
        uf.unite(k, index_.at({x, b.target[beta], moved}));
      }
    }
    shape_.objects = static_cast<int>(objects_.size());
    shape_.component = uf.labels(shape_.component_count);
    shape_.representative.assign(shape_.component_count, -1);
    for (int k = 0; k < shape_.objects; ++k)
      if (shape_.representative[shape_.component[k]] < 0)
        shape_.representative[shape_.component[k]] = k;
    shape_.automorphisms = [this](int k) { return automorphisms(k); };
    shape_.object_name = [this](int k) { return object_name(k); };
    shape_.automorphism_name = [this](std::int64_t key) {
      auto [alpha, beta] = unpack(key);
      return "(" + a_.morphisms[alpha] + ", " + b_.morphisms[beta] + ")";
    };
  }

  const std::vector<Object>& objects() const { return objects_; }
  int find(int x, int y, int phi) const {
    auto it = index_.find({x, y, phi});
    return it == index_.end() ? -1 : it->second;
  }
  const GroupoidShape& shape() const { return shape_; }

  static std::int64_t pack(int alpha, int beta) {
    return (static_cast<std::int64_t>(alpha) << 32) | static_cast<std::uint32_t>(beta);
  }
  static std::pair<int, int> unpack(std::int64_t key) {
    return {static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffff)};
  }

  /// Pairs (alpha, beta) in Aut(a) x Aut(b) with phi o F alpha = G beta o phi.
  std::vector<std::int64_t> automorphisms(int k) const {
    auto [x, y, phi] = objects_[k];
    std::vector<std::int64_t> out;
    for (int alpha : a_hom_.hom(x, x))
      for (int beta : b_hom_.hom(y, y))
        if (c_.compose(phi, f_.morphisms[alpha]) == c_.compose(g_.morphisms[beta], phi))
          out.push_back(pack(alpha, beta));
    return out;
  }

  std::string object_name(int k) const {
    auto [x, y, phi] = objects_[k];
    return "(" + a_.objects[x] + ", " + b_.objects[y] + ", " + c_.morphisms[phi] + ")";
  }

private:
  const FiniteGroupoid& a_;
  const FiniteGroupoid& b_;
  const FiniteGroupoid& c_;
  const GroupoidFunctor& f_;
  const GroupoidFunctor& g_;
  HomIndex a_hom_, b_hom_, c_hom_;
  std::vector<Object> objects_;
  std::map<Object, int> index_;
  GroupoidShape shape_;
};

struct IsoCommaGroupoid {
  FiniteGroupoid groupoid;
  GroupoidFunctor first;   // to A
  GroupoidFunctor second;  // to B
};

/// Fully materialized iso-comma with its two projections.
inline IsoCommaGroupoid iso_comma(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                  const FiniteGroupoid& c, const GroupoidFunctor& f,
                                  const GroupoidFunctor& g) {
  IsoComma ic(a, b, c, f, g);
  HomIndex ah(a), bh(b);
  IsoCommaGroupoid out;
  auto& gr = out.groupoid;
  for (int k = 0; k < static_cast<int>(ic.objects().size()); ++k) {
    gr.add_object(ic.object_name(k));
    out.first.objects.push_back(std::get<0>(ic.objects()[k]));
    out.second.objects.push_back(std::get<1>(ic.objects()[k]));
  }
  std::map<std::tuple<int, int, int>, int> mor;  // (source object, alpha, beta)
  for (int k = 0; k < static_cast<int>(ic.objects().size()); ++k) {
    auto [x, y, phi] = ic.objects()[k];
    for (int alpha : ah.out(x))
      for (int beta : bh.out(y)) {
        int moved = c.compose(c.compose(g.morphisms[beta], phi), c.inverse[f.morphisms[alpha]]);
        int t = ic.find(a.target[alpha], b.target[beta], moved);
        int m = gr.add_morphism(gr.objects[k] + " -(" + a.morphisms[alpha] + ", " +
                                    b.morphisms[beta] + ")->",
                                k, t);
        mor[{k, alpha, beta}] = m;
        out.first.morphisms.push_back(alpha);
        out.second.morphisms.push_back(beta);
        if (alpha == a.identity[x] && beta == b.identity[y]) gr.identity[k] = m;
      }
  }
  for (int m = 0; m < gr.morphism_count(); ++m) {
    int alpha = out.first.morphisms[m];
    int beta = out.second.morphisms[m];
    gr.inverse[m] = mor.at({gr.target[m], a.inverse[alpha], b.inverse[beta]});
  }
  for (int m1 = 0; m1 < gr.morphism_count(); ++m1)
    for (const auto& [key, m2] : mor) {
      if (std::get<0>(key) != gr.target[m1]) continue;
      int alpha = a.compose(std::get<1>(key), out.first.morphisms[m1]);
      int beta = b.compose(std::get<2>(key), out.second.morphisms[m1]);
      gr.composition[FiniteGroupoid::key(m2, m1)] = mor.at({gr.source[m1], alpha, beta});
    }
  return out;
}

} // namespace twoseg
