#pragma once

// Enumeration of natural transformations between finite presheaves of the
// same shape. Only nondegenerate source elements are variables; images of
// degenerate elements are forced. Domains are bitsets pruned by arc
// consistency over the structure maps, and every candidate is re-verified.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/parallel.hpp"
#include "twoseg/presheaf.hpp"

namespace twoseg {

struct HomOptions {
  int jobs = 1;
  /// Abort with PreconditionError once this many maps have been found (0 = no cap).
  std::size_t limit = 0;
};

struct HomStats {
  std::size_t variables = 0;
  std::size_t arcs = 0;
  std::size_t nodes = 0;
};

namespace detail {

class HomSolver {
public:
  HomSolver(const FinitePresheaf& a, const FinitePresheaf& b) : a_(a), b_(b) {
    if (!same_shape(a, b))
      throw PreconditionError("hom: source and target presheaves have different shapes");
    deg_ = analyze_degeneracies(a);
    build_variables();
    build_arcs();
  }

  std::vector<PresheafMap> solve(const HomOptions& opt, HomStats* stats) {
    std::vector<std::uint64_t> dom = initial_domains();
    std::size_t nodes = 0;
    std::vector<PresheafMap> out;
    if (propagate(dom, all_arcs())) {
      int v = choose(dom);
      if (v == -2) {
      } else if (v < 0) {
        emit(dom, out);
      } else {
        std::vector<int> values = members(dom, v);
        std::vector<std::vector<PresheafMap>> parts(values.size());
        std::vector<std::size_t> part_nodes(values.size(), 0);
        std::mutex mu;
        std::size_t found = 0;
        parallel_for(values.size(), opt.jobs, [&](std::size_t k) {
          auto local = dom;
          assign(local, v, values[k]);
          if (propagate(local, arcs_of(v))) search(local, parts[k], part_nodes[k], opt, mu, found);
        });
        for (std::size_t k = 0; k < values.size(); ++k) {
          nodes += part_nodes[k];
          for (auto& m : parts[k]) out.push_back(std::move(m));
        }
      }
    }
    std::sort(out.begin(), out.end());
    if (stats) *stats = {vars_.size(), arcs_.size(), nodes + 1};
    return out;
  }

private:
  struct Var {
    int level;
    int element;
    std::size_t offset;  // word offset into the flat domain vector
    std::size_t words;
  };
  struct Arc {
    int x;
    int y;
    std::vector<int> phi;  // value of x -> required value of y, or -1
  };

  void build_variables() {
    var_of_.resize(a_.level_count());
    std::size_t offset = 0;
    for (int l = 0; l < a_.level_count(); ++l) {
      var_of_[l].assign(a_.sizes[l], -1);
      for (int x = 0; x < a_.sizes[l]; ++x) {
        if (!deg_.is_nondegenerate(l, x)) continue;
        std::size_t words = (static_cast<std::size_t>(b_.sizes[l]) + 63) / 64;
        var_of_[l][x] = static_cast<int>(vars_.size());
        vars_.push_back({l, x, offset, std::max<std::size_t>(words, 1)});
        offset += vars_.back().words;
      }
    }
    total_words_ = offset;
    incident_.resize(vars_.size());
  }

  /// Inverts a degeneracy chain in the target, or returns -1.
  int unchain(const std::vector<int>& chain, int w) const {
    int v = w;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      v = b_.maps[b_.maps[*it].retraction].table[v];
    int check = v;
    for (int m : chain) check = b_.maps[m].table[check];
    return check == w ? v : -1;
  }

  void build_arcs() {
    for (std::size_t k = 0; k < a_.maps.size(); ++k) {
      const auto& ma = a_.maps[k];
      const auto& mb = b_.maps[k];
      for (int x = 0; x < a_.sizes[ma.source]; ++x) {
        int vx = var_of_[ma.source][x];
        if (vx < 0) continue;
        const auto& e = deg_.entries[ma.target][ma.table[x]];
        int vy = var_of_[e.base_level][e.base];
        Arc arc{vx, vy, std::vector<int>(b_.sizes[ma.source], -1)};
        bool trivial = true;
        for (int u = 0; u < b_.sizes[ma.source]; ++u) {
          arc.phi[u] = unchain(e.chain, mb.table[u]);
          if (vx == vy && arc.phi[u] != u) trivial = false;
        }
        if (vx == vy && trivial) continue;
        incident_[vx].push_back(arcs_.size());
        if (vy != vx) incident_[vy].push_back(arcs_.size());
        arcs_.push_back(std::move(arc));
      }
    }
  }

  std::vector<std::uint64_t> initial_domains() const {
    std::vector<std::uint64_t> dom(total_words_, 0);
    for (const auto& v : vars_) {
      int n = b_.sizes[v.level];
      for (int u = 0; u < n; ++u) dom[v.offset + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    return dom;
  }

  bool test(const std::vector<std::uint64_t>& dom, int v, int u) const {
    return (dom[vars_[v].offset + u / 64] >> (u % 64)) & 1U;
  }

  std::size_t count(const std::vector<std::uint64_t>& dom, int v) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < vars_[v].words; ++w) c += std::popcount(dom[vars_[v].offset + w]);
    return c;
  }

  std::vector<int> members(const std::vector<std::uint64_t>& dom, int v) const {
    std::vector<int> out;
    for (std::size_t w = 0; w < vars_[v].words; ++w) {
      std::uint64_t bits = dom[vars_[v].offset + w];
      while (bits) {
        int t = std::countr_zero(bits);
        out.push_back(static_cast<int>(w * 64 + t));
        bits &= bits - 1;
      }
    }
    return out;
  }

  void assign(std::vector<std::uint64_t>& dom, int v, int u) const {
    for (std::size_t w = 0; w < vars_[v].words; ++w) dom[vars_[v].offset + w] = 0;
    dom[vars_[v].offset + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  std::vector<std::size_t> all_arcs() const {
    std::vector<std::size_t> out(arcs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
  }
  std::vector<std::size_t> arcs_of(int v) const { return incident_[v]; }

  /// Returns true when x's domain changed; `empty` is set if it was wiped out.
  bool revise_forward(std::vector<std::uint64_t>& dom, const Arc& arc, bool& empty) const {
    const Var& vx = vars_[arc.x];
    bool changed = false;
    bool any = false;
    for (std::size_t w = 0; w < vx.words; ++w) {
      std::uint64_t bits = dom[vx.offset + w];
      std::uint64_t keep = bits;
      while (bits) {
        int t = std::countr_zero(bits);
        bits &= bits - 1;
        int u = static_cast<int>(w * 64 + t);
        int need = arc.phi[u];
        if (need < 0 || (arc.x == arc.y ? need != u : !test(dom, arc.y, need))) keep &= ~(std::uint64_t{1} << t);
      }
      if (keep != dom[vx.offset + w]) changed = true;
      dom[vx.offset + w] = keep;
      if (keep) any = true;
    }
    empty = !any;
    return changed;
  }

  bool revise_backward(std::vector<std::uint64_t>& dom, const Arc& arc, bool& empty) const {
    const Var& vy = vars_[arc.y];
    std::vector<std::uint64_t> support(vy.words, 0);
    for (int u : members(dom, arc.x)) {
      int need = arc.phi[u];
      if (need >= 0) support[need / 64] |= std::uint64_t{1} << (need % 64);
    }
    bool changed = false;
    bool any = false;
    for (std::size_t w = 0; w < vy.words; ++w) {
      std::uint64_t keep = dom[vy.offset + w] & support[w];
      if (keep != dom[vy.offset + w]) changed = true;
      dom[vy.offset + w] = keep;
      if (keep) any = true;
    }
    empty = !any;
    return changed;
  }

  bool propagate(std::vector<std::uint64_t>& dom, std::vector<std::size_t> seed) const {
    std::deque<std::size_t> queue(seed.begin(), seed.end());
    std::vector<char> queued(arcs_.size(), 0);
    for (auto k : seed) queued[k] = 1;
    auto touch = [&](int v) {
      for (auto k : incident_[v])
        if (!queued[k]) {
          queued[k] = 1;
          queue.push_back(k);
        }
    };
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      queued[k] = 0;
      const Arc& arc = arcs_[k];
      bool empty = false;
      if (revise_forward(dom, arc, empty)) {
        if (empty) return false;
        touch(arc.x);
      } else if (empty) {
        return false;
      }
      if (arc.x == arc.y) continue;
      if (revise_backward(dom, arc, empty)) {
        if (empty) return false;
        touch(arc.y);
      } else if (empty) {
        return false;
      }
    }
    return true;
  }

  /// Smallest domain above one element (first found on ties), -1 when all
  /// are singletons, -2 when some domain is empty.
  int choose(const std::vector<std::uint64_t>& dom) const {
    int best = -1;
    std::size_t best_size = 0;
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
      std::size_t c = count(dom, v);
      if (c == 0) return -2;
      if (c == 1) continue;
      if (best < 0 || c < best_size) {
        best = v;
        best_size = c;
      }
    }
    return best;
  }

  void emit(const std::vector<std::uint64_t>& dom, std::vector<PresheafMap>& out) const {
    PresheafMap f(a_.level_count());
    for (int l = 0; l < a_.level_count(); ++l) f[l].assign(a_.sizes[l], -1);
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
      auto m = members(dom, v);
      f[vars_[v].level][vars_[v].element] = m.front();
    }
    for (int l = 0; l < a_.level_count(); ++l)
      for (int x = 0; x < a_.sizes[l]; ++x) {
        const auto& e = deg_.entries[l][x];
        if (e.chain.empty()) continue;
        int val = f[e.base_level][e.base];
        for (int m : e.chain) val = b_.maps[m].table[val];
        f[l][x] = val;
      }
    if (is_natural(a_, b_, f)) out.push_back(std::move(f));
  }

  void search(std::vector<std::uint64_t>& dom, std::vector<PresheafMap>& out, std::size_t& nodes,
              const HomOptions& opt, std::mutex& mu, std::size_t& found) const {
    ++nodes;
    int v = choose(dom);
    if (v == -2) return;
    if (v < 0) {
      std::size_t before = out.size();
      emit(dom, out);
      if (opt.limit && out.size() > before) {
        std::lock_guard lock(mu);
        if (++found > opt.limit)
          throw PreconditionError("hom: more than " + std::to_string(opt.limit) + " maps");
      }
      return;
    }
    for (int u : members(dom, v)) {
      auto local = dom;
      assign(local, v, u);
      if (propagate(local, arcs_of(v))) search(local, out, nodes, opt, mu, found);
    }
  }

  const FinitePresheaf& a_;
  const FinitePresheaf& b_;
  DegeneracyAnalysis deg_;
  std::vector<Var> vars_;
  std::vector<std::vector<int>> var_of_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> incident_;
  std::size_t total_words_ = 0;
};

} // namespace detail

/// All natural transformations a -> b, sorted lexicographically by component tables.
inline std::vector<PresheafMap> hom_presheaf(const FinitePresheaf& a, const FinitePresheaf& b,
                                             const HomOptions& opt = {},
                                             HomStats* stats = nullptr) {
  detail::HomSolver solver(a, b);
  return solver.solve(opt, stats);
}

} // namespace twoseg
