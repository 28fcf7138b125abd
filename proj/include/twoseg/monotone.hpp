#pragma once

// Combinatorics of the simplex category and of its one-point extension
// used to index preaugmented bisimplicial sets.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "twoseg/error.hpp"

namespace twoseg {

/// A weakly increasing map [domain] -> [codomain], stored as its value table.
class MonotoneMap {
public:
  MonotoneMap(int domain, int codomain, std::vector<int> values)
      : domain_(domain), codomain_(codomain), values_(std::move(values)) {
    if (domain_ < 0 || codomain_ < 0)
      throw std::invalid_argument("monotone map: negative object size");
    if (values_.size() != static_cast<std::size_t>(domain_) + 1)
      throw std::invalid_argument("monotone map: value table has length " +
                                  std::to_string(values_.size()) + ", expected " +
                                  std::to_string(domain_ + 1));
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (values_[k] < 0 || values_[k] > codomain_)
        throw std::invalid_argument("monotone map: value out of range at " +
                                    std::to_string(k));
      if (k > 0 && values_[k] < values_[k - 1])
        throw std::invalid_argument("monotone map: not weakly increasing at " +
                                    std::to_string(k));
    }
  }

  static MonotoneMap identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v[k] = k;
    return {n, n, std::move(v)};
  }

  /// delta_i : [n-1] -> [n], skipping the value i.
  static MonotoneMap coface(int n, int i) {
    if (n < 1 || i < 0 || i > n)
      throw std::invalid_argument("coface: need 0 <= i <= n, n >= 1");
    std::vector<int> v;
    for (int k = 0; k < n; ++k) v.push_back(k < i ? k : k + 1);
    return {n - 1, n, std::move(v)};
  }

  /// sigma_i : [n+1] -> [n], hitting i twice.
  static MonotoneMap codegeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n)
      throw std::invalid_argument("codegeneracy: need 0 <= i <= n");
    std::vector<int> v;
    for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
    return {n + 1, n, std::move(v)};
  }

  static MonotoneMap constant(int domain, int codomain, int value) {
    return {domain, codomain, std::vector<int>(static_cast<std::size_t>(domain) + 1, value)};
  }

  int domain() const noexcept { return domain_; }
  int codomain() const noexcept { return codomain_; }
  int operator()(int k) const { return values_.at(static_cast<std::size_t>(k)); }
  std::span<const int> values() const noexcept { return values_; }

  bool is_injective() const noexcept {
    for (std::size_t k = 1; k < values_.size(); ++k)
      if (values_[k] == values_[k - 1]) return false;
    return true;
  }
  bool is_surjective() const noexcept {
    return values_.front() == 0 && values_.back() == codomain_ &&
           [this] {
             for (std::size_t k = 1; k < values_.size(); ++k)
               if (values_[k] > values_[k - 1] + 1) return false;
             return true;
           }();
  }
  bool is_identity() const noexcept { return domain_ == codomain_ && is_injective(); }

  /// Values omitted by the map, ascending.
  std::vector<int> omitted() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int v = 0; v <= codomain_; ++v) {
      while (k < values_.size() && values_[k] < v) ++k;
      if (k == values_.size() || values_[k] != v) out.push_back(v);
    }
    return out;
  }

  /// Positions k with f(k) == f(k+1), ascending.
  std::vector<int> repeats() const {
    std::vector<int> out;
    for (std::size_t k = 1; k < values_.size(); ++k)
      if (values_[k] == values_[k - 1]) out.push_back(static_cast<int>(k - 1));
    return out;
  }

  /// Compact label: digits concatenated when the codomain fits in one digit.
  std::string label() const {
    std::string s;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (codomain_ > 9 && k > 0) s += '.';
      s += std::to_string(values_[k]);
    }
    return s;
  }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap& a, const MonotoneMap& b) {
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

private:
  int domain_;
  int codomain_;
  std::vector<int> values_;
};

/// g after f.
inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.codomain() != g.domain())
    throw CompositionError("cannot compose: codomain of first map is [" +
                           std::to_string(f.codomain()) + "], domain of second is [" +
                           std::to_string(g.domain()) + "]");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return {f.domain(), g.codomain(), std::move(v)};
}

struct EpiMono {
  MonotoneMap surjection;
  MonotoneMap injection;
};

/// The unique factorization f = injection o surjection.
inline EpiMono factorize_epi_mono(const MonotoneMap& f) {
  std::vector<int> image;
  std::vector<int> surj;
  for (int x : f.values()) {
    if (image.empty() || image.back() != x) image.push_back(x);
    surj.push_back(static_cast<int>(image.size()) - 1);
  }
  const int k = static_cast<int>(image.size()) - 1;
  return {MonotoneMap(f.domain(), k, std::move(surj)),
          MonotoneMap(k, f.codomain(), std::move(image))};
}

/// All monotone maps [n] -> [m] in lexicographic order of value tables.
inline std::vector<MonotoneMap> enumerate_monotone(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("enumerate_monotone: negative size");
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    out.emplace_back(n, m, v);
    int k = n;
    while (k >= 0 && v[k] == m) --k;
    if (k < 0) break;
    ++v[k];
    for (int j = k + 1; j <= n; ++j) v[j] = v[k];
  }
  return out;
}

/// Index of the category obtained from Delta x Delta by adding a terminal
/// object; the added object is written -1.
struct Bidegree {
  int a;
  int b;
  int total() const noexcept { return a + 1 + b; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct Augmentation {
  friend auto operator<=>(const Augmentation&, const Augmentation&) = default;
};

class SigmaIndex {
public:
  SigmaIndex(Augmentation) : tag_(Augmentation{}) {}
  SigmaIndex(Bidegree d) : tag_(d) {
    if (d.a < 0 || d.b < 0) throw std::invalid_argument("bidegree must be non-negative");
  }
  static SigmaIndex augmentation() { return SigmaIndex(Augmentation{}); }

  bool is_augmentation() const noexcept { return std::holds_alternative<Augmentation>(tag_); }
  Bidegree bidegree() const { return std::get<Bidegree>(tag_); }
  /// -1 for the augmentation, a+b otherwise.
  int degree() const noexcept {
    return is_augmentation() ? -1 : std::get<Bidegree>(tag_).a + std::get<Bidegree>(tag_).b;
  }
  std::string label() const {
    if (is_augmentation()) return "-1";
    auto d = bidegree();
    return std::to_string(d.a) + "," + std::to_string(d.b);
  }
  friend bool operator==(const SigmaIndex&, const SigmaIndex&) = default;

private:
  std::variant<Augmentation, Bidegree> tag_;
};

} // namespace twoseg
