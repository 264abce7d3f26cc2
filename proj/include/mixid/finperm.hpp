#pragma once

// Finitary permutations of the naturals.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mixid/regions.hpp"

namespace mixid {

/// A mover or cell search had nothing to work with.
class infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FinPerm {
 public:
  FinPerm() = default;

  /// Product of cycles, rightmost applied first: (1 2)(2 3) = (1 2) ∘ (2 3).
  static FinPerm from_cycles(const std::vector<std::vector<Nat>>& cycles) {
    FinPerm out;
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto& c = *it;
      std::vector<Nat> sorted = c;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw usage_error("cycle repeats a point");
      }
      FinPerm one;
      for (std::size_t i = 0; c.size() > 1 && i < c.size(); ++i) {
        one.map_[c[i]] = c[(i + 1) % c.size()];
      }
      out = compose(one, out);
    }
    return out;
  }

  static FinPerm transposition(Nat a, Nat b) { return from_cycles({{a, b}}); }

  bool is_identity() const { return map_.empty(); }

  Nat operator()(Nat p) const {
    auto it = map_.find(p);
    return it == map_.end() ? p : it->second;
  }

  FinPerm inverse() const {
    FinPerm out;
    for (const auto& [x, y] : map_) out.map_[y] = x;
    return out;
  }

  /// f ∘ g (g first).
  friend FinPerm compose(const FinPerm& f, const FinPerm& g) {
    FinPerm out;
    for (const auto& [x, y] : g.map_) {
      Nat z = f(y);
      if (z != x) out.map_[x] = z;
    }
    for (const auto& [x, y] : f.map_) {
      if (g.map_.count(x)) continue;
      // x fixed by g.
      out.map_[x] = y;
    }
    return out;
  }

  /// Moved points, ascending.
  std::vector<Nat> moved() const {
    std::vector<Nat> out;
    for (const auto& kv : map_) out.push_back(kv.first);
    return out;
  }

  /// Disjoint cycles, each starting at its least element, sorted by it.
  std::vector<std::vector<Nat>> cycles() const {
    std::vector<std::vector<Nat>> out;
    std::vector<Nat> seen;
    for (const auto& [start, img] : map_) {
      if (std::binary_search(seen.begin(), seen.end(), start)) continue;
      std::vector<Nat> cyc{start};
      for (Nat x = img; x != start; x = (*this)(x)) cyc.push_back(x);
      for (Nat x : cyc) seen.insert(std::upper_bound(seen.begin(), seen.end(), x), x);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// +1 for even, -1 for odd.
  int sign() const {
    int s = 1;
    for (const auto& c : cycles()) {
      if (c.size() % 2 == 0) s = -s;
    }
    return s;
  }

  friend bool operator==(const FinPerm&, const FinPerm&) = default;

  /// perm((1 2 3)(4 5)); perm() for the identity.
  std::string str() const {
    std::string out = "perm(";
    for (const auto& c : cycles()) {
      out += "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(c[i]);
      }
      out += ")";
    }
    return out + ")";
  }

 private:
  std::map<Nat, Nat> map_;
};

FinPerm compose(const FinPerm& f, const FinPerm& g);

inline FinPerm operator*(const FinPerm& f, const FinPerm& g) { return compose(f, g); }

inline DiscreteRegion support(const FinPerm& f) { return DiscreteRegion::finite(f.moved()); }

inline DiscreteRegion apply_region(const FinPerm& f, const DiscreteRegion& r) {
  std::vector<Nat> img;
  img.reserve(r.elements().size());
  for (Nat x : r.elements()) img.push_back(f(x));
  return {r.mode(), std::move(img)};
}

enum class Parity { any, even };

/// (p q) with q the least usable point of the window, or (p q r) for even parity.
inline FinPerm make_mover(const DiscreteRegion& window, Nat p, const std::vector<Nat>& forbid,
                          Parity parity = Parity::any) {
  if (!window.contains(p)) throw usage_error("mover point must lie in the window");
  std::vector<Nat> skip = forbid;
  skip.push_back(p);
  Nat q = 0;
  if (!window.least_member(skip, q)) {
    throw infeasible("window " + window.str() + " has no point to move " + std::to_string(p) + " to");
  }
  if (parity == Parity::any) return FinPerm::transposition(p, q);
  skip.push_back(q);
  Nat r = 0;
  if (!window.least_member(skip, r)) {
    throw infeasible("window " + window.str() + " is too small for an even mover of " +
                     std::to_string(p));
  }
  return FinPerm::from_cycles({{p, q, r}});
}

}  // namespace mixid
