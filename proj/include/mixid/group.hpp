#pragma once

// Uniform view of the two acting groups, so words, the oscillation engine and
// the solvers are written once.

#include <optional>
#include <string>
#include <vector>

#include "mixid/finperm.hpp"
#include "mixid/thompson.hpp"

namespace mixid {

template <class G>
struct group_traits;

template <>
struct group_traits<PLMap> {
  using point = Rational;
  using region = IntervalRegion;
  static constexpr bool metric = true;
  static constexpr const char* space_name = "interval";

  static PLMap identity() { return {}; }
  static PLMap compose(const PLMap& a, const PLMap& b) { return mixid::compose(a, b); }
  static PLMap inverse(const PLMap& a) { return a.inverse(); }
  static point apply(const PLMap& g, const point& p) { return g(p); }
  static region support(const PLMap& g) { return mixid::support(g); }
  static region image(const PLMap& g, const region& r) { return apply_region(g, r); }
  /// X minus Fix(G): the open unit interval.
  static region ambient() { return IntervalRegion::whole(); }
  static std::string str(const PLMap& g) { return g.str(); }
  static std::string point_str(const point& p) { return p.str(); }

  /// The part of the open region `cell` around q that is a single component.
  static region around(const region& cell, const point& q) {
    const Interval* iv = cell.component_of(q);
    if (!iv) return {};
    return IntervalRegion(iv->lo, iv->hi);
  }

  /// Mover with support in `cell` (a single component containing q), fixing
  /// every point of `fixed`, sending q off `forbid`, and with support of
  /// diameter at most `diameter` when given.
  static PLMap mover(const region& cell, const point& q, const std::vector<point>& fixed,
                     const std::vector<point>& forbid, const std::optional<Rational>& diameter,
                     Parity) {
    const Interval* iv = cell.component_of(q);
    if (!iv) throw infeasible("mover point " + q.str() + " is not inside its cell");
    Rational lo = iv->lo, hi = iv->hi;
    for (const auto& y : fixed) {
      if (y == q) throw infeasible("mover point " + q.str() + " must stay fixed");
      if (lo < y && y < q) lo = y;
      if (q < y && y < hi) hi = y;
    }
    if (diameter) {
      Rational half = *diameter / Rational(2);
      if (lo < q - half) lo = q - half;
      if (q + half < hi) hi = q + half;
    }
    return make_mover(lo, hi, q, forbid);
  }

  static Rational displacement(const PLMap& g) { return mixid::displacement(g); }
};

template <>
struct group_traits<FinPerm> {
  using point = Nat;
  using region = DiscreteRegion;
  static constexpr bool metric = false;
  static constexpr const char* space_name = "discrete";

  static FinPerm identity() { return {}; }
  static FinPerm compose(const FinPerm& a, const FinPerm& b) { return mixid::compose(a, b); }
  static FinPerm inverse(const FinPerm& a) { return a.inverse(); }
  static point apply(const FinPerm& g, const point& p) { return g(p); }
  static region support(const FinPerm& g) { return mixid::support(g); }
  static region image(const FinPerm& g, const region& r) { return apply_region(g, r); }
  static region ambient() { return DiscreteRegion::whole(); }
  static std::string str(const FinPerm& g) { return g.str(); }
  static std::string point_str(const point& p) { return std::to_string(p); }

  static region around(const region& cell, const point& q) {
    return cell.contains(q) ? cell : DiscreteRegion::empty_region();
  }

  static FinPerm mover(const region& cell, const point& q, const std::vector<point>& fixed,
                       const std::vector<point>& forbid, const std::optional<Rational>&,
                       Parity parity) {
    if (std::find(fixed.begin(), fixed.end(), q) != fixed.end()) {
      throw infeasible("mover point " + std::to_string(q) + " must stay fixed");
    }
    DiscreteRegion window = minus(cell, DiscreteRegion::finite(fixed));
    return make_mover(window, q, forbid, parity);
  }

  static Rational displacement(const FinPerm&) { return Rational(0); }
};

template <class G>
using point_t = typename group_traits<G>::point;
template <class G>
using region_t = typename group_traits<G>::region;

}  // namespace mixid
