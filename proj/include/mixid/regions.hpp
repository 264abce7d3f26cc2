#pragma once

// Exact open-set algebra.
//
// IntervalRegion: finite unions of open intervals inside the ambient space
// (0,1). Components are stored as connected components, so two intervals
// that merely touch, like (0,1/2) and (1/2,1), stay separate and the shared
// point is excluded.
//
// DiscreteRegion: finite or cofinite subsets of the naturals.
//
// Both instances expose the same free-function vocabulary (unite,
// intersect, minus, interior_complement, boundary_points) so the oscillation
// engine can be written once.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixid/exactnum.hpp"

namespace mixid {

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

class IntervalRegion {
 public:
  IntervalRegion() = default;
  explicit IntervalRegion(std::vector<Interval> parts) {
    for (const auto& iv : parts) {
      if (iv.lo < Rational(0) || iv.hi > Rational(1)) {
        throw usage_error("interval (" + iv.lo.str() + "," + iv.hi.str() +
                          ") leaves the ambient space (0,1)");
      }
    }
    parts_ = canonical(std::move(parts));
  }
  IntervalRegion(const Rational& lo, const Rational& hi)
      : IntervalRegion(std::vector<Interval>{{lo, hi}}) {}

  /// The ambient space (0,1).
  static IntervalRegion whole() { return IntervalRegion(Rational(0), Rational(1)); }
  static IntervalRegion empty_region() { return {}; }

  const std::vector<Interval>& components() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool is_infinite() const { return !parts_.empty(); }

  bool contains(const Rational& p) const {
    auto it = std::upper_bound(
        parts_.begin(), parts_.end(), p,
        [](const Rational& x, const Interval& iv) { return x < iv.hi; });
    return it != parts_.end() && it->lo < p;
  }

  /// Component containing p, if any.
  const Interval* component_of(const Rational& p) const {
    for (const auto& iv : parts_) {
      if (iv.lo < p && p < iv.hi) return &iv;
    }
    return nullptr;
  }

  inline bool is_subset(const IntervalRegion& other) const;

  friend bool operator==(const IntervalRegion&, const IntervalRegion&) = default;

  std::string str() const {
    if (parts_.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += "u";
      out += "(" + parts_[i].lo.str() + "," + parts_[i].hi.str() + ")";
    }
    return out;
  }

  /// Accepts "empty" or "(a,b)u(c,d)u..." with whitespace anywhere.
  static IntervalRegion parse(std::string_view text);

 private:
  static std::vector<Interval> canonical(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& iv) { return !(iv.lo < iv.hi); });
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    for (auto& iv : parts) {
      // Overlap merges; touching (hi == lo) does not.
      if (!out.empty() && iv.lo < out.back().hi) {
        if (out.back().hi < iv.hi) out.back().hi = iv.hi;
      } else {
        out.push_back(std::move(iv));
      }
    }
    return out;
  }

  std::vector<Interval> parts_;
};

inline IntervalRegion unite(const IntervalRegion& a, const IntervalRegion& b) {
  std::vector<Interval> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return IntervalRegion(std::move(all));
}

inline IntervalRegion intersect(const IntervalRegion& a, const IntervalRegion& b) {
  std::vector<Interval> out;
  const auto& x = a.components();
  const auto& y = b.components();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = std::max(x[i].lo, y[j].lo);
    const Rational& hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalRegion(std::move(out));
}

/// (0,1) minus the closure of r.
inline IntervalRegion exterior(const IntervalRegion& r) {
  std::vector<Interval> gaps;
  Rational prev(0);
  for (const auto& iv : r.components()) {
    if (prev < iv.lo) gaps.push_back({prev, iv.lo});
    prev = iv.hi;
  }
  if (prev < Rational(1)) gaps.push_back({prev, Rational(1)});
  return IntervalRegion(std::move(gaps));
}

/// Open difference: interior of a \ b, i.e. a minus the closure of b.
inline IntervalRegion minus(const IntervalRegion& a, const IntervalRegion& b) {
  return intersect(a, exterior(b));
}

/// within ∩ int(X \ (a ∪ {0,1})).
inline IntervalRegion interior_complement(const IntervalRegion& a,
                                          const IntervalRegion& within) {
  return intersect(within, exterior(a));
}

/// closure(r) \ r: every endpoint of every component.
inline std::vector<Rational> boundary_points(const IntervalRegion& r) {
  std::vector<Rational> pts;
  for (const auto& iv : r.components()) {
    if (pts.empty() || pts.back() != iv.lo) pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  return pts;
}

/// int(cl(r)): components sharing an endpoint are joined.
inline IntervalRegion regularize(const IntervalRegion& r) {
  std::vector<Interval> out;
  for (const auto& iv : r.components()) {
    if (!out.empty() && out.back().hi == iv.lo) {
      out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return IntervalRegion(std::move(out));
}

inline bool IntervalRegion::is_subset(const IntervalRegion& other) const {
  return intersect(*this, other) == *this;
}

inline IntervalRegion IntervalRegion::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s.push_back(c);
  }
  if (s == "empty" || s.empty()) return {};
  std::vector<Interval> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw usage_error("region: expected '(' in '" + s + "'");
    auto comma = s.find(',', i);
    auto close = s.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw usage_error("region: malformed interval in '" + s + "'");
    }
    Rational lo = Rational::parse(std::string_view(s).substr(i + 1, comma - i - 1));
    Rational hi = Rational::parse(std::string_view(s).substr(comma + 1, close - comma - 1));
    if (!(lo < hi)) throw usage_error("region: empty interval in '" + s + "'");
    parts.push_back({lo, hi});
    i = close + 1;
    if (i < s.size()) {
      if (s[i] != 'u' && s[i] != 'U') {
        throw usage_error("region: expected 'u' between intervals in '" + s + "'");
      }
      ++i;
    }
  }
  return IntervalRegion(std::move(parts));
}

// ---------------------------------------------------------------------------

using Nat = std::uint64_t;

class DiscreteRegion {
 public:
  enum class Mode { finite, cofinite };

  DiscreteRegion() = default;
  DiscreteRegion(Mode mode, std::vector<Nat> elements)
      : mode_(mode), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }
  static DiscreteRegion finite(std::vector<Nat> e) { return {Mode::finite, std::move(e)}; }
  static DiscreteRegion cofinite(std::vector<Nat> missing = {}) {
    return {Mode::cofinite, std::move(missing)};
  }
  static DiscreteRegion whole() { return cofinite(); }
  static DiscreteRegion empty_region() { return finite({}); }

  Mode mode() const { return mode_; }
  /// The set itself (finite mode) or its complement (cofinite mode).
  const std::vector<Nat>& elements() const { return elems_; }

  bool is_empty() const { return mode_ == Mode::finite && elems_.empty(); }
  bool is_infinite() const { return mode_ == Mode::cofinite; }
  bool contains(Nat p) const {
    bool listed = std::binary_search(elems_.begin(), elems_.end(), p);
    return mode_ == Mode::finite ? listed : !listed;
  }
  inline bool is_subset(const DiscreteRegion& other) const;

  /// Smallest member not in `exclude`; false if none.
  bool least_member(const std::vector<Nat>& exclude, Nat& out, Nat from = 0) const {
    auto excluded = [&](Nat x) {
      return std::find(exclude.begin(), exclude.end(), x) != exclude.end();
    };
    if (mode_ == Mode::finite) {
      for (Nat x : elems_) {
        if (x >= from && !excluded(x)) {
          out = x;
          return true;
        }
      }
      return false;
    }
    for (Nat x = from;; ++x) {
      if (!contains(x) || excluded(x)) continue;
      out = x;
      return true;
    }
  }

  friend bool operator==(const DiscreteRegion&, const DiscreteRegion&) = default;

  std::string str() const {
    std::string out = mode_ == Mode::finite ? "finite{" : "cofinite{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems_[i]);
    }
    return out + "}";
  }

  static DiscreteRegion parse(std::string_view text);

 private:
  Mode mode_ = Mode::finite;
  std::vector<Nat> elems_;
};

namespace detail {

inline std::vector<Nat> set_union(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline std::vector<Nat> set_inter(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline std::vector<Nat> set_diff(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

inline DiscreteRegion complement(const DiscreteRegion& r) {
  using M = DiscreteRegion::Mode;
  return {r.mode() == M::finite ? M::cofinite : M::finite, r.elements()};
}

inline DiscreteRegion unite(const DiscreteRegion& a, const DiscreteRegion& b) {
  using M = DiscreteRegion::Mode;
  const auto& x = a.elements();
  const auto& y = b.elements();
  if (a.mode() == M::finite && b.mode() == M::finite) return {M::finite, detail::set_union(x, y)};
  if (a.mode() == M::cofinite && b.mode() == M::cofinite) return {M::cofinite, detail::set_inter(x, y)};
  if (a.mode() == M::finite) return {M::cofinite, detail::set_diff(y, x)};
  return {M::cofinite, detail::set_diff(x, y)};
}

inline DiscreteRegion intersect(const DiscreteRegion& a, const DiscreteRegion& b) {
  using M = DiscreteRegion::Mode;
  const auto& x = a.elements();
  const auto& y = b.elements();
  if (a.mode() == M::finite && b.mode() == M::finite) return {M::finite, detail::set_inter(x, y)};
  if (a.mode() == M::cofinite && b.mode() == M::cofinite) return {M::cofinite, detail::set_union(x, y)};
  if (a.mode() == M::finite) return {M::finite, detail::set_diff(x, y)};
  return {M::finite, detail::set_diff(y, x)};
}

/// Discrete topology: interiors and closures are trivial, so this is a \ b.
inline DiscreteRegion minus(const DiscreteRegion& a, const DiscreteRegion& b) {
  return intersect(a, complement(b));
}

inline DiscreteRegion interior_complement(const DiscreteRegion& a,
                                          const DiscreteRegion& within) {
  return minus(within, a);
}

inline std::vector<Nat> boundary_points(const DiscreteRegion&) { return {}; }

inline DiscreteRegion regularize(const DiscreteRegion& r) { return r; }

inline bool DiscreteRegion::is_subset(const DiscreteRegion& other) const {
  return minus(*this, other).is_empty();
}

inline DiscreteRegion DiscreteRegion::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s.push_back(c);
  }
  Mode mode;
  std::size_t open;
  if (s.rfind("finite{", 0) == 0) {
    mode = Mode::finite;
    open = 6;
  } else if (s.rfind("cofinite{", 0) == 0) {
    mode = Mode::cofinite;
    open = 8;
  } else {
    throw usage_error("region: expected finite{...} or cofinite{...}, got '" + s + "'");
  }
  if (s.back() != '}') throw usage_error("region: missing '}' in '" + s + "'");
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::vector<Nat> elems;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw usage_error("region: empty element in '" + s + "'");
    mpz_class v;
    if (!detail::parse_integer(item, v) || v < 0 || !v.fits_ulong_p()) {
      throw usage_error("region: bad natural number '" + item + "'");
    }
    elems.push_back(v.get_ui());
  }
  return {mode, std::move(elems)};
}

}  // namespace mixid
