#pragma once

// Thompson's group F as piecewise-linear homeomorphisms of [0,1] with dyadic
// breakpoints and power-of-two slopes.

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mixid/exactnum.hpp"
#include "mixid/regions.hpp"

namespace mixid {

class PLMap {
 public:
  using Breakpoint = std::pair<Dyadic, Dyadic>;

  PLMap() : bp_{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}} {}

  /// Validates endpoints, monotonicity and slopes, then drops collinear points.
  explicit PLMap(std::vector<Breakpoint> pts) {
    if (pts.size() < 2) throw usage_error("PL map needs at least two breakpoints");
    if (pts.front() != Breakpoint{Dyadic(0), Dyadic(0)} ||
        pts.back() != Breakpoint{Dyadic(1), Dyadic(1)}) {
      throw usage_error("PL map must send 0 to 0 and 1 to 1");
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (!(pts[i].first < pts[i + 1].first) || !(pts[i].second < pts[i + 1].second)) {
        throw usage_error("PL map breakpoints must be strictly increasing");
      }
      slope_exponent(pts[i], pts[i + 1]);
    }
    bp_ = canonical(std::move(pts));
  }

  static PLMap identity() { return {}; }

  const std::vector<Breakpoint>& breakpoints() const { return bp_; }
  bool is_identity() const { return bp_.size() == 2; }

  Rational operator()(const Rational& p) const {
    if (p < Rational(0) || p > Rational(1)) {
      throw usage_error("PL map evaluated outside [0,1] at " + p.str());
    }
    std::size_t i = piece_of(p);
    Rational x0 = bp_[i].first.to_rational(), y0 = bp_[i].second.to_rational();
    Rational x1 = bp_[i + 1].first.to_rational(), y1 = bp_[i + 1].second.to_rational();
    return y0 + (p - x0) * ((y1 - y0) / (x1 - x0));
  }

  Dyadic operator()(const Dyadic& p) const {
    if (p < Dyadic(0) || p > Dyadic(1)) {
      throw usage_error("PL map evaluated outside [0,1] at " + p.str());
    }
    std::size_t i = piece_of(p);
    long e = slope_exponent(bp_[i], bp_[i + 1]);
    return bp_[i].second + (p - bp_[i].first).times_pow2(e);
  }

  PLMap inverse() const {
    std::vector<Breakpoint> out;
    out.reserve(bp_.size());
    for (const auto& [x, y] : bp_) out.emplace_back(y, x);
    PLMap r;
    r.bp_ = std::move(out);
    return r;
  }

  /// Slope exponents per piece.
  std::vector<long> slope_exponents() const {
    std::vector<long> out;
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i) out.push_back(slope_exponent(bp_[i], bp_[i + 1]));
    return out;
  }

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.bp_ == b.bp_; }

  /// pl{(0,0)(1/2,1/4)(3/4,1/2)(1,1)}
  std::string str() const {
    std::string out = "pl{";
    for (const auto& [x, y] : bp_) out += "(" + x.str() + "," + y.str() + ")";
    return out + "}";
  }

  static long slope_exponent(const Breakpoint& a, const Breakpoint& b) {
    Rational s = (b.second - a.second).to_rational() / (b.first - a.first).to_rational();
    mpz_class n = s.num(), d = s.den();
    if (n == 1 && mpz_popcount(d.get_mpz_t()) == 1) {
      return -static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
    }
    if (d == 1 && n > 0 && mpz_popcount(n.get_mpz_t()) == 1) {
      return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
    }
    throw usage_error("slope " + s.str() + " is not a power of 2");
  }

 private:
  template <class T>
  std::size_t piece_of(const T& p) const {
    // Last breakpoint index i with t_i <= p, capped so that i + 1 is valid.
    auto it = std::upper_bound(bp_.begin(), bp_.end(), p,
                               [](const T& v, const Breakpoint& b) { return v < as<T>(b.first); });
    std::size_t i = static_cast<std::size_t>(it - bp_.begin());
    i = i == 0 ? 0 : i - 1;
    return std::min(i, bp_.size() - 2);
  }
  template <class T>
  static T as(const Dyadic& d) {
    if constexpr (std::is_same_v<T, Dyadic>) {
      return d;
    } else {
      return d.to_rational();
    }
  }

  static std::vector<Breakpoint> canonical(std::vector<Breakpoint> pts) {
    std::vector<Breakpoint> out;
    for (auto& pt : pts) {
      if (out.size() >= 2 &&
          slope_exponent(out[out.size() - 2], out.back()) == slope_exponent(out.back(), pt)) {
        out.back() = std::move(pt);
      } else {
        out.push_back(std::move(pt));
      }
    }
    return out;
  }

  friend PLMap compose(const PLMap& f, const PLMap& g);

  std::vector<Breakpoint> bp_;
};

/// f ∘ g (g first).
inline PLMap compose(const PLMap& f, const PLMap& g) {
  if (g.is_identity()) return f;
  if (f.is_identity()) return g;
  PLMap gi = g.inverse();
  std::vector<Dyadic> xs;
  for (const auto& b : g.breakpoints()) xs.push_back(b.first);
  for (const auto& b : f.breakpoints()) xs.push_back(gi(b.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Breakpoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.emplace_back(x, f(g(x)));
  PLMap r;
  r.bp_ = PLMap::canonical(std::move(pts));
  return r;
}

inline PLMap operator*(const PLMap& f, const PLMap& g) { return compose(f, g); }

inline PLMap power(const PLMap& f, long m) {
  PLMap base = m < 0 ? f.inverse() : f;
  PLMap out;
  for (long i = 0; i < (m < 0 ? -m : m); ++i) out = compose(out, base);
  return out;
}

namespace detail {

inline void require_unit_subinterval(const Dyadic& a, const Dyadic& b) {
  if (a < Dyadic(0) || b > Dyadic(1) || !(a < b)) {
    throw usage_error("need 0 <= a < b <= 1, got [" + a.str() + "," + b.str() + "]");
  }
}

inline Dyadic as_dyadic(const Rational& r, const char* what) {
  if (!r.is_dyadic()) throw usage_error(std::string(what) + " must be dyadic, got " + r.str());
  return r.to_dyadic();
}

}  // namespace detail

/// x_{[a,b],n}: identity up to a + (1 - 2^-n)(b - a), then slopes 1/2, 1, 2.
inline PLMap rel_generator(const Dyadic& a, const Dyadic& b, unsigned n) {
  detail::require_unit_subinterval(a, b);
  Dyadic len = b - a;
  long nn = static_cast<long>(n);
  Dyadic p1 = a + len - len.times_pow2(-nn);
  Dyadic p2 = a + len - len.times_pow2(-nn - 1);
  Dyadic p3 = a + len - len.times_pow2(-nn - 2);
  Dyadic drop = len.times_pow2(-nn - 2);
  std::vector<PLMap::Breakpoint> pts{{Dyadic(0), Dyadic(0)}};
  auto push = [&](const Dyadic& x, const Dyadic& y) {
    if (pts.back().first != x) pts.emplace_back(x, y);
  };
  push(a, a);
  push(p1, p1);
  push(p2, p2 - drop);
  push(p3, p3 - drop);
  push(b, b);
  push(Dyadic(1), Dyadic(1));
  return PLMap(std::move(pts));
}

inline PLMap rel_generator(const Rational& a, const Rational& b, unsigned n) {
  return rel_generator(detail::as_dyadic(a, "interval endpoint"),
                       detail::as_dyadic(b, "interval endpoint"), n);
}

/// x_n.
inline PLMap generator(unsigned n) { return rel_generator(Dyadic(0), Dyadic(1), n); }

/// Conjugate f by the affine map [0,1] -> [a,b]; identity outside [a,b].
inline PLMap rescale(const PLMap& f, const Dyadic& a, const Dyadic& b) {
  detail::require_unit_subinterval(a, b);
  Dyadic len = b - a;
  std::vector<PLMap::Breakpoint> pts;
  if (Dyadic(0) < a) pts.emplace_back(Dyadic(0), Dyadic(0));
  for (const auto& [x, y] : f.breakpoints()) pts.emplace_back(a + len * x, a + len * y);
  if (b < Dyadic(1)) pts.emplace_back(Dyadic(1), Dyadic(1));
  return PLMap(std::move(pts));
}

/// {x : f(x) != x}; isolated fixed points (possibly non-dyadic) puncture it.
inline IntervalRegion support(const PLMap& f) {
  const auto& bp = f.breakpoints();
  // Fixed set as sorted closed segments [lo, hi] (points have lo == hi).
  std::vector<std::pair<Rational, Rational>> fixed;
  auto add = [&](const Rational& lo, const Rational& hi) {
    if (!fixed.empty() && fixed.back().second >= lo) {
      if (fixed.back().second < hi) fixed.back().second = hi;
    } else {
      fixed.emplace_back(lo, hi);
    }
  };
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    Rational x0 = bp[i].first.to_rational(), x1 = bp[i + 1].first.to_rational();
    Rational d0 = bp[i].second.to_rational() - x0;
    Rational d1 = bp[i + 1].second.to_rational() - x1;
    if (d0.sign() == 0 && d1.sign() == 0) {
      add(x0, x1);
    } else if (d0.sign() == 0) {
      add(x0, x0);
    } else if (d0.sign() * d1.sign() < 0) {
      Rational c = x0 + d0 * (x1 - x0) / (d0 - d1);
      add(c, c);
    }
  }
  add(Rational(1), Rational(1));
  std::vector<Interval> parts;
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
    parts.push_back({fixed[i].second, fixed[i + 1].first});
  }
  return IntervalRegion(std::move(parts));
}

/// f(r): each component (a,b) goes to (f(a), f(b)).
inline IntervalRegion apply_region(const PLMap& f, const IntervalRegion& r) {
  if (f.is_identity()) return r;
  std::vector<Interval> parts;
  parts.reserve(r.components().size());
  for (const auto& iv : r.components()) parts.push_back({f(iv.lo), f(iv.hi)});
  return IntervalRegion(std::move(parts));
}

/// max |f(x) - x|, attained at a breakpoint.
inline Rational displacement(const PLMap& f) {
  Rational best(0);
  for (const auto& [x, y] : f.breakpoints()) {
    Rational d = (y - x).to_rational().abs();
    if (best < d) best = d;
  }
  return best;
}

namespace detail {

/// Split [a,b] (dyadic) into maximal standard dyadic intervals, left to right.
inline std::vector<std::pair<Dyadic, Dyadic>> standard_pieces(Dyadic a, const Dyadic& b) {
  std::vector<std::pair<Dyadic, Dyadic>> out;
  while (a < b) {
    // Largest 2^-k with a aligned to it and a + 2^-k <= b.
    Dyadic len(1);
    unsigned long need = a.exponent();
    len = len.times_pow2(-static_cast<long>(need));
    while (b < a + len) len = len.times_pow2(-1);
    out.emplace_back(a, a + len);
    a = a + len;
  }
  return out;
}

inline void split_largest(std::vector<std::pair<Dyadic, Dyadic>>& pieces) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[best].second - pieces[best].first < pieces[i].second - pieces[i].first) best = i;
  }
  auto [lo, hi] = pieces[best];
  Dyadic mid = (lo + hi).times_pow2(-1);
  pieces[best] = {lo, mid};
  pieces.insert(pieces.begin() + static_cast<long>(best) + 1, {mid, hi});
}

}  // namespace detail

/// Element of F sending xs[j] to ys[j]; identity on panel [xs[rigid-1], xs[rigid]]
/// when `rigid` is given.
inline PLMap cfp_interpolate(const std::vector<Dyadic>& xs, const std::vector<Dyadic>& ys,
                             std::optional<std::size_t> rigid = std::nullopt) {
  if (xs.size() != ys.size()) throw usage_error("partitions of unequal length");
  if (xs.size() < 2) throw usage_error("partition needs at least two points");
  auto check = [](const std::vector<Dyadic>& ps) {
    if (ps.front() != Dyadic(0) || ps.back() != Dyadic(1)) {
      throw usage_error("partition must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      if (!(ps[i] < ps[i + 1])) throw usage_error("partition must be strictly increasing");
    }
  };
  check(xs);
  check(ys);
  if (rigid) {
    std::size_t i = *rigid;
    if (i == 0 || i >= xs.size() || xs[i - 1] != ys[i - 1] || xs[i] != ys[i]) {
      throw usage_error("rigid panel must be a shared panel of both partitions");
    }
  }
  std::vector<PLMap::Breakpoint> pts{{Dyadic(0), Dyadic(0)}};
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (rigid && *rigid == j) {
      pts.emplace_back(xs[j], ys[j]);
      continue;
    }
    auto src = detail::standard_pieces(xs[j - 1], xs[j]);
    auto dst = detail::standard_pieces(ys[j - 1], ys[j]);
    while (src.size() < dst.size()) detail::split_largest(src);
    while (dst.size() < src.size()) detail::split_largest(dst);
    for (std::size_t k = 0; k < src.size(); ++k) pts.emplace_back(src[k].second, dst[k].second);
  }
  return PLMap(std::move(pts));
}

/// Power of x_{[a',b'],0} moving p off `forbid`, where [a',b'] is the widest
/// same-exponent dyadic interval inside [a,b] with p in its interior.
inline PLMap make_mover(const Rational& a, const Rational& b, const Rational& p,
                        const std::vector<Rational>& forbid) {
  if (!(a < p && p < b)) throw usage_error("mover point must lie inside the window");
  Dyadic lo, hi;
  for (unsigned long k = 0;; ++k) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    mpq_class la = a.raw() * scale, hb = b.raw() * scale;
    mpz_class m_lo, m_hi;
    mpz_cdiv_q(m_lo.get_mpz_t(), la.get_num_mpz_t(), la.get_den_mpz_t());
    mpz_fdiv_q(m_hi.get_mpz_t(), hb.get_num_mpz_t(), hb.get_den_mpz_t());
    Dyadic cand_lo(m_lo, k), cand_hi(m_hi, k);
    Rational rl = cand_lo.to_rational(), rh = cand_hi.to_rational();
    if (rl < p && p < rh) {
      lo = cand_lo;
      hi = cand_hi;
      break;
    }
  }
  PLMap step = rel_generator(lo, hi, 0);
  PLMap f = step;
  Rational q = step(p);
  // The orbit of p is infinite, so at most |forbid| + 1 powers are needed.
  for (std::size_t m = 1; m <= forbid.size() + 1; ++m) {
    if (q != p && std::find(forbid.begin(), forbid.end(), q) == forbid.end()) return f;
    f = compose(step, f);
    q = step(q);
  }
  throw usage_error("mover search exceeded its power budget");
}

}  // namespace mixid
