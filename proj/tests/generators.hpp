#pragma once

// Hand-rolled random generators for the property suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mixid/mixid.hpp"

namespace gen {

using namespace mixid;
using Rng = std::mt19937_64;

constexpr int kCases = 1000;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Dyadic dyadic(Rng& rng, unsigned max_exp = 5) {
  unsigned k = static_cast<unsigned>(uniform(rng, 0, max_exp));
  return Dyadic(mpz_class(uniform(rng, 0, 1L << k)), k);
}

/// Sorted dyadics 0 < p_1 < ... < p_m < 1, m chosen at random.
inline std::vector<Dyadic> cut_points(Rng& rng, std::size_t max_count, unsigned max_exp = 5) {
  std::vector<Dyadic> pts;
  std::size_t m = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_count)));
  for (std::size_t i = 0; i < m * 3 && pts.size() < m; ++i) {
    Dyadic p = dyadic(rng, max_exp);
    if (p == Dyadic(0) || p == Dyadic(1)) continue;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// Partition 0 = p_0 < ... < p_len = 1 with exactly `len` panels.
inline std::vector<Dyadic> partition(Rng& rng, std::size_t len, unsigned max_exp = 6) {
  std::vector<Dyadic> pts;
  while (pts.size() + 1 < len) {
    Dyadic p = dyadic(rng, max_exp);
    if (p == Dyadic(0) || p == Dyadic(1)) continue;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.insert(pts.begin(), Dyadic(0));
  pts.push_back(Dyadic(1));
  return pts;
}

/// Union of random components between dyadic cut points.
inline IntervalRegion interval_region(Rng& rng) {
  auto cuts = cut_points(rng, 6);
  cuts.insert(cuts.begin(), Dyadic(0));
  cuts.push_back(Dyadic(1));
  std::vector<Interval> parts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (uniform(rng, 0, 1)) parts.push_back({cuts[i].to_rational(), cuts[i + 1].to_rational()});
  }
  return IntervalRegion(parts);
}

inline DiscreteRegion discrete_region(Rng& rng) {
  std::vector<Nat> e;
  for (Nat x = 0; x < 10; ++x) {
    if (uniform(rng, 0, 2) == 0) e.push_back(x);
  }
  return uniform(rng, 0, 1) ? DiscreteRegion::finite(e) : DiscreteRegion::cofinite(e);
}

/// Product of a few relative generators and their inverses.
inline PLMap plmap(Rng& rng, int factors = 3) {
  PLMap out;
  int m = static_cast<int>(uniform(rng, 0, factors));
  for (int i = 0; i < m; ++i) {
    Dyadic a = dyadic(rng, 3), b = dyadic(rng, 3);
    if (!(a < b)) continue;
    PLMap g = rel_generator(a, b, static_cast<unsigned>(uniform(rng, 0, 2)));
    out = out * (uniform(rng, 0, 1) ? g : g.inverse());
  }
  return out;
}

inline FinPerm finperm(Rng& rng, Nat points = 8) {
  std::vector<Nat> img(points);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  FinPerm out;
  for (Nat i = 0; i < points; ++i) {
    if (img[i] != i && uniform(rng, 0, 3)) out = out * FinPerm::transposition(i, img[i]);
  }
  return out;
}

template <class G>
G element(Rng& rng);
template <>
inline PLMap element<PLMap>(Rng& rng) { return plmap(rng); }
template <>
inline FinPerm element<FinPerm>(Rng& rng) { return finperm(rng); }

/// Element from a small pool of relative generators on quarters and halves,
/// or transpositions of neighbours in {0..5}. Supports overlap rarely, so
/// words built from them are seldom explicitly oscillating.
template <class G>
G pool_element(Rng& rng);
template <>
inline PLMap pool_element<PLMap>(Rng& rng) {
  long k = uniform(rng, 1, 2);
  long i = uniform(rng, 0, (1L << k) - 1);
  PLMap g = rel_generator(Dyadic(mpz_class(i), k), Dyadic(mpz_class(i + 1), k), static_cast<unsigned>(uniform(rng, 0, 1)));
  return uniform(rng, 0, 1) ? g : g.inverse();
}
template <>
inline FinPerm pool_element<FinPerm>(Rng& rng) {
  Nat a = static_cast<Nat>(uniform(rng, 0, 5));
  return FinPerm::transposition(a, a + 1);
}

/// Word alternating variable syllables and pool constants.
template <class G>
Word<G> pool_word(Rng& rng, int arity, int blocks) {
  std::vector<Syllable<G>> raw;
  int m = static_cast<int>(uniform(rng, 1, blocks));
  for (int i = 0; i < m; ++i) {
    long p = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
    raw.push_back({static_cast<int>(uniform(rng, 1, arity)), p, G{}});
    raw.push_back({0, 0, pool_element<G>(rng)});
  }
  return Word<G>::reduce(arity, raw);
}

/// Random word with at most `syllables` raw syllables, reduced on construction.
template <class G>
Word<G> word(Rng& rng, int arity, int syllables = 8, int max_power = 2) {
  std::vector<Syllable<G>> raw;
  int m = static_cast<int>(uniform(rng, 0, syllables));
  for (int i = 0; i < m; ++i) {
    if (uniform(rng, 0, 2)) {
      long p = uniform(rng, 1, max_power) * (uniform(rng, 0, 1) ? 1 : -1);
      raw.push_back({static_cast<int>(uniform(rng, 1, arity)), p, G{}});
    } else {
      raw.push_back({0, 0, element<G>(rng)});
    }
  }
  return Word<G>::reduce(arity, raw);
}

}  // namespace gen
