#pragma once

// Worked example words shared by the suites.

#include <vector>

#include "mixid/mixid.hpp"

namespace fx {

using namespace mixid;
using W = Word<PLMap>;
using P = Word<FinPerm>;

inline Rational q(long a, long b = 1) { return Rational(a, b); }
inline Dyadic d(long m, unsigned long k) { return Dyadic(mpz_class(m), k); }
inline PLMap xr(const Dyadic& a, const Dyadic& b, unsigned n) { return rel_generator(a, b, n); }
inline PLMap x(unsigned n) { return generator(n); }
inline PLMap inv(const PLMap& f) { return f.inverse(); }

inline W y(int arity, int i, long p = 1) { return W::variable(arity, i, p); }
inline W c(int arity, const PLMap& g) { return W::constant(arity, g); }

inline W cat(std::initializer_list<W> parts) {
  W out(parts.begin()->arity());
  for (const auto& p : parts) out = multiply(out, p);
  return out;
}

inline W w1() { return cat({y(1, 1), c(1, x(1)), y(1, 1, -1), c(1, x(2)), y(1, 1, 2), c(1, inv(x(1)))}); }

inline W w2() {
  const Dyadic h = d(1, 1);
  return cat({c(1, inv(xr(0, h, 0))), y(1, 1), c(1, inv(xr(h, 1, 1))), y(1, 1, -1),
              c(1, xr(0, h, 1)), y(1, 1), c(1, inv(xr(0, h, 2)))});
}

inline W w3() { return cat({y(1, 1), c(1, x(1)), y(1, 1, -1), c(1, inv(x(1)))}); }

inline W w4() {
  return cat({y(1, 1), c(1, x(1)), y(1, 1, -1), c(1, xr(0, d(1, 1), 0)), y(1, 1, 2), c(1, inv(x(1)))});
}

inline W w5() {
  const PLMap a = xr(0, d(1, 1), 0);
  return cat({y(1, 1, -1), c(1, x(1)), y(1, 1), c(1, a), y(1, 1, -1), c(1, inv(x(1))), y(1, 1), c(1, inv(a))});
}

inline W commutator() { return cat({y(2, 1), y(2, 2), y(2, 1, -1), y(2, 2, -1)}); }

/// Constants of the two-variable level-2 example, with v = x0 and v' = x0^2
/// placed on quarters of [0,1].
struct W6 {
  PLMap v1, v2, v3, v4, v5, v6, v7, v12;
  W6() {
    auto Q = [](long i) { return xr(d(i, 2), d(i + 1, 2), 0); };
    auto Q2 = [&](long i) { return power(Q(i), 2); };
    const PLMap h = xr(0, d(1, 1), 1) * xr(d(1, 1), 1, 1);
    v1 = Q2(0) * Q(1) * Q(2) * Q(3);
    v6 = Q2(0) * inv(Q(1)) * inv(Q(2)) * Q(3);
    v7 = Q(0) * Q2(1) * Q(2) * Q(3);
    v12 = inv(Q(0)) * Q2(1) * Q(2) * inv(Q(3));
    v2 = inv(Q(0) * Q(2));
    v3 = inv(h);
    v4 = Q(0) * Q(2);
    v5 = h;
  }
  W word() const {
    auto C = [](const PLMap& g) { return c(2, g); };
    auto half = [&](const PLMap& tail) {
      return cat({y(2, 2, -1), y(2, 1, -1), C(v5), y(2, 1), C(v4), y(2, 1, -1), C(v3), y(2, 1), C(v2),
                  y(2, 2), C(tail)});
    };
    return cat({C(v12), half(v7), y(2, 1), y(2, 2), C(v6), half(v1)});
  }
};

inline W w6() { return W6().word(); }

}  // namespace fx
