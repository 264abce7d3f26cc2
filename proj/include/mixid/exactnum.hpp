#pragma once

// Exact dyadic and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mixid {

/// Raised when an operation is called outside its contract (bad input,
/// division by zero, malformed literal).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured search budget ran out.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Dyadic;

/// Canonical rational p/q with q > 0 and gcd(p, q) = 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw usage_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw usage_error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// True iff the denominator is a power of two.
  bool is_dyadic() const {
    mpz_class d = q_.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
  }
  inline Dyadic to_dyadic() const;

  /// "p/q", or "p" for integers.
  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Accepts "p", "p/q", "m/2^k" (optionally signed).
  static Rational parse(std::string_view text);

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

/// m / 2^k in canonical form (k = 0 or m odd).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class num, unsigned long exponent)
      : num_(std::move(num)), exp_(exponent) {
    normalize();
  }

  const mpz_class& numerator() const { return num_; }
  unsigned long exponent() const { return exp_; }

  Rational to_rational() const {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
    return Rational(num_, den);
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp_, b.exp_);
    return Dyadic(a.scaled(e) + b.scaled(e), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp_, b.exp_);
    return Dyadic(a.scaled(e) - b.scaled(e), e);
  }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(mpz_class(a.num_ * b.num_), a.exp_ + b.exp_);
  }
  Dyadic operator-() const { return Dyadic(mpz_class(-num_), exp_); }

  /// Multiply by 2^e (e may be negative).
  Dyadic times_pow2(long e) const {
    if (e >= 0) {
      auto ue = static_cast<unsigned long>(e);
      if (ue <= exp_) return Dyadic(num_, exp_ - ue);
      mpz_class m = num_;
      mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), ue - exp_);
      return Dyadic(m, 0);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned long>(-e));
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp_, b.exp_);
    int c = cmp(a.scaled(e), b.scaled(e));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  int sign() const { return sgn(num_); }
  std::string str() const { return to_rational().str(); }

 private:
  mpz_class scaled(unsigned long e) const {
    mpz_class m = num_;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), e - exp_);
    return m;
  }
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
    unsigned long drop = std::min(tz, exp_);
    if (drop > 0) {
      mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), drop);
      exp_ -= drop;
    }
  }

  mpz_class num_{0};
  unsigned long exp_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.str();
}

inline Dyadic Rational::to_dyadic() const {
  if (!is_dyadic()) throw usage_error("not a dyadic rational: " + str());
  unsigned long k = mpz_scan1(q_.get_den().get_mpz_t(), 0);
  return Dyadic(q_.get_num(), k);
}

namespace detail {

inline bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto slash = s.find('/');
  mpz_class num;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(s, num)) {
      throw usage_error("malformed number '" + std::string(text) + "'");
    }
    return Rational(num, 1);
  }
  std::string_view lhs = detail::trim(s.substr(0, slash));
  std::string_view rhs = detail::trim(s.substr(slash + 1));
  if (!detail::parse_integer(lhs, num)) {
    throw usage_error("malformed numerator in '" + std::string(text) + "'");
  }
  mpz_class den;
  if (rhs.size() > 2 && rhs.substr(0, 2) == "2^") {
    mpz_class k;
    if (!detail::parse_integer(rhs.substr(2), k) || k < 0 ||
        !k.fits_ulong_p()) {
      throw usage_error("malformed exponent in '" + std::string(text) + "'");
    }
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k.get_ui());
  } else if (!detail::parse_integer(rhs, den)) {
    throw usage_error("malformed denominator in '" + std::string(text) + "'");
  }
  if (den <= 0) throw usage_error("non-positive denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Dyadic m/2^k strictly inside (a, b) and not in `avoid`, with the smallest
/// k; among equal k the smallest m >= 0 first, then negative m by |m|.
inline Dyadic dyadic_in_interval(const Rational& a, const Rational& b,
                                 const std::vector<Rational>& avoid = {}) {
  if (!(a < b)) throw usage_error("dyadic_in_interval needs a < b");
  for (unsigned long k = 0;; ++k) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    // Candidates m with a < m/2^k < b: floor(a*2^k)+1 .. ceil(b*2^k)-1.
    mpq_class lo_q = a.raw() * scale;
    mpq_class hi_q = b.raw() * scale;
    mpz_class lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), lo_q.get_num_mpz_t(), lo_q.get_den_mpz_t());
    lo += 1;
    mpz_cdiv_q(hi.get_mpz_t(), hi_q.get_num_mpz_t(), hi_q.get_den_mpz_t());
    hi -= 1;
    if (lo > hi) continue;
    auto accept = [&](const mpz_class& m) {
      // Even m at k > 0 was already examined at a smaller exponent.
      if (k > 0 && mpz_even_p(m.get_mpz_t())) return false;
      Rational cand(m, scale);
      return std::find(avoid.begin(), avoid.end(), cand) == avoid.end();
    };
    // Non-negative candidates ascending, then negative ones by |m|.
    mpz_class start = lo > 0 ? lo : mpz_class(0);
    for (mpz_class m = start; m <= hi; ++m) {
      if (accept(m)) return Dyadic(m, k);
    }
    for (mpz_class m = -1; m >= lo; --m) {
      if (accept(m)) return Dyadic(m, k);
    }
  }
}

}  // namespace mixid
