#pragma once

// Words with constants: reduced elements of the free product of a free group
// on y1..yt with the acting group G.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "mixid/group.hpp"

namespace mixid {

template <class G>
struct Syllable {
  int var = 0;     // 1..t for a variable, 0 for a constant
  long power = 0;  // variables only
  G constant{};    // constants only

  bool is_var() const { return var > 0; }
  friend bool operator==(const Syllable& a, const Syllable& b) {
    if (a.var != b.var) return false;
    return a.is_var() ? a.power == b.power : a.constant == b.constant;
  }
};

template <class G>
class Word {
 public:
  using traits = group_traits<G>;

  explicit Word(int arity = 1) : arity_(arity) {
    if (arity < 1) throw usage_error("word arity must be positive");
  }

  static Word variable(int arity, int index, long power = 1) {
    if (index < 1 || index > arity) {
      throw usage_error("variable y" + std::to_string(index) + " exceeds arity " +
                        std::to_string(arity));
    }
    return reduce(arity, {Syllable<G>{index, power, G{}}});
  }
  static Word constant(int arity, const G& c) { return reduce(arity, {Syllable<G>{0, 0, c}}); }

  /// Free-product reduction: merge neighbours of the same kind, drop trivial ones.
  static Word reduce(int arity, const std::vector<Syllable<G>>& raw) {
    Word w(arity);
    for (const auto& s : raw) w.push(s);
    return w;
  }

  int arity() const { return arity_; }
  const std::vector<Syllable<G>>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  bool has_variables() const {
    for (const auto& s : syl_) {
      if (s.is_var()) return true;
    }
    return false;
  }
  /// Word lies in G (no variables).
  bool is_constant() const { return !has_variables(); }
  /// Word lies in the free group (no constants).
  bool is_free() const { return constant_count() == 0; }
  std::size_t constant_count() const {
    std::size_t c = 0;
    for (const auto& s : syl_) c += s.is_var() ? 0 : 1;
    return c;
  }
  /// Number of single variable letters.
  std::size_t letter_count() const {
    std::size_t c = 0;
    for (const auto& s : syl_) c += s.is_var() ? static_cast<std::size_t>(std::labs(s.power)) : 0;
    return c;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.arity_ == b.arity_ && a.syl_ == b.syl_;
  }

  void push(const Syllable<G>& s) {
    if (s.is_var() ? s.power == 0 : s.constant.is_identity()) return;
    if (s.is_var() && (s.var < 1 || s.var > arity_)) {
      throw usage_error("variable y" + std::to_string(s.var) + " exceeds arity " +
                        std::to_string(arity_));
    }
    if (!syl_.empty()) {
      auto& top = syl_.back();
      if (top.is_var() && s.is_var() && top.var == s.var) {
        top.power += s.power;
        if (top.power == 0) syl_.pop_back();
        return;
      }
      if (!top.is_var() && !s.is_var()) {
        top.constant = traits::compose(top.constant, s.constant);
        if (top.constant.is_identity()) syl_.pop_back();
        return;
      }
    }
    syl_.push_back(s);
  }

 private:
  int arity_;
  std::vector<Syllable<G>> syl_;
};

template <class G>
Word<G> multiply(const Word<G>& a, const Word<G>& b) {
  if (a.arity() != b.arity()) throw usage_error("multiplying words of different arity");
  Word<G> out = a;
  for (const auto& s : b.syllables()) out.push(s);
  return out;
}

template <class G>
Word<G> invert(const Word<G>& a) {
  Word<G> out(a.arity());
  const auto& s = a.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    Syllable<G> t = *it;
    if (t.is_var()) {
      t.power = -t.power;
    } else {
      t.constant = group_traits<G>::inverse(t.constant);
    }
    out.push(t);
  }
  return out;
}

/// by · a · by^-1
template <class G>
Word<G> conjugate(const Word<G>& a, const Word<G>& by) {
  return multiply(multiply(by, a), invert(by));
}

template <class G>
Word<G> power(const Word<G>& a, long k) {
  Word<G> base = k < 0 ? invert(a) : a;
  Word<G> out(a.arity());
  for (long i = 0; i < std::labs(k); ++i) out = multiply(out, base);
  return out;
}

/// Value of the word under y_i := tuple[i-1].
template <class G>
G substitute(const Word<G>& w, const std::vector<G>& tuple) {
  using T = group_traits<G>;
  if (static_cast<int>(tuple.size()) != w.arity()) {
    throw usage_error("tuple length " + std::to_string(tuple.size()) + " does not match arity " +
                      std::to_string(w.arity()));
  }
  G out = T::identity();
  for (const auto& s : w.syllables()) {
    if (s.is_var()) {
      const G& g = tuple[static_cast<std::size_t>(s.var - 1)];
      G step = s.power < 0 ? T::inverse(g) : g;
      for (long i = 0; i < std::labs(s.power); ++i) out = T::compose(out, step);
    } else {
      out = T::compose(out, s.constant);
    }
  }
  return out;
}

/// DSL text, constants printed as literals: y1*pl{...}*y1^-1. Identity is "1".
template <class G>
std::string to_string(const Word<G>& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += "*";
    if (s.is_var()) {
      out += "y" + std::to_string(s.var);
      if (s.power != 1) out += "^" + std::to_string(s.power);
    } else {
      out += group_traits<G>::str(s.constant);
    }
  }
  return out;
}

/// w = u_n v_n ... u_1 v_1 after an optional conjugation moving a trailing
/// variable block to the front. For words without constants n = 0 and the
/// whole word is u[0].
template <class G>
struct Form11 {
  Word<G> original;
  Word<G> normalized;  // conjugator · original · conjugator^-1
  Word<G> conjugator;
  std::vector<Word<G>> u;  // u[j] is u_{j+1}; u_n may be empty
  std::vector<G> v;        // v[j] is v_{j+1}

  std::size_t n() const { return v.size(); }
  bool is_free() const { return v.empty(); }

  Word<G> reassemble() const {
    Word<G> out(normalized.arity());
    for (std::size_t j = u.size(); j-- > 0;) {
      out = multiply(out, u[j]);
      if (j < v.size()) out.push(Syllable<G>{0, 0, v[j]});
    }
    return out;
  }
};

template <class G>
Form11<G> to_form11(const Word<G>& w) {
  if (w.is_identity()) throw usage_error("the identity word has no normal form");
  if (w.is_constant()) throw usage_error("constant word " + to_string(w) + " has no normal form");
  Form11<G> f{w, w, Word<G>(w.arity()), {}, {}};
  const auto& syl = w.syllables();
  if (!w.is_free() && syl.back().is_var()) {
    Word<G> tail(w.arity());
    std::size_t i = syl.size();
    while (i > 0 && syl[i - 1].is_var()) --i;
    for (std::size_t k = i; k < syl.size(); ++k) tail.push(syl[k]);
    f.conjugator = tail;
    f.normalized = conjugate(w, tail);
  }
  if (f.normalized.is_free()) {
    f.u.push_back(f.normalized);
    return f;
  }
  // Scan right to left: each constant closes the variable block to its left.
  const auto& ns = f.normalized.syllables();
  Word<G> block(w.arity());
  std::vector<Syllable<G>> pending;
  for (std::size_t k = ns.size(); k-- > 0;) {
    if (ns[k].is_var()) {
      pending.insert(pending.begin(), ns[k]);
    } else {
      if (!f.v.empty()) f.u.push_back(Word<G>::reduce(w.arity(), pending));
      pending.clear();
      f.v.push_back(ns[k].constant);
    }
  }
  f.u.push_back(Word<G>::reduce(w.arity(), pending));
  return f;
}

/// Like to_form11, but a non-trivial constant word c is accepted as the
/// one-block form with an empty variable part (O_c = supp(c)).
template <class G>
Form11<G> to_form11_any(const Word<G>& w) {
  if (!w.is_identity() && w.is_constant()) {
    const int t = w.arity();
    return Form11<G>{w, w, Word<G>(t), {Word<G>(t)}, {w.syllables().front().constant}};
  }
  return to_form11(w);
}

struct Letter {
  int var;   // 1..t
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Single-letter expansion: letters[j] lists u_{j+1} in application order
/// (rightmost letter first); L[j] = ℓ_1 + ... + ℓ_{j+1}.
template <class G>
struct Form12 {
  Form11<G> form;
  std::vector<std::vector<Letter>> letters;
  std::vector<std::size_t> ell;
  std::vector<std::size_t> L;

  std::size_t blocks() const { return letters.size(); }
  std::size_t length() const { return L.empty() ? 0 : L.back(); }
  /// Constant of block j (0-based), identity for free words.
  G constant(std::size_t j) const {
    return form.is_free() ? group_traits<G>::identity() : form.v[j];
  }
};

template <class G>
Form12<G> to_form12(const Form11<G>& f) {
  Form12<G> out{f, {}, {}, {}};
  std::size_t total = 0;
  for (const auto& u : f.u) {
    std::vector<Letter> ls;
    const auto& s = u.syllables();
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      int sign = it->power < 0 ? -1 : 1;
      for (long i = 0; i < std::labs(it->power); ++i) ls.push_back({it->var, sign});
    }
    total += ls.size();
    out.ell.push_back(ls.size());
    out.L.push_back(total);
    out.letters.push_back(std::move(ls));
  }
  return out;
}

/// ((w)_r, [w]_r): the final segment with r letters and the initial segment
/// with [w]_r · (w)_r = w.
template <class G>
std::pair<Word<G>, Word<G>> segments(const Form12<G>& f, std::size_t r) {
  const int t = f.form.normalized.arity();
  if (r > f.length()) throw usage_error("segment index exceeds word length");
  Word<G> tail(t);
  if (r > 0) {
    std::size_t d = 0;
    while (f.L[d] < r) ++d;
    std::size_t s = r - (d == 0 ? 0 : f.L[d - 1]);
    std::vector<Syllable<G>> raw;
    for (std::size_t j = 0; j <= d; ++j) {
      std::size_t take = j == d ? s : f.ell[j];
      if (!f.form.is_free()) raw.push_back({0, 0, f.form.v[j]});
      for (std::size_t i = 0; i < take; ++i) {
        // Prepend: letters further along are further left.
        raw.push_back({f.letters[j][i].var, f.letters[j][i].sign, {}});
      }
    }
    std::vector<Syllable<G>> rev(raw.rbegin(), raw.rend());
    tail = Word<G>::reduce(t, rev);
  }
  Word<G> head = multiply(f.form.normalized, invert(tail));
  return {tail, head};
}

/// v_n ∘ ... ∘ v_1.
template <class G>
G product_of_constants(const Form11<G>& f) {
  G out = group_traits<G>::identity();
  for (const auto& c : f.v) out = group_traits<G>::compose(c, out);
  return out;
}

/// Product of all constants of a word, in order; for words not needing
/// normalization this agrees with product_of_constants(to_form11(w)).
template <class G>
G constants_product(const Word<G>& w) {
  G out = group_traits<G>::identity();
  for (const auto& s : w.syllables()) {
    if (!s.is_var()) out = group_traits<G>::compose(out, s.constant);
  }
  return out;
}

}  // namespace mixid
