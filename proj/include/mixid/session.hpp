#pragma once

// Session files: a small definition language for constants and words.
//
//   space interval;
//   const a = x[0,1/2]_0;
//   word w1[1] = y1 * x1 * y1^-1 * x2 * y1^2 * x1^-1;

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "mixid/words.hpp"

namespace mixid {

/// Source-located diagnostic.
class parse_error : public usage_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& msg)
      : usage_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

enum class Space { interval, discrete };

inline const char* space_name(Space s) { return s == Space::interval ? "interval" : "discrete"; }

template <class G>
struct NamedWord {
  std::string name;
  Word<G> word;
};

template <class G>
struct Definitions {
  std::vector<std::pair<std::string, G>> constants;
  std::vector<NamedWord<G>> words;

  const G* constant(const std::string& name) const {
    for (const auto& [n, g] : constants) {
      if (n == name) return &g;
    }
    return nullptr;
  }
  const Word<G>* word(const std::string& name) const {
    for (const auto& w : words) {
      if (w.name == name) return &w.word;
    }
    return nullptr;
  }
  friend bool operator==(const Definitions& a, const Definitions& b) {
    if (a.constants != b.constants || a.words.size() != b.words.size()) return false;
    for (std::size_t i = 0; i < a.words.size(); ++i) {
      if (a.words[i].name != b.words[i].name || !(a.words[i].word == b.words[i].word)) return false;
    }
    return true;
  }
};

struct Session {
  Space space = Space::interval;
  Definitions<PLMap> interval;
  Definitions<FinPerm> discrete;

  template <class G>
  const Definitions<G>& defs() const {
    if constexpr (std::is_same_v<G, PLMap>) {
      return interval;
    } else {
      return discrete;
    }
  }
  template <class G>
  Definitions<G>& defs() {
    if constexpr (std::is_same_v<G, PLMap>) {
      return interval;
    } else {
      return discrete;
    }
  }
  friend bool operator==(const Session& a, const Session& b) {
    return a.space == b.space && a.interval == b.interval && a.discrete == b.discrete;
  }
};

namespace detail {

/// Character scanner with line/column tracking and comment skipping.
class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what + found());
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        advance();
      }
    }
    return std::string(src_.substr(start, pos_ - start));
  }
  /// Optionally signed decimal integer.
  std::string integer(bool allow_sign) {
    skip_space();
    std::size_t start = pos_;
    if (allow_sign && pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) advance();
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    if (pos_ == digits) fail("expected an integer" + found());
    return std::string(src_.substr(start, pos_ - start));
  }
  /// p, p/q or p/2^k.
  Rational rational() {
    auto [l, c] = position();
    std::string text = integer(true);
    if (accept('/')) {
      text += "/" + integer(false);
      if (accept('^')) text += "^" + integer(false);
    }
    try {
      return Rational::parse(text);
    } catch (const usage_error& e) {
      throw parse_error(l, c, e.what());
    }
  }
  std::pair<std::size_t, std::size_t> position() {
    skip_space();
    return {line_, col_};
  }
  [[noreturn]] void fail(const std::string& msg) {
    auto [l, c] = position();
    throw parse_error(l, c, msg);
  }
  std::string found() {
    skip_space();
    if (pos_ >= src_.size()) return ", found end of input";
    return std::string(", found '") + src_[pos_] + "'";
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline unsigned small_index(Scanner& sc, std::string_view digits, unsigned limit, const char* what) {
  if (!all_digits(digits) || digits.size() > 6) sc.fail(std::string("malformed ") + what);
  unsigned long v = std::stoul(std::string(digits));
  if (v > limit) sc.fail(std::string(what) + " " + std::string(digits) + " is too large");
  return static_cast<unsigned>(v);
}

/// Recursive-descent expression parser; words of the given arity over G.
template <class G>
class ExprParser {
 public:
  ExprParser(Scanner& sc, const Definitions<G>& defs, int arity)
      : sc_(sc), defs_(defs), arity_(arity) {}

  Word<G> expr() {
    Word<G> out = factor();
    for (;;) {
      sc_.skip_space();
      auto [line, col] = sc_.position();
      if (!sc_.accept('*')) break;
      sc_.skip_space();
      if (sc_.at_end() || sc_.peek() == ';' || sc_.peek() == ')' || sc_.peek() == '*') {
        throw parse_error(line, col, "dangling '*' with no right operand" + sc_.found());
      }
      out = multiply(out, factor());
    }
    return out;
  }

 private:
  Word<G> factor() {
    Word<G> base = atom();
    while (sc_.accept('^')) {
      std::string k = sc_.integer(true);
      long e = 0;
      try {
        e = std::stol(k);
      } catch (const std::exception&) {
        sc_.fail("exponent " + k + " out of range");
      }
      if (e > 4096 || e < -4096) sc_.fail("exponent " + k + " out of range");
      base = power(base, e);
    }
    return base;
  }

  Word<G> constant(const G& g) { return Word<G>::constant(arity_, g); }

  Word<G> atom() {
    auto [line, col] = sc_.position();
    if (sc_.accept('(')) {
      Word<G> inner = expr();
      sc_.expect(')', "')'");
      return inner;
    }
    char c = sc_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (sc_.integer(false) != "1") throw parse_error(line, col, "the only numeric atom is 1");
      return Word<G>(arity_);
    }
    std::string id = sc_.identifier();
    if (id.empty()) sc_.fail("expected an expression" + sc_.found());
    if (id == "pl") return constant(pl_literal(line, col));
    if (id == "perm") return constant(perm_literal(line, col));
    if (id == "x") return constant(relative_generator(line, col));
    if (id.size() >= 2 && id[0] == 'x' && (all_digits(id.substr(1)) ||
                                           (id[1] == '_' && all_digits(id.substr(2))))) {
      std::string_view digits = std::string_view(id).substr(id[1] == '_' ? 2 : 1);
      unsigned n = small_index(sc_, digits, 4096, "generator index");
      return constant(interval_only(line, col, [&] { return generator(n); }));
    }
    if (id.size() >= 2 && id[0] == 'y' && all_digits(id.substr(1))) {
      unsigned i = small_index(sc_, std::string_view(id).substr(1), 9, "variable index");
      if (i < 1 || static_cast<int>(i) > arity_) {
        throw parse_error(line, col,
                          "variable " + id + " exceeds the arity " + std::to_string(arity_));
      }
      return Word<G>::variable(arity_, static_cast<int>(i));
    }
    if (const G* g = defs_.constant(id)) return constant(*g);
    if (const Word<G>* w = defs_.word(id)) {
      if (w->arity() > arity_) {
        throw parse_error(line, col, "word " + id + " has arity " + std::to_string(w->arity()) +
                                         ", more than " + std::to_string(arity_));
      }
      Word<G> out(arity_);
      for (const auto& s : w->syllables()) out.push(s);
      return out;
    }
    throw parse_error(line, col, "unknown name '" + id + "'");
  }

  template <class F>
  G interval_only(std::size_t line, std::size_t col, F make) {
    if constexpr (std::is_same_v<G, PLMap>) {
      try {
        return make();
      } catch (const usage_error& e) {
        throw parse_error(line, col, e.what());
      }
    } else {
      throw parse_error(line, col, "piecewise-linear constants need 'space interval'");
    }
  }

  G pl_literal(std::size_t line, std::size_t col) {
    std::vector<std::pair<Rational, Rational>> pts;
    sc_.expect('{', "'{' after pl");
    while (!sc_.accept('}')) {
      sc_.expect('(', "'(' or '}'");
      Rational a = sc_.rational();
      sc_.expect(',', "','");
      Rational b = sc_.rational();
      sc_.expect(')', "')'");
      pts.emplace_back(a, b);
    }
    if constexpr (std::is_same_v<G, PLMap>) {
      try {
        std::vector<PLMap::Breakpoint> bp;
        for (const auto& [a, b] : pts) {
          bp.emplace_back(detail::as_dyadic(a, "breakpoint"), detail::as_dyadic(b, "breakpoint"));
        }
        return PLMap(std::move(bp));
      } catch (const usage_error& e) {
        throw parse_error(line, col, e.what());
      }
    } else {
      throw parse_error(line, col, "piecewise-linear constants need 'space interval'");
    }
  }

  G perm_literal(std::size_t line, std::size_t col) {
    std::vector<std::vector<Nat>> cycles;
    sc_.expect('(', "'(' after perm");
    while (!sc_.accept(')')) {
      sc_.expect('(', "'(' to open a cycle");
      std::vector<Nat> cyc;
      while (!sc_.accept(')')) {
        sc_.accept(',');
        if (sc_.peek() == ')') continue;
        auto [l, c] = sc_.position();
        std::string d = sc_.integer(false);
        try {
          std::size_t used = 0;
          unsigned long long v = std::stoull(d, &used);
          cyc.push_back(static_cast<Nat>(v));
        } catch (const std::exception&) {
          throw parse_error(l, c, "point " + d + " out of range");
        }
      }
      cycles.push_back(std::move(cyc));
    }
    if constexpr (std::is_same_v<G, FinPerm>) {
      try {
        return FinPerm::from_cycles(cycles);
      } catch (const usage_error& e) {
        throw parse_error(line, col, e.what());
      }
    } else {
      throw parse_error(line, col, "permutation constants need 'space discrete'");
    }
  }

  G relative_generator(std::size_t line, std::size_t col) {
    sc_.expect('[', "'[' or a generator index after x");
    Rational a = sc_.rational();
    sc_.expect(',', "','");
    Rational b = sc_.rational();
    sc_.expect(']', "']'");
    std::string sub = sc_.identifier();
    if (sub.size() < 2 || sub[0] != '_') sc_.fail("expected '_<index>' after x[a,b]");
    unsigned n = small_index(sc_, std::string_view(sub).substr(1), 4096, "generator index");
    if (!a.is_dyadic() || !b.is_dyadic()) {
      throw parse_error(line, col, "endpoints of x[a,b] must be dyadic");
    }
    return interval_only(line, col, [&] { return rel_generator(a, b, n); });
  }

  Scanner& sc_;
  const Definitions<G>& defs_;
  int arity_;
};

template <class G>
void check_fresh(const Definitions<G>& defs, const std::string& name, std::size_t line,
                 std::size_t col) {
  if (defs.constant(name) || defs.word(name)) {
    throw parse_error(line, col, "'" + name + "' is already defined");
  }
  bool reserved = name == "pl" || name == "perm" || name == "x" || name == "space" ||
                  name == "const" || name == "word";
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
    std::string_view rest = std::string_view(name).substr(name[1] == '_' ? 2 : 1);
    reserved = reserved || all_digits(rest);
  }
  if (reserved) throw parse_error(line, col, "'" + name + "' is a reserved name");
}

template <class G>
void parse_statements(Scanner& sc, Definitions<G>& defs) {
  while (!sc.at_end()) {
    auto [line, col] = sc.position();
    std::string kw = sc.identifier();
    if (kw == "space") throw parse_error(line, col, "only one space declaration is allowed");
    if (kw != "const" && kw != "word") {
      throw parse_error(line, col, "expected 'const' or 'word'" +
                                       (kw.empty() ? sc.found() : ", found '" + kw + "'"));
    }
    auto [nl, nc] = sc.position();
    std::string name = sc.identifier();
    if (name.empty()) sc.fail("expected a name" + sc.found());
    check_fresh(defs, name, nl, nc);
    if (kw == "const") {
      sc.expect('=', "'='");
      auto [el, ec] = sc.position();
      ExprParser<G> p(sc, defs, 1);
      Word<G> w = p.expr();
      if (w.has_variables()) throw parse_error(el, ec, "constant '" + name + "' uses a variable");
      defs.constants.emplace_back(name, constants_product(w));
    } else {
      sc.expect('[', "'[' and the arity");
      unsigned t = small_index(sc, sc.integer(false), 9, "arity");
      if (t < 1) sc.fail("arity must be between 1 and 9");
      sc.expect(']', "']'");
      sc.expect('=', "'='");
      ExprParser<G> p(sc, defs, static_cast<int>(t));
      defs.words.push_back({name, p.expr()});
    }
    sc.expect(';', "';'");
  }
}

}  // namespace detail

inline Session parse_session(std::string_view src) {
  detail::Scanner sc(src);
  Session s;
  auto [line, col] = sc.position();
  std::string kw = sc.identifier();
  if (kw != "space") {
    throw parse_error(line, col, "a session must start with 'space interval;' or 'space discrete;'");
  }
  auto [sl, scol] = sc.position();
  std::string sp = sc.identifier();
  if (sp == "interval") {
    s.space = Space::interval;
  } else if (sp == "discrete") {
    s.space = Space::discrete;
  } else {
    throw parse_error(sl, scol, "unknown space '" + sp + "'");
  }
  sc.expect(';', "';'");
  if (s.space == Space::interval) {
    detail::parse_statements(sc, s.interval);
  } else {
    detail::parse_statements(sc, s.discrete);
  }
  return s;
}

/// A standalone expression over the session's definitions.
template <class G>
Word<G> parse_expression(std::string_view src, const Definitions<G>& defs, int arity) {
  detail::Scanner sc(src);
  detail::ExprParser<G> p(sc, defs, arity);
  Word<G> w = p.expr();
  if (!sc.at_end()) sc.fail("unexpected trailing input" + sc.found());
  return w;
}

/// A standalone constant expression.
template <class G>
G parse_constant(std::string_view src, const Definitions<G>& defs) {
  Word<G> w = parse_expression(src, defs, 1);
  if (w.has_variables()) throw usage_error("constant expression uses a variable: " + std::string(src));
  return constants_product(w);
}

namespace detail {

template <class G>
void print_definitions(std::string& out, const Definitions<G>& defs) {
  for (const auto& [name, g] : defs.constants) {
    out += "const " + name + " = " + group_traits<G>::str(g) + ";\n";
  }
  for (const auto& w : defs.words) {
    out += "word " + w.name + "[" + std::to_string(w.word.arity()) + "] = " + to_string(w.word) +
           ";\n";
  }
}

}  // namespace detail

/// Canonical text; constants inside words are printed as literals.
inline std::string print_session(const Session& s) {
  std::string out = std::string("space ") + space_name(s.space) + ";\n";
  if (s.space == Space::interval) {
    detail::print_definitions(out, s.interval);
  } else {
    detail::print_definitions(out, s.discrete);
  }
  return out;
}

}  // namespace mixid
