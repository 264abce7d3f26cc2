// mixid: classify words with constants and solve w(y) != 1 from session files.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixid/report.hpp"

namespace {

using namespace mixid;

enum Exit { ok = 0, negative = 1, failure = 2 };

struct Common {
  std::string format = "text";
  std::string out;
};

struct Emitter {
  const Common& opt;
  void operator()(const std::string& text, const json& machine) const {
    std::string body = opt.format == "machine" ? machine.dump(2) + "\n" : text;
    if (opt.out.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(opt.out);
    if (!f) throw usage_error("cannot write " + opt.out);
    f << body;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw usage_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Session load(const std::string& path) {
  try {
    return parse_session(read_file(path));
  } catch (const parse_error& e) {
    throw usage_error(path + ": " + e.what());
  }
}

template <class G>
const Word<G>& lookup_word(const Definitions<G>& defs, const std::string& name) {
  const Word<G>* w = defs.word(name);
  if (!w) throw usage_error("unknown word '" + name + "'");
  return *w;
}

template <class G>
int classify_cmd(const Definitions<G>& defs, std::vector<std::string> names, bool full,
                 const Common& opt) {
  if (names.empty()) {
    for (const auto& w : defs.words) names.push_back(w.name);
  }
  if (names.empty()) throw usage_error("the session defines no words");
  TransitionOptions topts;
  topts.full_tree = full;
  std::string text;
  json items = json::array();
  int code = ok;
  for (const auto& n : names) {
    Classification<G> c = classify(lookup_word(defs, n), topts);
    text += classification_text(n, c);
    items.push_back(classification_json(n, c));
    if (c.verdict == Verdict::Rigid || c.verdict == Verdict::Degenerate) code = negative;
  }
  json doc{{"format_version", format_version}, {"kind", "classifications"}, {"items", items}};
  Emitter{opt}(text, doc);
  return code;
}

template <class G>
int emit_certificate(Certificate<G> c, const std::vector<std::string>& names, const Common& opt) {
  c.checks = verify(c).checks;
  VerifyReport r{c.checks};
  if (!r.ok()) {
    std::cerr << "error: solver output failed verification\n" << verify_text(c.checks);
    return failure;
  }
  Emitter{opt}(certificate_text(c, names), certificate_json(c));
  return ok;
}

template <class G>
int solve_cmd(const Definitions<G>& defs, const std::string& name, const std::string& region,
              const std::string& epsilon, bool full, const Common& opt) {
  const Word<G>& w = lookup_word(defs, name);
  SolveOptions so;
  if (!epsilon.empty()) so.epsilon = Rational::parse(epsilon);
  try {
    if constexpr (group_traits<G>::metric) {
      region_t<G> r = region.empty() ? group_traits<G>::ambient() : region_t<G>::parse(region);
      return emit_certificate(solve_oscillating(w, r, so, full), {name}, opt);
    } else {
      if (!region.empty()) throw usage_error("--region is not supported for the discrete space");
      return emit_certificate(solve_discrete(w, so), {name}, opt);
    }
  } catch (const unsolved& e) {
    std::cerr << name << ": not solved: " << e.what() << "\n";
    return negative;
  }
}

int solve_system_cmd(const Definitions<PLMap>& defs, const std::vector<std::string>& names,
                     const std::vector<std::string>& regions, const std::string& epsilon,
                     const Common& opt) {
  std::vector<Word<PLMap>> ws;
  for (const auto& n : names) ws.push_back(lookup_word(defs, n));
  std::vector<std::optional<IntervalRegion>> rs;
  for (const auto& r : regions) {
    rs.push_back(r == "-" ? std::nullopt : std::optional<IntervalRegion>(IntervalRegion::parse(r)));
  }
  if (!rs.empty() && rs.size() != ws.size()) throw usage_error("give one --region per word (or '-')");
  SolveOptions so;
  if (!epsilon.empty()) so.epsilon = Rational::parse(epsilon);
  try {
    return emit_certificate(solve_system(ws, rs, so), names, opt);
  } catch (const unsolved& e) {
    std::cerr << "system not solved: " << e.what() << "\n";
    return negative;
  }
}

template <class G>
int verify_cmd(const json& doc, const Common& opt) {
  Certificate<G> c = certificate_from_json<G>(doc);
  VerifyReport r = verify(c);
  json out{{"format_version", format_version}, {"kind", "verification"}, {"passed", r.ok()},
           {"checks", checks_json(r.checks)}};
  Emitter{opt}(verify_text(r.checks) + (r.ok() ? "verified\n" : "NOT verified\n"), out);
  return r.ok() ? ok : negative;
}

template <class G>
int eval_cmd(const Definitions<G>& defs, const std::string& expr,
             const std::vector<std::string>& sets, const Common& opt) {
  using T = group_traits<G>;
  const Word<G>* named = defs.word(expr);
  int arity = named ? named->arity() : 9;
  std::vector<G> tuple(static_cast<std::size_t>(arity), T::identity());
  std::vector<bool> bound(tuple.size(), false);
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq < 2 || s[0] != 'y') throw usage_error("--set expects yI=EXPR");
    std::size_t i = std::stoul(s.substr(1, eq - 1));
    if (i < 1 || i > tuple.size()) throw usage_error("variable " + s.substr(0, eq) + " exceeds the arity");
    tuple[i - 1] = parse_constant<G>(s.substr(eq + 1), defs);
    bound[i - 1] = true;
  }
  Word<G> w = named ? *named : parse_expression<G>(expr, defs, arity);
  if (!named) {
    int used = 0;
    for (const auto& syl : w.syllables()) used = std::max(used, syl.var);
    tuple.resize(static_cast<std::size_t>(std::max(used, 1)));
    w = parse_expression<G>(expr, defs, std::max(used, 1));
  }
  G value = substitute(w, tuple);
  json doc{{"format_version", format_version},
           {"kind", "evaluation"},
           {"word", to_string(w)},
           {"value", T::str(value)},
           {"support", T::support(value).str()},
           {"identity", value.is_identity()}};
  std::string text = to_string(w) + " = " + T::str(value) + "\nsupport: " + T::support(value).str() +
                     (value.is_identity() ? "\n(identity)\n" : "\n");
  Emitter{opt}(text, doc);
  return ok;
}

template <class G>
int show_cmd(const Definitions<G>& defs, std::vector<std::string> names, const Common& opt) {
  using T = group_traits<G>;
  if (names.empty()) {
    for (const auto& [n, g] : defs.constants) names.push_back(n);
    for (const auto& w : defs.words) names.push_back(w.name);
  }
  std::string text;
  json items = json::array();
  for (const auto& n : names) {
    if (const G* g = defs.constant(n)) {
      text += "const " + n + " = " + T::str(*g) + "\n  support: " + T::support(*g).str() + "\n";
      items.push_back({{"name", n}, {"kind", "const"}, {"value", T::str(*g)}, {"support", T::support(*g).str()}});
      continue;
    }
    const Word<G>& w = lookup_word(defs, n);
    text += "word " + n + "[" + std::to_string(w.arity()) + "] = " + to_string(w) + "\n";
    json item{{"name", n}, {"kind", "word"}, {"arity", w.arity()}, {"text", to_string(w)}};
    if (w.has_variables()) {
      Form11<G> f = to_form11(w);
      Form12<G> f12 = to_form12(f);
      text += "  normalized: " + to_string(f.normalized) + "\n  length: " + std::to_string(f12.length()) + "\n";
      json cs = json::array();
      for (std::size_t i = 0; i < f.v.size(); ++i) {
        text += "  c" + std::to_string(i + 1) + " = " + T::str(f.v[i]) + "\n    support: " + T::support(f.v[i]).str() + "\n";
        cs.push_back({{"value", T::str(f.v[i])}, {"support", T::support(f.v[i]).str()}});
      }
      G prod = product_of_constants(f);
      text += "  product of constants: " + T::str(prod) + "\n";
      item["normalized"] = to_string(f.normalized);
      item["length"] = f12.length();
      item["constants"] = cs;
      item["product_of_constants"] = T::str(prod);
    }
    items.push_back(item);
  }
  Emitter{opt}(text, json{{"format_version", format_version}, {"kind", "definitions"}, {"items", items}});
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify words with constants and solve w(y) != 1 over Thompson's group F or finitary permutations"};
  app.require_subcommand(1);
  Common opt;
  app.add_option("--format", opt.format, "text or machine (JSON)")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", opt.out, "write the report to a file");

  std::string file, cert, region, epsilon, expr;
  std::vector<std::string> names, regions, sets;
  bool full = false;

  auto* classify_sc = app.add_subcommand("classify", "classify words (default: all words)");
  classify_sc->add_option("file", file, "session file")->required();
  classify_sc->add_option("words", names, "word names");
  classify_sc->add_flag("--full", full, "expand even when the product of constants is non-trivial");

  auto* solve_sc = app.add_subcommand("solve", "solve w(y) != 1 and emit a verified certificate");
  solve_sc->add_option("file", file, "session file")->required();
  solve_sc->add_option("word", expr, "word name")->required();
  solve_sc->add_option("--region", region, "confine the construction, e.g. (1/2,3/4)");
  solve_sc->add_option("--epsilon", epsilon, "displacement bound, e.g. 1/8");
  solve_sc->add_flag("--full", full, "use transition witnesses even for a non-trivial product of constants");

  auto* system_sc = app.add_subcommand("solve-system", "one tuple solving several inequalities");
  system_sc->add_option("file", file, "session file")->required();
  system_sc->add_option("words", names, "word names")->required();
  system_sc->add_option("--region", regions, "target region per word, '-' for the default");
  system_sc->add_option("--epsilon", epsilon, "displacement bound");

  auto* verify_sc = app.add_subcommand("verify", "re-check a certificate file");
  verify_sc->add_option("certificate", cert, "certificate (JSON)")->required();

  auto* eval_sc = app.add_subcommand("eval", "evaluate a word on explicit elements");
  eval_sc->add_option("file", file, "session file")->required();
  eval_sc->add_option("word", expr, "word name or expression")->required();
  eval_sc->add_option("--set", sets, "binding yI=EXPR");

  auto* show_sc = app.add_subcommand("show", "print definitions, normal forms and supports");
  show_sc->add_option("file", file, "session file")->required();
  show_sc->add_option("names", names, "names to show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : failure;
  }

  try {
    if (verify_sc->parsed()) {
      json doc = json::parse(read_file(cert));
      std::string space = doc.value("space", "");
      if (space == "interval") return verify_cmd<PLMap>(doc, opt);
      if (space == "discrete") return verify_cmd<FinPerm>(doc, opt);
      throw usage_error("certificate names no known space");
    }
    Session s = load(file);
    bool interval = s.space == Space::interval;
    if (classify_sc->parsed()) {
      return interval ? classify_cmd(s.interval, names, full, opt)
                      : classify_cmd(s.discrete, names, full, opt);
    }
    if (solve_sc->parsed()) {
      return interval ? solve_cmd(s.interval, expr, region, epsilon, full, opt)
                      : solve_cmd(s.discrete, expr, region, epsilon, full, opt);
    }
    if (system_sc->parsed()) {
      if (!interval) throw usage_error("solve-system needs 'space interval'");
      return solve_system_cmd(s.interval, names, regions, epsilon, opt);
    }
    if (eval_sc->parsed()) {
      return interval ? eval_cmd(s.interval, expr, sets, opt) : eval_cmd(s.discrete, expr, sets, opt);
    }
    if (show_sc->parsed()) {
      return interval ? show_cmd(s.interval, names, opt) : show_cmd(s.discrete, names, opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}
