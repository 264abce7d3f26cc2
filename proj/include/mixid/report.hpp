#pragma once

// Text and machine-readable (JSON) renderings of classifications and
// certificates, and certificate loading. Needs nlohmann/json.

#include <string>
#include <vector>

#include "json.hpp"
#include "mixid/session.hpp"
#include "mixid/solver.hpp"

namespace mixid {

using json = nlohmann::ordered_json;

constexpr int format_version = 1;

inline std::string pattern_str(const std::vector<int>& p) {
  std::string s;
  for (int e : p) s += e ? '1' : '0';
  return s.empty() ? "-" : s;
}

template <class G>
json classification_json(const std::string& name, const Classification<G>& c) {
  using T = group_traits<G>;
  json j;
  j["format_version"] = format_version;
  j["kind"] = "classification";
  j["space"] = T::space_name;
  j["name"] = name;
  j["word"] = to_string(c.word);
  j["verdict"] = verdict_name(c.verdict);
  if (c.form) {
    j["normalized"] = to_string(c.form->normalized);
    j["conjugator"] = to_string(c.form->conjugator);
    j["osc_region"] = c.osc.str();
  }
  json levels = json::array();
  for (std::size_t k = 1; k < c.levels.size(); ++k) {
    json lv;
    lv["level"] = k;
    json cells = json::array();
    for (const auto& cell : c.levels[k].cells) {
      cells.push_back({{"region", cell.region.str()},
                       {"pattern", pattern_str(cell.pattern)},
                       {"parent", cell.parent},
                       {"derived", to_string(cell.derived)},
                       {"word", to_string(cell.word)},
                       {"trivial", cell.trivial},
                       {"explicit", cell.explicit_osc}});
    }
    lv["cells"] = cells;
    json nodes = json::array();
    for (const auto& node : c.levels[k].nodes) {
      nodes.push_back({{"region", node.region.str()}, {"word", to_string(node.word)}});
    }
    lv["nodes"] = nodes;
    levels.push_back(lv);
  }
  j["levels"] = levels;
  json pos = json::array();
  for (const auto& w : c.p_os) {
    pos.push_back({{"level", w.level}, {"region", w.region.str()}, {"word", to_string(w.word)}});
  }
  j["p_os"] = pos;
  j["hat_region"] = c.hat ? json(c.hat->str()) : json(nullptr);
  j["hat_literal"] = c.hat_literal ? json(c.hat_literal->str()) : json(nullptr);
  j["notes"] = c.notes;
  return j;
}

template <class G>
std::string classification_text(const std::string& name, const Classification<G>& c) {
  std::string out = name + ": " + verdict_name(c.verdict);
  if (c.verdict == Verdict::ExplicitlyOscillating) out += ", O_w = " + c.osc.str();
  if (c.verdict == Verdict::Oscillating && c.hat) out += ", hat O_w = " + c.hat->str();
  out += "\n";
  if (c.form && !c.form->conjugator.is_identity()) {
    out += "  normalized: " + to_string(c.form->normalized) + "\n";
  }
  for (std::size_t k = 1; k < c.levels.size(); ++k) {
    out += "  level " + std::to_string(k) + ":\n";
    for (const auto& cell : c.levels[k].cells) {
      out += "    " + cell.region.str() + "  [" + pattern_str(cell.pattern) + "]  " +
             to_string(cell.word);
      if (cell.trivial) out += "  (identity)";
      if (cell.explicit_osc) out += "  (explicitly oscillating)";
      out += "\n";
    }
  }
  if (c.verdict == Verdict::Oscillating && c.hat_literal) {
    out += "  cell union: " + c.hat_literal->str() + "\n";
  }
  for (const auto& n : c.notes) out += "  note: " + n + "\n";
  return out;
}

inline std::string verify_text(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& ch : checks) {
    out += std::string("check ") + ch.name + ": " + (ch.passed ? "pass" : "FAIL");
    if (!ch.detail.empty()) out += " (" + ch.detail + ")";
    out += "\n";
  }
  return out;
}

inline json checks_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

template <class G>
json certificate_json(const Certificate<G>& c) {
  using T = group_traits<G>;
  json j;
  j["format_version"] = format_version;
  j["kind"] = "certificate";
  j["space"] = T::space_name;
  j["route"] = c.route;
  json words = json::array();
  for (std::size_t k = 0; k < c.words.size(); ++k) {
    words.push_back({{"arity", c.words[k].arity()},
                     {"text", to_string(c.words[k])},
                     {"conjugator", k < c.conjugators.size() ? to_string(c.conjugators[k]) : "1"}});
  }
  j["words"] = words;
  json tuple = json::array();
  for (const auto& g : c.tuple) tuple.push_back(T::str(g));
  j["tuple"] = tuple;
  json wit = json::array();
  for (const auto& t : c.witnesses) {
    json pts = json::array();
    for (const auto& p : t.points) pts.push_back(T::point_str(p));
    wit.push_back({{"word", to_string(t.word)},
                   {"base", T::point_str(t.base)},
                   {"points", pts},
                   {"labels", t.labels}});
  }
  j["trajectories"] = wit;
  j["support_bound"] = c.support_bound ? json(c.support_bound->str()) : json(nullptr);
  json inv = json::array();
  for (const auto& V : c.invariant) inv.push_back(V.str());
  j["invariant"] = inv;
  j["epsilon"] = c.epsilon ? json(c.epsilon->str()) : json(nullptr);
  j["checks"] = checks_json(c.checks);
  return j;
}

namespace detail {

template <class G>
point_t<G> parse_point(const std::string& s) {
  if constexpr (group_traits<G>::metric) {
    return Rational::parse(s);
  } else {
    mpz_class v;
    if (!parse_integer(s, v) || v < 0 || !v.fits_ulong_p()) throw usage_error("malformed point '" + s + "'");
    return static_cast<Nat>(v.get_ui());
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw usage_error(std::string("certificate lacks '") + key + "'");
  return j.at(key);
}

}  // namespace detail

/// Certificate from its JSON form; the checks are not trusted and dropped.
template <class G>
Certificate<G> certificate_from_json(const json& j) {
  using T = group_traits<G>;
  using R = region_t<G>;
  if (detail::field(j, "format_version").get<int>() != format_version) {
    throw usage_error("unsupported certificate format version");
  }
  if (detail::field(j, "space").get<std::string>() != T::space_name) {
    throw usage_error("certificate is for the " + j.at("space").get<std::string>() + " space");
  }
  Definitions<G> none;
  Certificate<G> c;
  c.route = j.value("route", "");
  for (const auto& w : detail::field(j, "words")) {
    int t = detail::field(w, "arity").get<int>();
    c.words.push_back(parse_expression<G>(detail::field(w, "text").get<std::string>(), none, t));
    c.conjugators.push_back(parse_expression<G>(w.value("conjugator", "1"), none, t));
  }
  if (c.words.empty()) throw usage_error("certificate has no words");
  const int t = c.words.front().arity();
  for (const auto& g : detail::field(j, "tuple")) c.tuple.push_back(parse_constant<G>(g.get<std::string>(), none));
  for (const auto& w : j.value("trajectories", json::array())) {
    Trajectory<G> tr;
    tr.word = parse_expression<G>(detail::field(w, "word").get<std::string>(), none, t);
    tr.base = detail::parse_point<G>(detail::field(w, "base").get<std::string>());
    for (const auto& p : detail::field(w, "points")) tr.points.push_back(detail::parse_point<G>(p.get<std::string>()));
    tr.labels = w.value("labels", std::vector<std::string>{});
    c.witnesses.push_back(std::move(tr));
  }
  const json& sb = detail::field(j, "support_bound");
  if (!sb.is_null()) c.support_bound = R::parse(sb.get<std::string>());
  for (const auto& V : j.value("invariant", json::array())) c.invariant.push_back(R::parse(V.get<std::string>()));
  const json& eps = detail::field(j, "epsilon");
  if (!eps.is_null()) c.epsilon = Rational::parse(eps.get<std::string>());
  return c;
}

template <class G>
std::string certificate_text(const Certificate<G>& c, const std::vector<std::string>& names = {}) {
  using T = group_traits<G>;
  std::string out;
  for (std::size_t k = 0; k < c.words.size(); ++k) {
    std::string name = k < names.size() ? names[k] : "w" + std::to_string(k + 1);
    out += name + " = " + to_string(c.words[k]) + "\n";
  }
  out += "route: " + c.route + "\n";
  for (std::size_t i = 0; i < c.tuple.size(); ++i) {
    out += "g" + std::to_string(i + 1) + " = " + T::str(c.tuple[i]) + "\n";
  }
  for (const auto& t : c.witnesses) {
    out += "trajectory of " + T::point_str(t.base) + " under " + to_string(t.word) + ":\n ";
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      out += " " + (i < t.labels.size() ? t.labels[i] : std::string("?")) + ":" + T::point_str(t.points[i]);
    }
    out += "\n";
  }
  if (c.support_bound) out += "support bound: " + c.support_bound->str() + "\n";
  if (c.epsilon) out += "epsilon: " + c.epsilon->str() + "\n";
  out += verify_text(c.checks);
  return out;
}


}  // namespace mixid
