#pragma once

// Constructive solutions of w(y) != 1: distinctive tuples for explicitly
// oscillating words, the transition route, systems of inequalities, the
// discrete route, and an independent verifier.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixid/oscillation.hpp"

namespace mixid {

/// The input is outside what a solver route can handle (wrong verdict,
/// empty target region, every route exhausted). Carries diagnostics.
class unsolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trajectory of a base point under a normalized word: p, then per block
/// the image under the constant and the images under each letter.
template <class G>
struct Trajectory {
  Word<G> word;
  point_t<G> base{};
  std::vector<point_t<G>> points;
  std::vector<std::string> labels;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

template <class G>
struct Certificate {
  std::vector<Word<G>> words;
  std::vector<Word<G>> conjugators;  // per word: normalized = c * w * c^-1
  std::vector<G> tuple;
  std::vector<Trajectory<G>> witnesses;
  std::optional<region_t<G>> support_bound;
  std::vector<region_t<G>> invariant;
  std::optional<Rational> epsilon;
  std::string route;
  std::vector<Check> checks;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

struct SolveOptions {
  std::optional<Rational> epsilon;
  std::size_t shrink_budget = 64;     // halvings when separating system balls
  std::size_t constant_budget = 16;   // passed to the classifier
  std::size_t base_candidates = 256;  // discrete base points tried
};

/// Trajectory of p under the tuple for the normalized form of `word`.
template <class G>
Trajectory<G> trajectory(const Word<G>& word, const std::vector<G>& tuple, const point_t<G>& p) {
  using T = group_traits<G>;
  Form12<G> f = to_form12(to_form11_any(word));
  if (static_cast<int>(tuple.size()) != word.arity()) {
    throw usage_error("tuple length does not match the word's arity");
  }
  Trajectory<G> out{f.form.normalized, p, {p}, {"p"}};
  point_t<G> x = p;
  for (std::size_t b = 0; b < f.blocks(); ++b) {
    if (!f.form.is_free()) {
      x = T::apply(f.form.v[b], x);
      out.points.push_back(x);
      out.labels.push_back("c" + std::to_string(b + 1));
    }
    for (const auto& l : f.letters[b]) {
      const G& g = tuple[static_cast<std::size_t>(l.var - 1)];
      x = l.sign > 0 ? T::apply(g, x) : T::apply(T::inverse(g), x);
      out.points.push_back(x);
      out.labels.push_back("y" + std::to_string(l.var) + (l.sign < 0 ? "^-1" : ""));
    }
  }
  return out;
}

/// Open neighbourhood of q inside `base` that, for every member V of the
/// family, is either contained in V or disjoint from its closure.
template <class G>
region_t<G> claim_m_neighborhood(const point_t<G>& q, const region_t<G>& base,
                                 const std::vector<region_t<G>>& family) {
  using T = group_traits<G>;
  if (!base.contains(q)) throw usage_error("claim M: point " + T::point_str(q) + " not in base");
  region_t<G> out = base;
  for (const auto& V : family) {
    if (V.contains(q)) {
      out = intersect(out, V);
    } else {
      out = minus(out, V);
      if (!out.contains(q)) {
        throw usage_error("claim M: point " + T::point_str(q) + " lies on the boundary of " +
                          V.str());
      }
    }
  }
  return T::around(out, q);
}

/// All products v_m^{e_m} ... v_1^{e_1}, e in {0,1}, deduplicated.
template <class G>
std::vector<G> signed_products(const Form11<G>& f) {
  using T = group_traits<G>;
  std::vector<G> out{T::identity()};
  for (const auto& v : f.v) {
    std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) detail::add_unique(out, T::compose(v, out[i]));
  }
  return out;
}

template <class G>
VerifyReport verify(const Certificate<G>& c) {
  using T = group_traits<G>;
  VerifyReport r;
  Check words{"inequalities", true, ""};
  for (std::size_t k = 0; k < c.words.size(); ++k) {
    try {
      if (substitute(c.words[k], c.tuple).is_identity()) {
        words.passed = false;
        words.detail += "word " + std::to_string(k + 1) + " evaluates to the identity; ";
      }
    } catch (const std::exception& e) {
      words.passed = false;
      words.detail += e.what();
    }
  }
  if (c.words.empty()) {
    words.passed = false;
    words.detail = "no words";
  }
  r.checks.push_back(words);

  Check dist{"trajectory", true, ""};
  if (c.witnesses.empty()) dist.detail = "no trajectory recorded";
  for (const auto& w : c.witnesses) {
    try {
      Trajectory<G> t = trajectory(w.word, c.tuple, w.base);
      if (t.points != w.points) {
        dist.passed = false;
        dist.detail += "recorded points differ from the recomputed trajectory; ";
      }
      for (std::size_t i = 0; i < t.points.size() && dist.passed; ++i) {
        for (std::size_t j = i + 1; j < t.points.size(); ++j) {
          if (t.points[i] == t.points[j]) {
            dist.passed = false;
            dist.detail += "points " + std::to_string(i) + " and " + std::to_string(j) +
                           " coincide at " + T::point_str(t.points[i]) + "; ";
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      dist.passed = false;
      dist.detail += e.what();
    }
  }
  r.checks.push_back(dist);

  Check supp{"support", true, ""};
  if (!c.support_bound) supp.detail = "no bound declared";
  for (std::size_t i = 0; c.support_bound && i < c.tuple.size(); ++i) {
    region_t<G> s = T::support(c.tuple[i]);
    if (!s.is_subset(*c.support_bound)) {
      supp.passed = false;
      supp.detail += "supp(g" + std::to_string(i + 1) + ") = " + s.str() + " escapes " +
                     c.support_bound->str() + "; ";
    }
  }
  r.checks.push_back(supp);

  Check inv{"invariance", true, ""};
  for (std::size_t i = 0; i < c.tuple.size(); ++i) {
    for (const auto& V : c.invariant) {
      if (!(T::image(c.tuple[i], V) == V)) {
        inv.passed = false;
        inv.detail += "g" + std::to_string(i + 1) + " moves " + V.str() + "; ";
      }
    }
  }
  r.checks.push_back(inv);

  Check disp{"displacement", true, ""};
  if (!c.epsilon) disp.detail = "no bound declared";
  for (std::size_t i = 0; c.epsilon && i < c.tuple.size(); ++i) {
    Rational d = T::displacement(c.tuple[i]);
    if (*c.epsilon < d) {
      disp.passed = false;
      disp.detail += "g" + std::to_string(i + 1) + " moves a point by " + d.str() + "; ";
    }
  }
  r.checks.push_back(disp);
  return r;
}

namespace detail {

template <class P>
bool contains_point(const std::vector<P>& s, const P& p) {
  return std::find(s.begin(), s.end(), p) != s.end();
}

template <class G>
struct EngineResult {
  std::vector<G> tuple;
  Trajectory<G> path;
  std::vector<region_t<G>> family;
  region_t<G> support_bound;
};

/// Inductive construction of a distinctive tuple for an explicitly
/// oscillating word on `target` (a subset of O_w), keeping every member of
/// the signed family of `target` and every set in `extra` invariant.
template <class G>
EngineResult<G> distinctive_tuple(const Word<G>& word, const region_t<G>& target,
                                  const std::vector<region_t<G>>& extra,
                                  const SolveOptions& opts) {
  using T = group_traits<G>;
  using P = point_t<G>;
  using R = region_t<G>;
  Form12<G> f = to_form12(to_form11_any(word));
  const Form11<G>& form = f.form;
  if (target.is_empty()) throw unsolved("empty target region");
  if (!target.is_subset(osc_region(form))) {
    throw unsolved("target " + target.str() + " is not inside O_w = " + osc_region(form).str());
  }
  EngineResult<G> res;
  res.family = v_family(form, target, FamilyVariant::signed_);
  for (const auto& V : extra) add_unique(res.family, V);
  for (const auto& V : v_family(form, target, FamilyVariant::positive)) {
    res.support_bound = unite(res.support_bound, V);
  }

  // Points every mover must fix while working in block b (0-based).
  const std::size_t n = form.n();
  std::vector<std::vector<P>> fixed_after(n + 1);
  for (const auto& V : res.family) {
    for (const auto& b : boundary_points(V)) {
      if (!contains_point(fixed_after[n], b)) fixed_after[n].push_back(b);
    }
  }
  for (std::size_t d = n; d-- > 0;) {
    fixed_after[d] = fixed_after[d + 1];
    G back = T::inverse(form.v[d]);
    for (const auto& x : fixed_after[d + 1]) {
      P y = T::apply(back, x);
      if (!contains_point(fixed_after[d], y)) fixed_after[d].push_back(y);
    }
  }
  auto guard = [&](std::size_t b) -> const std::vector<P>& {
    return form.is_free() ? fixed_after[0] : fixed_after[b + 1];
  };

  // Base point.
  P p{};
  if constexpr (T::metric) {
    const auto& iv = target.components().front();
    p = dyadic_in_interval(iv.lo, iv.hi, fixed_after[0]).to_rational();
  } else {
    bool found = false;
    P from = 0;
    for (std::size_t tries = 0; tries < opts.base_candidates; ++tries) {
      P cand = 0;
      if (!target.least_member(fixed_after[0], cand, from)) break;
      if (claim_m_neighborhood<G>(cand, T::ambient(), res.family).is_infinite()) {
        p = cand;
        found = true;
        break;
      }
      from = cand + 1;
    }
    if (!found) throw infeasible("no base point with an infinite neighbourhood in " + target.str());
  }

  std::optional<Rational> diameter;
  if (opts.epsilon && f.length() > 0) diameter = *opts.epsilon / Rational(static_cast<long>(f.length()));

  std::vector<G> g(static_cast<std::size_t>(word.arity()), T::identity());
  std::vector<P> Y{p};
  P x = p;
  for (std::size_t b = 0; b < f.blocks(); ++b) {
    if (!form.is_free()) {
      x = T::apply(form.v[b], x);
      if (contains_point(Y, x)) throw infeasible("constant image revisits the trajectory");
      Y.push_back(x);
    }
    const auto& letters = f.letters[b];
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const Letter& l = letters[i];
      G& gj = g[static_cast<std::size_t>(l.var - 1)];
      const G* next = (!form.is_free() && i + 1 == letters.size() && b + 1 < f.blocks())
                          ? &form.v[b + 1]
                          : nullptr;
      auto step = [&](const G& h) { return l.sign > 0 ? T::apply(h, x) : T::apply(T::inverse(h), x); };
      auto bad = [&](const P& z) {
        if (contains_point(Y, z)) return true;
        if (!next) return false;
        P q = T::apply(*next, z);
        return q == z || contains_point(Y, q);
      };
      P z = step(gj);
      if (bad(z)) {
        std::vector<P> avoid = Y;
        if (next) {
          G back = T::inverse(*next);
          for (const auto& y : Y) avoid.push_back(T::apply(back, y));
        }
        std::vector<P> fixed;
        for (const auto& y : Y) {
          if (!(y == x)) fixed.push_back(y);
        }
        for (const auto& y : guard(b)) fixed.push_back(y);
        std::vector<P> forbid;
        const G pull = l.sign > 0 ? T::inverse(gj) : gj;
        for (const auto& y : avoid) forbid.push_back(T::apply(pull, y));
        R cell = claim_m_neighborhood<G>(x, T::ambient(), res.family);
        G mv = T::mover(cell, x, fixed, forbid, diameter, Parity::any);
        gj = l.sign > 0 ? T::compose(gj, mv) : T::compose(T::inverse(mv), gj);
        z = step(gj);
        if (bad(z)) throw infeasible("correction did not separate the trajectory");
      }
      Y.push_back(z);
      x = z;
    }
  }
  res.tuple = g;
  res.path = trajectory(word, g, p);
  if (res.path.points != Y) throw infeasible("corrections disturbed an earlier trajectory point");
  return res;
}

template <class G>
Certificate<G> finish(Certificate<G> c, const char* what) {
  VerifyReport r = verify(c);
  c.checks = r.checks;
  if (!r.ok()) {
    std::string why;
    for (const auto& ch : r.checks) {
      if (!ch.passed) why += ch.name + ": " + ch.detail;
    }
    throw unsolved(std::string(what) + " produced a tuple that fails verification: " + why);
  }
  return c;
}

template <class G>
Certificate<G> identity_certificate(const Word<G>& w, const std::optional<Rational>& eps) {
  Certificate<G> c;
  c.words = {w};
  c.conjugators = {Word<G>(w.arity())};
  c.tuple.assign(static_cast<std::size_t>(w.arity()), group_traits<G>::identity());
  c.epsilon = eps;
  c.route = "constants";
  return c;
}

template <class G>
Certificate<G> from_engine(const Word<G>& w, const Word<G>& conj, EngineResult<G> e,
                           const std::optional<Rational>& eps, std::string route) {
  Certificate<G> c;
  c.words = {w};
  c.conjugators = {conj};
  c.tuple = std::move(e.tuple);
  c.witnesses = {std::move(e.path)};
  c.support_bound = std::move(e.support_bound);
  c.invariant = std::move(e.family);
  c.epsilon = eps;
  c.route = std::move(route);
  return c;
}

/// Witness region narrowed to one ancestor cell per level, and the signed
/// families of every ancestor word on it.
template <class G>
std::pair<region_t<G>, std::vector<region_t<G>>> witness_chain(const Classification<G>& cl,
                                                               const Witness<G>& wit,
                                                               const region_t<G>& restrict_to) {
  using R = region_t<G>;
  R U = intersect(wit.region, restrict_to);
  std::vector<const TransitionNode<G>*> ancestors;
  std::size_t level = wit.level;
  std::size_t parent = cl.levels[level].cells[wit.cell].parent;
  while (level > 0) {
    const auto& node = cl.levels[level - 1].nodes[parent];
    ancestors.push_back(&node);
    if (level - 1 == 0) break;
    std::size_t chosen = no_parent;
    for (std::size_t ci : node.cells) {
      R part = intersect(U, cl.levels[level - 1].cells[ci].region);
      if (!part.is_empty()) {
        U = part;
        chosen = ci;
        break;
      }
    }
    if (chosen == no_parent) return {R{}, {}};
    parent = cl.levels[level - 1].cells[chosen].parent;
    --level;
  }
  std::vector<R> extra;
  for (const auto* node : ancestors) {
    for (auto& V : v_family(to_form11_any(node->word), U, FamilyVariant::signed_)) {
      add_unique(extra, std::move(V));
    }
  }
  return {U, extra};
}

template <class G>
std::string describe(const Classification<G>& cl) {
  std::string s = verdict_name(cl.verdict);
  for (const auto& n : cl.notes) s += "; " + n;
  return s;
}

/// Try each witness of an oscillating classification in order.
template <class G>
Certificate<G> solve_via_witnesses(const Word<G>& w, const Classification<G>& cl,
                                   std::vector<std::size_t> order,
                                   const region_t<G>& restrict_to, const SolveOptions& opts,
                                   const std::string& route) {
  std::string failures;
  for (std::size_t k : order) {
    const auto& wit = cl.p_os[k];
    try {
      auto [U, extra] = witness_chain(cl, wit, restrict_to);
      if (U.is_empty()) throw unsolved("witness region misses the restriction");
      region_t<G> target = intersect(U, osc_region(to_form11_any(wit.word)));
      if (target.is_empty()) throw unsolved("witness word does not oscillate inside the restriction");
      EngineResult<G> e = distinctive_tuple(wit.word, target, extra, opts);
      Certificate<G> c = from_engine(w, cl.form->conjugator, std::move(e), opts.epsilon, route);
      return finish(std::move(c), "transition route");
    } catch (const std::exception& ex) {
      failures += "\n  witness on " + wit.region.str() + ": " + ex.what();
    }
  }
  throw unsolved("no transition witness produced a solution:" + failures);
}

}  // namespace detail

/// Distinctive tuple for an explicitly oscillating word on target ⊆ O_w.
template <class G>
Certificate<G> solve_explicit(const Word<G>& w, const std::optional<region_t<G>>& target = {},
                              const SolveOptions& opts = {}) {
  if (w.is_identity() || w.is_constant()) throw unsolved("word has no variables: " + to_string(w));
  Form11<G> f = to_form11(w);
  region_t<G> O = osc_region(f);
  if (O.is_empty()) {
    throw unsolved("word is not explicitly oscillating; use solve_oscillating");
  }
  region_t<G> t = target ? *target : O;
  if (t.is_empty()) throw unsolved("empty target region");
  auto e = detail::distinctive_tuple(w, t, {}, opts);
  return detail::finish(detail::from_engine(w, f.conjugator, std::move(e), opts.epsilon, "explicit"),
                        "explicit route");
}

/// Any word the classifier does not call Rigid or Degenerate. `restrict_to`
/// confines the construction to a region.
template <class G>
Certificate<G> solve_oscillating(const Word<G>& w,
                                 const region_t<G>& restrict_to = group_traits<G>::ambient(),
                                 const SolveOptions& opts = {}, bool full_tree = false) {
  TransitionOptions topts;
  topts.constant_budget = opts.constant_budget;
  topts.full_tree = full_tree;
  Classification<G> cl = classify(w, topts);
  switch (cl.verdict) {
    case Verdict::ConstantNontrivial:
      return detail::finish(detail::identity_certificate(w, opts.epsilon), "constant route");
    case Verdict::ExplicitlyOscillating: {
      region_t<G> t = intersect(cl.osc, restrict_to);
      if (t.is_empty()) throw unsolved("O_w = " + cl.osc.str() + " misses " + restrict_to.str());
      return solve_explicit(w, std::optional<region_t<G>>(t), opts);
    }
    case Verdict::Oscillating: {
      std::vector<std::size_t> order(cl.p_os.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      return detail::solve_via_witnesses(w, cl, order, restrict_to, opts, "transition");
    }
    default:
      throw unsolved("classification rules out a solver route: " + detail::describe(cl));
  }
}

/// One tuple solving every inequality, built from solutions on balls whose
/// image families are pairwise disjoint.
template <class G>
Certificate<G> solve_system(const std::vector<Word<G>>& ws,
                            const std::vector<std::optional<region_t<G>>>& regions = {},
                            const SolveOptions& opts = {}) {
  using T = group_traits<G>;
  static_assert(T::metric, "solve_system needs the interval action");
  using R = region_t<G>;
  if (ws.empty()) throw usage_error("empty system");
  const int arity = ws.front().arity();
  for (const auto& w : ws) {
    if (w.arity() != arity) throw usage_error("system words differ in arity");
  }
  TransitionOptions topts;
  topts.constant_budget = opts.constant_budget;
  topts.full_tree = true;
  std::vector<Classification<G>> cls;
  std::vector<R> zone;
  std::vector<std::vector<G>> prods;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    cls.push_back(classify(ws[j], topts));
    const auto& cl = cls.back();
    if (cl.verdict != Verdict::ExplicitlyOscillating && cl.verdict != Verdict::Oscillating) {
      throw unsolved("word " + std::to_string(j + 1) + " is not oscillating: " + detail::describe(cl));
    }
    R z = *cl.hat_literal;
    if (j < regions.size() && regions[j]) z = intersect(z, *regions[j]);
    if (z.is_empty()) throw unsolved("word " + std::to_string(j + 1) + " has an empty target region");
    zone.push_back(z);
    prods.push_back(signed_products(*cl.form));
  }
  // Centres whose signed images are pairwise distinct across words.
  std::vector<Rational> centre;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    std::vector<Rational> avoid;
    for (std::size_t k = 0; k < j; ++k) {
      for (const auto& q : prods[k]) {
        Rational img = q(centre[k]);
        for (const auto& pj : prods[j]) avoid.push_back(pj.inverse()(img));
      }
    }
    const auto& iv = zone[j].components().front();
    centre.push_back(dyadic_in_interval(iv.lo, iv.hi, avoid).to_rational());
  }
  Rational radius(1);
  std::string last_error;
  for (std::size_t attempt = 0; attempt <= opts.shrink_budget; ++attempt, radius = radius / Rational(2)) {
    std::vector<R> balls, spans;
    for (std::size_t j = 0; j < ws.size(); ++j) {
      Rational lo = std::max(Rational(0), centre[j] - radius);
      Rational hi = std::min(Rational(1), centre[j] + radius);
      R ball = T::around(intersect(zone[j], R(lo, hi)), centre[j]);
      R span;
      for (const auto& V : v_family(*cls[j].form, ball, FamilyVariant::signed_)) span = unite(span, V);
      balls.push_back(ball);
      spans.push_back(span);
    }
    bool separated = true;
    for (std::size_t j = 0; j < ws.size() && separated; ++j) {
      for (std::size_t k = j + 1; k < ws.size() && separated; ++k) {
        separated = intersect(spans[j], spans[k]).is_empty();
      }
    }
    if (!separated) continue;
    try {
      Certificate<G> c;
      c.tuple.assign(static_cast<std::size_t>(arity), T::identity());
      c.epsilon = opts.epsilon;
      c.route = "system";
      R bound;
      for (std::size_t j = 0; j < ws.size(); ++j) {
        Certificate<G> part = solve_oscillating(ws[j], balls[j], opts, true);
        for (std::size_t i = 0; i < c.tuple.size(); ++i) {
          c.tuple[i] = T::compose(part.tuple[i], c.tuple[i]);
        }
        c.words.push_back(ws[j]);
        c.conjugators.push_back(part.conjugators.front());
        for (auto& t : part.witnesses) c.witnesses.push_back(std::move(t));
        bound = unite(bound, part.support_bound ? *part.support_bound : spans[j]);
        for (auto& V : part.invariant) detail::add_unique(c.invariant, std::move(V));
      }
      c.support_bound = bound;
      return detail::finish(std::move(c), "system route");
    } catch (const std::exception& e) {
      last_error = e.what();
    }
  }
  throw resource_error("no separated balls within " + std::to_string(opts.shrink_budget) +
                       " halvings" + (last_error.empty() ? "" : ": " + last_error));
}

/// Discrete action: product of constants, the separated-cell induction, then
/// transition witnesses (free words on cofinite cells first).
template <class G>
Certificate<G> solve_discrete(const Word<G>& w, const SolveOptions& opts = {}) {
  using T = group_traits<G>;
  if (w.is_identity() || w.is_constant()) throw unsolved("word has no variables: " + to_string(w));
  std::vector<G> ones(static_cast<std::size_t>(w.arity()), T::identity());
  if (!substitute(w, ones).is_identity()) {
    return detail::finish(detail::identity_certificate(w, opts.epsilon), "constant route");
  }
  std::string failures;
  Form11<G> f = to_form11(w);
  region_t<G> O = osc_region(f);
  if (!O.is_empty()) {
    try {
      GabCells<G> cells = gab_cells(f, opts.constant_budget);
      if (!cells.separated) throw infeasible("a cell of the image partition is finite");
      auto e = detail::distinctive_tuple(w, O, {}, opts);
      return detail::finish(detail::from_engine(w, f.conjugator, std::move(e), opts.epsilon, "cells"),
                            "cell route");
    } catch (const std::exception& ex) {
      failures += "\n  cell route: " + std::string(ex.what());
    }
  }
  TransitionOptions topts;
  topts.constant_budget = opts.constant_budget;
  topts.full_tree = true;
  topts.expand_root = true;
  Classification<G> cl = classify(w, topts);
  if (cl.verdict == Verdict::Oscillating) {
    std::vector<std::size_t> order(cl.p_os.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto rank = [&](std::size_t i) {
      const auto& wit = cl.p_os[i];
      return (wit.word.is_free() ? 0 : 2) + (wit.region.is_infinite() ? 0 : 1);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
    try {
      return detail::solve_via_witnesses(w, cl, order, T::ambient(), opts, "transition");
    } catch (const std::exception& ex) {
      failures += "\n  transition route: " + std::string(ex.what());
    }
  } else {
    failures += "\n  transition: " + detail::describe(cl);
  }
  throw unsolved("no discrete route applies:" + failures);
}

}  // namespace mixid
