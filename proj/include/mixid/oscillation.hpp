#pragma once

// Oscillation regions, image families, the Transition procedure and
// classification of words.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mixid/words.hpp"

namespace mixid {

template <class G>
region_t<G> preimage(const G& g, const region_t<G>& r) {
  using T = group_traits<G>;
  return T::image(T::inverse(g), r);
}

/// O_w: points whose partial orbit v_i...v_1(p) stays in supp(v_{i+1}) for
/// every i. For words without constants this is the ambient space.
template <class G>
region_t<G> osc_region(const Form11<G>& f,
                       const region_t<G>& ambient = group_traits<G>::ambient()) {
  using T = group_traits<G>;
  region_t<G> out = ambient;
  G prefix = T::identity();
  for (const auto& v : f.v) {
    out = intersect(out, preimage(prefix, T::support(v)));
    if (out.is_empty()) break;
    prefix = T::compose(v, prefix);
  }
  return out;
}

/// Non-trivial and V ∩ O_w nonempty (V defaults to the ambient space).
template <class G>
bool is_explicitly_oscillating(const Word<G>& w,
                               const region_t<G>& V = group_traits<G>::ambient()) {
  if (w.is_identity()) return false;
  return !intersect(V, osc_region(to_form11_any(w))).is_empty();
}

enum class FamilyVariant { signed_, inverse, positive };

namespace detail {

template <class R>
void add_unique(std::vector<R>& set, R item) {
  for (const auto& x : set) {
    if (x == item) return;
  }
  set.push_back(std::move(item));
}

}  // namespace detail

/// Images of A under signed partial products of the constants:
///   signed:   v_j^{e_j} ... v_1^{e_1}(A), e in {0,1}
///   inverse:  v_1^{e_1} ... v_j^{e_j}(A), e in {0,-1}
///   positive: v_j ... v_1(A)
/// Deduplicated, in order of discovery. Words without constants give {A}.
template <class G>
std::vector<region_t<G>> v_family(const Form11<G>& f, const region_t<G>& A, FamilyVariant variant,
                                  std::size_t budget = std::size_t{1} << 16) {
  using T = group_traits<G>;
  std::vector<region_t<G>> out{A};
  if (f.is_free()) return out;
  auto grow = [&](const G& g) {
    std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) detail::add_unique(out, T::image(g, out[i]));
    if (out.size() > budget) throw resource_error("image family exceeds its budget");
  };
  switch (variant) {
    case FamilyVariant::signed_:
      // Trailing zero exponents shorten the pattern, so length n suffices.
      for (const auto& v : f.v) grow(v);
      break;
    case FamilyVariant::inverse:
      for (std::size_t j = f.n(); j-- > 0;) grow(T::inverse(f.v[j]));
      break;
    case FamilyVariant::positive: {
      out.clear();
      G prefix = T::identity();
      for (const auto& v : f.v) {
        prefix = T::compose(v, prefix);
        detail::add_unique(out, T::image(prefix, A));
      }
      break;
    }
  }
  return out;
}

enum class Verdict { ExplicitlyOscillating, Oscillating, Rigid, ConstantNontrivial, Degenerate };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExplicitlyOscillating: return "ExplicitlyOscillating";
    case Verdict::Oscillating: return "Oscillating";
    case Verdict::Rigid: return "Rigid";
    case Verdict::ConstantNontrivial: return "ConstantNontrivial";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();

/// One cell X_e of a level: the sign pattern e against the parent word's
/// constants, the derived word before conjugation and the final word.
template <class G>
struct TransitionCell {
  region_t<G> region;
  std::vector<int> pattern;
  std::size_t parent = no_parent;  // node index in the previous level
  Word<G> derived;                 // reduced w'
  Word<G> word;                    // after moving a trailing variable block to the front
  Word<G> conjugator;              // word = conjugator · derived · conjugator^-1
  bool trivial = false;
  bool explicit_osc = false;
};

/// Cells of one level carrying the same non-trivial word, merged; nodes are
/// what the next level expands.
template <class G>
struct TransitionNode {
  region_t<G> region;
  Word<G> word;
  std::vector<std::size_t> cells;
  std::size_t constant_count = 0;
};

template <class G>
struct TransitionLevel {
  std::vector<TransitionCell<G>> cells;
  std::vector<TransitionNode<G>> nodes;
};

template <class G>
struct Witness {
  std::size_t level;
  std::size_t cell;
  region_t<G> region;
  Word<G> word;
};

template <class G>
struct Classification {
  Word<G> word;
  Verdict verdict = Verdict::Degenerate;
  std::optional<Form11<G>> form;
  region_t<G> osc;  // O_w of the normalized word
  std::vector<TransitionLevel<G>> levels;
  std::vector<Witness<G>> p_os;
  std::optional<region_t<G>> hat;          // regular-open hull of the union below
  std::optional<region_t<G>> hat_literal;  // union of cell contributions
  std::vector<std::string> notes;
  bool expanded = false;
};

struct TransitionOptions {
  std::size_t constant_budget = 16;  // constants per expanded word (2^n patterns)
  bool full_tree = false;            // expand even when the product of constants is non-trivial
  bool expand_root = false;          // expand an explicitly oscillating input too
};

namespace detail {

template <class G>
Word<G> specialize(const Form11<G>& f, const std::vector<int>& pattern) {
  std::vector<Syllable<G>> raw;
  for (std::size_t j = f.u.size(); j-- > 0;) {
    for (const auto& s : f.u[j].syllables()) raw.push_back(s);
    if (j < f.v.size() && pattern[j] == 1) raw.push_back({0, 0, f.v[j]});
  }
  return Word<G>::reduce(f.normalized.arity(), raw);
}

/// Expand one node: every nonempty cell of the pattern partition, in
/// lexicographic order of the pattern.
template <class G>
void expand_node(const TransitionNode<G>& node, std::size_t node_index,
                 const TransitionOptions& opts, std::vector<TransitionCell<G>>& out) {
  using T = group_traits<G>;
  using R = region_t<G>;
  Form11<G> f = to_form11_any(node.word);
  const std::size_t n = f.n();
  if (n > opts.constant_budget) {
    throw resource_error("word with " + std::to_string(n) + " constants exceeds the budget of " +
                         std::to_string(opts.constant_budget));
  }
  std::vector<R> ones, zeros;
  G prefix = T::identity();
  for (std::size_t i = 0; i < n; ++i) {
    R pre = preimage(prefix, T::support(f.v[i]));
    ones.push_back(intersect(node.region, pre));
    zeros.push_back(interior_complement(pre, node.region));
    prefix = T::compose(f.v[i], prefix);
  }
  std::vector<int> pattern(n, 0);
  std::function<void(std::size_t, const R&)> dfs = [&](std::size_t i, const R& cell) {
    if (cell.is_empty()) return;
    if (i == n) {
      TransitionCell<G> c;
      c.region = cell;
      c.pattern = pattern;
      c.parent = node_index;
      c.derived = specialize(f, pattern);
      c.word = c.derived;
      c.conjugator = Word<G>(f.normalized.arity());
      c.trivial = c.derived.is_identity();
      if (!c.trivial) {
        const auto& syl = c.derived.syllables();
        if (!c.derived.is_free() && syl.back().is_var()) {
          Word<G> tail(c.derived.arity());
          std::size_t k = syl.size();
          while (k > 0 && syl[k - 1].is_var()) --k;
          for (std::size_t m = k; m < syl.size(); ++m) tail.push(syl[m]);
          c.conjugator = tail;
          c.word = conjugate(c.derived, tail);
        }
        c.explicit_osc = is_explicitly_oscillating(c.word, cell);
      }
      out.push_back(std::move(c));
      return;
    }
    pattern[i] = 0;
    dfs(i + 1, intersect(cell, zeros[i]));
    pattern[i] = 1;
    dfs(i + 1, intersect(cell, ones[i]));
    pattern[i] = 0;
  };
  dfs(0, node.region);
}

}  // namespace detail

/// Classify w: explicit oscillation, the product-of-constants shortcut, then
/// the level-by-level Transition procedure.
template <class G>
Classification<G> classify(const Word<G>& w, const TransitionOptions& opts = {}) {
  using T = group_traits<G>;
  Classification<G> c;
  c.word = w;
  if (w.is_identity() || w.is_constant()) {
    c.verdict = Verdict::Degenerate;
    c.notes.push_back(w.is_identity() ? "identity word" : "constant word (no variables)");
    return c;
  }
  c.form = to_form11(w);
  const Form11<G>& f = *c.form;
  c.osc = osc_region(f);
  TransitionLevel<G> root;
  TransitionCell<G> rc;
  rc.region = T::ambient();
  rc.derived = f.normalized;
  rc.word = f.normalized;
  rc.conjugator = f.conjugator;
  rc.explicit_osc = !c.osc.is_empty();
  root.cells.push_back(rc);
  root.nodes.push_back({rc.region, rc.word, {0}, f.normalized.constant_count()});
  c.levels.push_back(root);

  if (rc.explicit_osc && (!opts.expand_root || f.is_free())) {
    c.verdict = Verdict::ExplicitlyOscillating;
    c.hat = c.osc;
    c.hat_literal = c.osc;
    return c;
  }
  if (!rc.explicit_osc && !opts.full_tree && !product_of_constants(f).is_identity()) {
    c.verdict = Verdict::ConstantNontrivial;
    c.notes.push_back("non-trivial product of constants: the identity tuple solves w != 1");
    return c;
  }

  c.expanded = true;
  for (std::size_t k = 1;; ++k) {
    const TransitionLevel<G>& prev = c.levels.back();
    TransitionLevel<G> lvl;
    for (std::size_t i = 0; i < prev.nodes.size(); ++i) {
      detail::expand_node(prev.nodes[i], i, opts, lvl.cells);
    }
    for (const auto& cell : lvl.cells) {
      if (!cell.trivial &&
          cell.word.constant_count() >= prev.nodes[cell.parent].constant_count) {
        c.notes.push_back("constant count did not decrease at level " + std::to_string(k));
      }
    }
    bool any_explicit = false;
    for (std::size_t i = 0; i < lvl.cells.size(); ++i) {
      const auto& cell = lvl.cells[i];
      if (cell.explicit_osc) {
        any_explicit = true;
        c.p_os.push_back({k, i, cell.region, cell.word});
      }
    }
    if (!any_explicit) {
      for (std::size_t i = 0; i < lvl.cells.size(); ++i) {
        const auto& cell = lvl.cells[i];
        if (cell.trivial) continue;
        bool merged = false;
        for (auto& node : lvl.nodes) {
          if (node.word == cell.word) {
            node.region = unite(node.region, cell.region);
            node.cells.push_back(i);
            merged = true;
            break;
          }
        }
        if (!merged) lvl.nodes.push_back({cell.region, cell.word, {i}, cell.word.constant_count()});
      }
    }
    bool empty_level = lvl.cells.empty();
    bool all_trivial = !any_explicit && lvl.nodes.empty();
    c.levels.push_back(std::move(lvl));
    if (any_explicit) {
      c.verdict = Verdict::Oscillating;
      region_t<G> lit;
      for (const auto& wit : c.p_os) {
        region_t<G> part = wit.region;
        if (!wit.word.is_free()) part = intersect(part, osc_region(to_form11_any(wit.word)));
        lit = unite(lit, part);
      }
      c.hat_literal = lit;
      c.hat = regularize(lit);
      return c;
    }
    if (all_trivial) {
      c.verdict = Verdict::Rigid;
      c.notes.push_back(empty_level ? "rigid: every cell at level " + std::to_string(k) + " is empty"
                                    : "rigid: every derived word at level " + std::to_string(k) +
                                          " is the identity");
      return c;
    }
  }
}

/// Pattern cells of the partition generated by the sets v_s...v_1(O_w).
template <class G>
struct GabCell {
  std::vector<int> pattern;
  region_t<G> region;
};

template <class G>
struct GabCells {
  std::vector<GabCell<G>> cells;
  bool separated = false;  // every nonempty cell is infinite
};

template <class G>
GabCells<G> gab_cells(const Form11<G>& f, std::size_t budget = 16) {
  using T = group_traits<G>;
  using R = region_t<G>;
  GabCells<G> out;
  R X = T::ambient();
  if (f.is_free()) {
    out.cells.push_back({{}, X});
    out.separated = X.is_infinite();
    return out;
  }
  if (f.n() > budget) throw resource_error("too many constants for the cell partition");
  R O = osc_region(f);
  std::vector<R> ones, zeros;
  G prefix = T::identity();
  for (const auto& v : f.v) {
    prefix = T::compose(v, prefix);
    R img = T::image(prefix, O);
    ones.push_back(img);
    zeros.push_back(interior_complement(img, X));
  }
  std::vector<int> pattern(f.n(), 0);
  std::function<void(std::size_t, const R&)> dfs = [&](std::size_t i, const R& cell) {
    if (cell.is_empty()) return;
    if (i == f.n()) {
      out.cells.push_back({pattern, cell});
      return;
    }
    pattern[i] = 0;
    dfs(i + 1, intersect(cell, zeros[i]));
    pattern[i] = 1;
    dfs(i + 1, intersect(cell, ones[i]));
    pattern[i] = 0;
  };
  dfs(0, X);
  out.separated = true;
  for (const auto& cell : out.cells) out.separated = out.separated && cell.region.is_infinite();
  return out;
}

}  // namespace mixid
