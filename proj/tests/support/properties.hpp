#pragma once

// Randomized algebraic-law suites shared by the property test runner and the
// acceptance binary.  Each suite runs `cases` independent trials from a fixed
// seed and reports the first counterexample it finds.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>

#include "braid/braid_word.hpp"
#include "braid/cabling.hpp"
#include "braid/garside.hpp"
#include "braid/interchange.hpp"
#include "braid/links.hpp"
#include "oracles.hpp"

namespace braid::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  bool ok = true;
  std::string detail;  // first counterexample, empty when ok
};

namespace detail {

inline void fail(PropertyResult& r, const std::string& what) {
  if (!r.ok) return;
  r.ok = false;
  r.detail = what;
}

inline int rand_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random freely reduced word whose permutation is (2 3), the shape every
/// interchange braid must have; a positive permutation braid fixes up the tail.
inline BraidWord random_perm23_word(std::mt19937& rng, int approx_len) {
  const BraidWord w = random_word(4, approx_len, rng, true);
  const Permutation target({1, 3, 2, 4});
  const Permutation residue = perm(w).inverse().then(target);
  return concat(w, simple_word(residue));
}

}  // namespace detail

inline PropertyResult prop_perm_homomorphism(unsigned seed, std::size_t cases) {
  PropertyResult r{"permutation homomorphism"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 2, 6);
    const BraidWord u = random_word(n, detail::rand_int(rng, 0, 12), rng);
    const BraidWord v = random_word(n, detail::rand_int(rng, 0, 12), rng);
    if (perm(concat(u, v)) != perm(u).then(perm(v)))
      detail::fail(r, "perm(uv) != perm(u)perm(v): u=" + u.str() + " v=" + v.str());
    if (perm(inverse(u)) != perm(u).inverse())
      detail::fail(r, "perm(u^-1) != perm(u)^-1: u=" + u.str());
  }
  return r;
}

inline PropertyResult prop_rotate180_laws(unsigned seed, std::size_t cases) {
  PropertyResult r{"half-turn involution / anti-homomorphism"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 2, 6);
    const BraidWord u = random_word(n, detail::rand_int(rng, 0, 12), rng);
    const BraidWord v = random_word(n, detail::rand_int(rng, 0, 12), rng);
    if (rotate180(rotate180(u)) != u)
      detail::fail(r, "rotate180 not an involution on " + u.str());
    if (rotate180(concat(u, v)) != concat(rotate180(v), rotate180(u)))
      detail::fail(r, "rotate180(uv) != rotate180(v)rotate180(u): u=" + u.str() + " v=" + v.str());
    if (exponent_sum(rotate180(u)) != exponent_sum(u))
      detail::fail(r, "rotate180 changed the exponent sum of " + u.str());
  }
  return r;
}

inline PropertyResult prop_cable_laws(unsigned seed, std::size_t cases) {
  PropertyResult r{"cable compositionality and collapse"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 2, 4);
    CableWidths widths(static_cast<std::size_t>(n));
    for (int& wd : widths) wd = detail::rand_int(rng, 1, 3);

    if (!cable(BraidWord(n, {}), widths).empty())
      detail::fail(r, "cable of the identity is not the identity");

    // Compositionality: widths for the second factor travel with the strands.
    const BraidWord u = random_word(n, detail::rand_int(rng, 0, 8), rng);
    const BraidWord v = random_word(n, detail::rand_int(rng, 0, 8), rng);
    const Permutation pu_inv = perm(u).inverse();
    CableWidths moved(widths.size());
    for (int j = 1; j <= n; ++j) moved[j - 1] = widths[static_cast<std::size_t>(pu_inv.image(j) - 1)];
    if (cable(concat(u, v), widths) != concat(cable(u, widths), cable(v, moved)))
      detail::fail(r, "cable not compositional: u=" + u.str() + " v=" + v.str());

    // Collapse: keeping one strand per ribbon recovers the original word.
    const BraidWord w = random_word(n, detail::rand_int(rng, 0, 10), rng, true);
    StrandSet dead;
    int at = 1;
    for (int wd : widths) {
      for (int s = 1; s < wd; ++s) dead.insert(at + s);
      at += wd;
    }
    if (dead.empty()) {  // every ribbon has width 1: cabling is the identity map
      if (cable(w, widths) != w) detail::fail(r, "trivial cabling changed " + w.str());
    } else if (delete_strands(cable(w, widths), dead) != w) {
      detail::fail(r, "collapse of a cabling lost information: w=" + w.str());
    }
  }
  return r;
}

/// Pool of interchange candidates: every short one, diversified by rewriting.
inline std::vector<BraidWord> candidate_pool(int max_len = 5) {
  return enumerate_words(max_len, [](const BraidWord& w) { return is_candidate(w).candidate; });
}

inline PropertyResult prop_unit_compatibility(unsigned seed, std::size_t cases) {
  PropertyResult r{"derived-braid unit compatibility"};
  std::mt19937 rng(seed);
  const std::vector<BraidWord> pool = candidate_pool();
  if (pool.empty()) {
    detail::fail(r, "no candidate braids enumerated");
    return r;
  }
  for (; r.cases < cases && r.ok; ++r.cases) {
    const BraidWord& base =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const BraidWord b = random_rewrite(base, rng, 8, 28);
    if (!is_candidate(b).candidate) {
      detail::fail(r, "rewriting broke candidacy of " + base.str() + " -> " + b.str());
      break;
    }
    if (!equals(delete_strands(derive_L(b), {5, 6}), b))
      detail::fail(r, "deleting strands 5,6 of the L-derivation lost " + b.str());
    if (!equals(delete_strands(derive_R(b), {1, 2}), b))
      detail::fail(r, "deleting strands 1,2 of the R-derivation lost " + b.str());
  }
  return r;
}

inline PropertyResult prop_lk_conjugation_invariance(unsigned seed, std::size_t cases) {
  PropertyResult r{"linking numbers invariant under conjugation"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 3, 6);
    const BraidWord w = random_word(n, detail::rand_int(rng, 0, 12), rng);
    const BraidWord g = random_word(n, detail::rand_int(rng, 0, 8), rng);
    const LinkSummary a = closure_summary(w);
    const LinkSummary b = closure_summary(concat(concat(inverse(g), w), g));

    const auto cycle_type = [](const LinkSummary& s) {
      std::vector<std::size_t> sizes;
      for (const auto& c : s.components) sizes.push_back(c.size());
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    };
    const auto lk_multiset = [](const LinkSummary& s) {
      std::vector<int> vals;
      for (const auto& [pair, lk] : s.pairwise_lk) vals.push_back(lk);
      std::sort(vals.begin(), vals.end());
      return vals;
    };
    if (cycle_type(a) != cycle_type(b))
      detail::fail(r, "conjugation changed the cycle type of " + w.str() + " by " + g.str());
    if (lk_multiset(a) != lk_multiset(b))
      detail::fail(r, "conjugation changed the lk multiset of " + w.str() + " by " + g.str());

    int crossings = std::accumulate(a.writhe.begin(), a.writhe.end(), 0);
    for (const auto& [pair, lk] : a.pairwise_lk) crossings += 2 * lk;
    if (crossings != exponent_sum(w))
      detail::fail(r, "self-crossings + 2*lk != exponent sum for " + w.str());
  }
  return r;
}

inline PropertyResult prop_word_problem_soundness(unsigned seed, std::size_t cases) {
  PropertyResult r{"group equality sound under relation rewriting"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 3, 5);
    const BraidWord w = random_word(n, detail::rand_int(rng, 0, 10), rng);
    const BraidWord w2 = random_rewrite(w, rng);
    if (!equals(w, w2))
      detail::fail(r, "rewrite judged unequal: " + w.str() + " vs " + w2.str());
    if (canonical_key(w) != canonical_key(w2))
      detail::fail(r, "rewrite changed the canonical key of " + w.str());
    if (exponent_sum(w2) != exponent_sum(w) || perm(w2) != perm(w))
      detail::fail(r, "rewriter broke an invariant on " + w.str());
    if (!is_trivial(concat(w, inverse(w))))
      detail::fail(r, "w * w^-1 not trivial for " + w.str());
  }
  return r;
}

inline PropertyResult prop_positive_oracle_agreement(unsigned seed, std::size_t cases) {
  PropertyResult r{"equality matches the positive-word rewriting oracle"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 3, 4);
    const int len = detail::rand_int(rng, 1, 6);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& k : letters) k = detail::rand_int(rng, 1, n - 1);
    const BraidWord u(n, letters);
    const auto cls = positive_class(u);

    std::vector<std::vector<int>> members(cls.begin(), cls.end());
    const BraidWord v(
        n, members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)]);
    if (!equals(u, v))
      detail::fail(r, "oracle says equal, equals disagrees: " + u.str() + " vs " + v.str());

    for (int tries = 0; tries < 20; ++tries) {
      std::vector<int> other(static_cast<std::size_t>(len));
      for (int& k : other) k = detail::rand_int(rng, 1, n - 1);
      if (cls.count(other)) continue;
      if (equals(u, BraidWord(n, other)))
        detail::fail(r, "oracle says distinct, equals disagrees: " + u.str() + " vs " +
                            BraidWord(n, other).str());
      break;
    }
  }
  return r;
}

inline PropertyResult prop_delete_functoriality(unsigned seed, std::size_t cases) {
  PropertyResult r{"strand deletion compositional"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 4, 6);
    const BraidWord u = random_word(n, detail::rand_int(rng, 0, 8), rng);
    const BraidWord v = random_word(n, detail::rand_int(rng, 0, 8), rng);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    StrandSet dead(all.begin(), all.begin() + detail::rand_int(rng, 1, n - 2));
    StrandSet moved;
    for (int s : dead) moved.insert(perm(u).image(s));
    if (!equals(delete_strands(concat(u, v), dead),
                concat(delete_strands(u, dead), delete_strands(v, moved))))
      detail::fail(r, "delete(uv) != delete(u)delete(v'): u=" + u.str() + " v=" + v.str());
  }
  return r;
}

inline PropertyResult prop_rotation_duality(unsigned seed, std::size_t cases) {
  PropertyResult r{"primed derivations are half-turn duals"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const BraidWord b = detail::random_perm23_word(rng, detail::rand_int(rng, 0, 8));
    if (!equals(derive_Lp(b), rotate180(derive_L(rotate180(b)))))
      detail::fail(r, "L' != rot(L(rot)) for " + b.str());
    if (!equals(derive_Rp(b), rotate180(derive_R(rotate180(b)))))
      detail::fail(r, "R' != rot(R(rot)) for " + b.str());
  }
  return r;
}

inline PropertyResult prop_classification_constancy(unsigned seed, std::size_t cases) {
  PropertyResult r{"classification constant on equal words"};
  std::mt19937 rng(seed);
  for (; r.cases < cases && r.ok; ++r.cases) {
    const int n = detail::rand_int(rng, 0, 3);
    const Sign s = detail::rand_int(rng, 0, 1) ? Sign::plus : Sign::minus;
    const BraidWord f = family(n, s);
    const BraidWord f2 = random_rewrite(f, rng, 10, 40);
    const ClassificationResult c = classify(f2);
    const auto* in = std::get_if<InFamily>(&c);
    if (!in || in->n != n || in->sign != s) {
      detail::fail(r, "rewritten family member misclassified: " + f2.str());
      continue;
    }
    if (equivalence_class(c) != equivalence_class(classify(f)))
      detail::fail(r, "equivalence class not constant on " + f2.str());
  }
  return r;
}

}  // namespace braid::testing
