#include "braid/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace braid {

namespace {

// Conjugation by Delta: sigma_i -> sigma_{n-i}.  On permutation braids this
// is pi -> w0 * pi * w0.
Permutation flip(const Permutation& p, const Permutation& w0) {
  return w0.then(p).then(w0);
}

// Starting set membership: A_pi = sigma_i * (positive) iff pi(i) > pi(i+1).
bool starts_with(const Permutation& p, int i) {
  return p.image(i) > p.image(i + 1);
}

// Finishing set membership: A_pi = (positive) * sigma_i iff
// pi^{-1}(i) > pi^{-1}(i+1); the caller passes pi^{-1}.
bool finishes_with_inv(const Permutation& p_inv, int i) {
  return p_inv.image(i) > p_inv.image(i + 1);
}

// Moves every generator that can legally cross from the head of t to the
// tail of s.  Afterwards either t is the identity or (s, t) is
// left-weighted: every starting letter of t already finishes s.
bool absorb(Permutation& s, Permutation& t) {
  const int n = s.size();
  bool moved = false;
  Permutation s_inv = s.inverse();
  for (bool progress = true; progress && !t.is_identity();) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(t, i) && !finishes_with_inv(s_inv, i)) {
        const Permutation tau = Permutation::transposition(n, i);
        t = tau.then(t);   // t = sigma_i * t'
        s = s.then(tau);   // s' = s * sigma_i, still a permutation braid
        s_inv = s.inverse();
        moved = progress = true;
      }
    }
  }
  return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  NormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;
  const Permutation w0 = Permutation::longest(n);

  // Rewrite letter by letter as Delta^p * f_1 ... f_m with permutation-braid
  // factors.  sigma_i^{-1} = Delta^{-1} * B_i where B_i * sigma_i = Delta;
  // pushing the fresh Delta^{-1} to the front conjugates the factors so far.
  std::vector<Permutation> fs;
  fs.reserve(w.letters().size());
  for (int k : w.letters()) {
    const Permutation tau = Permutation::transposition(n, std::abs(k));
    if (k > 0) {
      fs.push_back(tau);
    } else {
      --nf.delta_power;
      for (auto& f : fs) f = flip(f, w0);
      fs.push_back(w0.then(tau));
    }
  }

  // Slide crossings leftward until every adjacent pair is left-weighted,
  // dropping factors that empty out and migrating full twists into the
  // Delta power (flipping everything they pass over).
  for (bool changed = true; changed;) {
    changed = false;
    std::erase_if(fs, [](const Permutation& f) { return f.is_identity(); });
    for (std::size_t i = 0; i + 1 < fs.size(); ++i)
      if (absorb(fs[i], fs[i + 1])) changed = true;
    for (std::size_t i = 0; i < fs.size();) {
      if (fs[i] == w0) {
        ++nf.delta_power;
        for (std::size_t j = 0; j < i; ++j) fs[j] = flip(fs[j], w0);
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  std::erase_if(fs, [](const Permutation& f) { return f.is_identity(); });

  nf.factors = std::move(fs);
  return nf;
}

bool equals(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("comparing words on different strand counts");
  if (exponent_sum(u) != exponent_sum(v)) return false;
  if (!(perm(u) == perm(v))) return false;
  return normal_form(u) == normal_form(v);
}

bool is_trivial(const BraidWord& w) {
  const NormalForm nf = normal_form(w);
  return nf.delta_power == 0 && nf.factors.empty();
}

std::string canonical_key(const BraidWord& w) {
  const NormalForm nf = normal_form(w);
  std::string key = std::to_string(nf.strands) + "|" + std::to_string(nf.delta_power);
  for (const Permutation& f : nf.factors) {
    key += '|';
    for (std::size_t i = 0; i < f.images().size(); ++i) {
      if (i) key += ',';
      key += std::to_string(f.images()[i]);
    }
  }
  return key;
}

BraidWord simple_word(const Permutation& p) {
  const int n = p.size();
  std::vector<int> letters;
  Permutation cur = p;
  while (!cur.is_identity()) {
    int i = 1;
    while (!starts_with(cur, i)) ++i;  // a non-identity permutation has a descent
    letters.push_back(i);
    cur = Permutation::transposition(n, i).then(cur);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord delta_word(int n) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  if (n == 1) return BraidWord(1, {});
  return simple_word(Permutation::longest(n));
}

BraidWord word_of(const NormalForm& nf) {
  BraidWord out(nf.strands, {});
  if (nf.delta_power != 0) out = power(delta_word(nf.strands), nf.delta_power);
  for (const Permutation& f : nf.factors) out = concat(out, simple_word(f));
  return out;
}

}  // namespace braid
