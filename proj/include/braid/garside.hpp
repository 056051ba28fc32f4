#pragma once

#include <string>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

/// Left-greedy normal form Delta^p s_1 ... s_l.  Each factor is a
/// permutation braid (positive, every strand pair crossing at most once),
/// stored by its permutation; no factor is trivial or the half twist, and
/// adjacent factors are left-weighted.  Unique per group element, so the
/// word problem reduces to comparing these.
struct NormalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const BraidWord& w);

/// Equality in the braid group.  Throws if the strand counts differ.
bool equals(const BraidWord& u, const BraidWord& v);

bool is_trivial(const BraidWord& w);

/// Deterministic string key; two words get the same key iff they are equal
/// in the group.  Stable across runs and suitable for dedup maps.
std::string canonical_key(const BraidWord& w);

/// Positive word for the half twist Delta of B_n.
BraidWord delta_word(int n);

/// Shortest positive word realizing a permutation braid.
BraidWord simple_word(const Permutation& p);

/// A word spelling the normal form back out (Delta powers, then factors).
BraidWord word_of(const NormalForm& nf);

}  // namespace braid
