#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

/// Invariants of the closure of a braid word.  Components are the cycles of
/// the braid's permutation, ordered by least strand; writhe[i] is the signed
/// self-crossing count of component i, and pairwise_lk maps component index
/// pairs (i < j) to their linking number (half the signed crossing tally).
/// Pairs with linking number zero are omitted.
struct LinkSummary {
  std::vector<std::vector<int>> components;
  std::map<std::pair<int, int>, int> pairwise_lk;
  std::vector<int> writhe;
};

LinkSummary closure_summary(const BraidWord& b);

enum class ConjugacyVerdict { distinct_closures, inconclusive };

/// Certifies that u and v are not conjugate when a conjugation-invariant
/// disagrees: exponent sum, component cycle type, or the multiset of
/// pairwise linking numbers.  Agreement proves nothing, hence inconclusive.
ConjugacyVerdict conjugacy_certificate(const BraidWord& u, const BraidWord& v);

/// True iff closure invariants rule out conjugacy of (s1 s3)^k and
/// (s2 s1 s3 s2)^k, the equation a doubled crossing would have to satisfy
/// against the interchange.  k must be odd.
bool braiding_obstruction(int k);

}  // namespace braid
