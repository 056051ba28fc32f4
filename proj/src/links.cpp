#include "braid/links.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braid {

LinkSummary closure_summary(const BraidWord& b) {
  const int n = b.strands();
  LinkSummary out;
  out.components = perm(b).cycles();

  std::vector<int> comp_of(n + 1, 0);
  for (std::size_t c = 0; c < out.components.size(); ++c)
    for (int s : out.components[c]) comp_of[s] = static_cast<int>(c);
  out.writhe.assign(out.components.size(), 0);

  std::map<std::pair<int, int>, int> tally;
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int k : b.letters()) {
    const int i = std::abs(k);
    const int sign = k > 0 ? 1 : -1;
    const int ca = comp_of[strand_at[i - 1]];
    const int cb = comp_of[strand_at[i]];
    if (ca == cb)
      out.writhe[ca] += sign;
    else
      tally[{std::min(ca, cb), std::max(ca, cb)}] += sign;
    std::swap(strand_at[i - 1], strand_at[i]);
  }
  for (const auto& [pair, t] : tally) {
    if (t % 2 != 0)
      throw std::logic_error("odd crossing tally between closure components");
    // Zero tallies are dropped: a pair whose crossings cancel links exactly
    // like a pair that never crosses, and the summary must not depend on
    // which word spells the braid.
    if (t != 0) out.pairwise_lk[pair] = t / 2;
  }
  return out;
}

ConjugacyVerdict conjugacy_certificate(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("comparing words on different strand counts");
  if (exponent_sum(u) != exponent_sum(v)) return ConjugacyVerdict::distinct_closures;

  const LinkSummary su = closure_summary(u);
  const LinkSummary sv = closure_summary(v);

  const auto cycle_type = [](const LinkSummary& s) {
    std::vector<std::size_t> type;
    type.reserve(s.components.size());
    for (const auto& c : s.components) type.push_back(c.size());
    std::sort(type.begin(), type.end());
    return type;
  };
  if (cycle_type(su) != cycle_type(sv)) return ConjugacyVerdict::distinct_closures;

  const auto lk_multiset = [](const LinkSummary& s) {
    std::vector<int> lks;
    lks.reserve(s.pairwise_lk.size());
    for (const auto& [pair, lk] : s.pairwise_lk) lks.push_back(lk);
    std::sort(lks.begin(), lks.end());
    return lks;
  };
  if (lk_multiset(su) != lk_multiset(sv)) return ConjugacyVerdict::distinct_closures;

  return ConjugacyVerdict::inconclusive;
}

bool braiding_obstruction(int k) {
  if (k == 0 || k % 2 == 0)
    throw std::invalid_argument("braiding obstruction is defined for odd powers");
  const BraidWord ribbon = power(BraidWord(4, {1, 3}), k);
  const BraidWord interchange = power(BraidWord(4, {2, 1, 3, 2}), k);
  return conjugacy_certificate(ribbon, interchange) == ConjugacyVerdict::distinct_closures;
}

}  // namespace braid
