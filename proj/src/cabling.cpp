#include "braid/cabling.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braid {

BraidWord cable(const BraidWord& w, const CableWidths& widths) {
  if (static_cast<int>(widths.size()) != w.strands())
    throw std::invalid_argument("cable widths must list one width per strand");
  for (int wd : widths)
    if (wd < 1) throw std::invalid_argument("cable widths must be positive");

  const int total = std::accumulate(widths.begin(), widths.end(), 0);
  CableWidths cur = widths;  // widths travel with the ribbons
  std::vector<int> letters;
  for (int k : w.letters()) {
    const int i = std::abs(k);
    const int e = k > 0 ? 1 : -1;
    const int P = cur[i - 1];
    const int Q = cur[i];
    const int a = std::accumulate(cur.begin(), cur.begin() + (i - 1), 1);
    for (int p = P; p >= 1; --p)
      for (int q = 0; q < Q; ++q) letters.push_back(e * (a + p - 1 + q));
    std::swap(cur[i - 1], cur[i]);
  }
  return BraidWord(total, std::move(letters));
}

namespace {

const BraidWord& require_four(const BraidWord& b) {
  if (b.strands() != 4)
    throw std::invalid_argument("derived braids are defined for 4-strand words");
  return b;
}

}  // namespace

BraidWord derive_L(const BraidWord& b) {
  require_four(b);
  return concat(embed(b, 6, 1), cable(b, {2, 2, 1, 1}));
}

BraidWord derive_R(const BraidWord& b) {
  require_four(b);
  return concat(embed(b, 6, 3), cable(b, {1, 1, 2, 2}));
}

BraidWord derive_Lp(const BraidWord& b) {
  require_four(b);
  return concat(cable(b, {1, 2, 1, 2}), embed(b, 6, 3));
}

BraidWord derive_Rp(const BraidWord& b) {
  require_four(b);
  return concat(cable(b, {2, 1, 2, 1}), embed(b, 6, 1));
}

}  // namespace braid
