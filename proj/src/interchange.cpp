#include "braid/interchange.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "braid/cabling.hpp"
#include "braid/garside.hpp"

namespace braid {

namespace {

const BraidWord& require_four(const BraidWord& b) {
  if (b.strands() != 4)
    throw std::invalid_argument("interchange analysis is defined for 4-strand words");
  return b;
}

void append_block(std::vector<int>& letters, std::initializer_list<int> block, int times,
                  bool negate) {
  for (int r = 0; r < times; ++r)
    for (int k : block) letters.push_back(negate ? -k : k);
}

BraidWord generator_power(int strands, int gen, int k) {
  std::vector<int> letters(static_cast<std::size_t>(std::abs(k)), k >= 0 ? gen : -gen);
  return BraidWord(strands, std::move(letters));
}

}  // namespace

BraidWord family(int n, Sign s) {
  if (n < 0) throw std::invalid_argument("family index must be nonnegative");
  const bool neg = s == Sign::minus;
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(6 * n + 1));
  append_block(letters, {2, 1, 3, 2}, n, neg);
  append_block(letters, {2}, 1, neg);
  append_block(letters, {1, 3}, n, !neg);
  return BraidWord(4, std::move(letters));
}

InterchangeReport is_candidate(const BraidWord& b) {
  require_four(b);
  InterchangeReport rep;
  rep.permutation_ok = perm(b) == Permutation({1, 3, 2, 4});
  static const std::pair<int, int> kUnitPairs[] = {{1, 2}, {3, 4}, {1, 3}, {2, 4}};
  for (auto [x, y] : kUnitPairs)
    if (!is_trivial(delete_strands(b, {x, y}))) rep.unit_failures.emplace_back(x, y);
  rep.candidate = rep.permutation_ok && rep.unit_failures.empty();
  return rep;
}

InterchangeReport is_interchanging(const BraidWord& b) {
  InterchangeReport rep = is_candidate(b);
  rep.internal_assoc = equals(derive_L(b), derive_R(b));
  rep.external_assoc = equals(derive_Lp(b), derive_Rp(b));
  return rep;
}

InnerOuterProfile inner_outer_profile(const BraidWord& b) {
  require_four(b);
  InnerOuterProfile prof;
  prof.inner = exponent_sum(delete_strands(b, {1, 4}));
  prof.outer = exponent_sum(delete_strands(b, {2, 3}));
  const int step = prof.inner > 0 ? 1 : -1;
  prof.pattern_ok = prof.inner % 2 != 0 &&
                    (prof.outer == prof.inner + step || prof.outer == prof.inner - step);
  return prof;
}

ClassificationResult classify(const BraidWord& b) {
  const InterchangeReport rep = is_candidate(b);
  if (!rep.permutation_ok) return NotInterchanging{Refusal::bad_permutation};
  if (!rep.unit_failures.empty()) return NotInterchanging{Refusal::unit_failure};
  const InnerOuterProfile prof = inner_outer_profile(b);
  if (!prof.pattern_ok) return NotInterchanging{Refusal::profile_mismatch};

  // The profile pins down the only family member b could be.
  const Sign s = prof.inner > 0 ? Sign::plus : Sign::minus;
  const int n =
      std::abs(prof.outer) > std::abs(prof.inner) ? std::abs(prof.inner) : std::abs(prof.outer);
  if (!equals(b, family(n, s))) {
    std::clog << "classify: profile admits (" << n << ", " << sign_char(s)
              << ") but \"" << b.str() << "\" is a different braid\n";
    return NotInterchanging{Refusal::profile_mismatch};
  }
  return InFamily{n, s};
}

InterchangeClass equivalence_class(const ClassificationResult& r) {
  const InFamily* fam = std::get_if<InFamily>(&r);
  if (!fam) throw std::invalid_argument("equivalence class is defined for family members only");
  const bool even = fam->n % 2 == 0;
  return (fam->sign == Sign::plus) == even ? InterchangeClass::plus : InterchangeClass::minus;
}

std::vector<ScreenResult> obstruction_screens(const BraidWord& b) {
  require_four(b);
  const bool cand = is_candidate(b).candidate;

  const BraidWord d2 = delete_strands(b, {2});
  const BraidWord d3 = delete_strands(b, {3});
  const bool d2_trivial = is_trivial(d2);
  const bool d3_trivial = is_trivial(d3);

  ScreenResult a{'A', false, false};
  if (cand && d2_trivial && d3_trivial) {
    a.applicable = true;
    a.pass = equals(b, BraidWord(4, {2})) || equals(b, BraidWord(4, {-2}));
  }

  ScreenResult bscr{'B', false, false};
  if (cand && is_trivial(delete_strands(b, {2, 3}))) {
    bscr.applicable = true;
    bscr.pass = d2_trivial && d3_trivial;
  }

  // After deleting strand 1 the middle pair sits at positions 1,2; after
  // deleting strand 4 it sits at positions 2,3.
  ScreenResult c{'C', false, false};
  const BraidWord d1 = delete_strands(b, {1});
  const BraidWord d4 = delete_strands(b, {4});
  const int k1 = exponent_sum(d1);
  const int k4 = exponent_sum(d4);
  if (cand && equals(d1, generator_power(3, 1, k1)) && equals(d4, generator_power(3, 2, k4))) {
    c.applicable = true;
    c.pass = std::abs(k1) == 1 && std::abs(k4) == 1;
  }

  return {a, bscr, c};
}

std::pair<BraidWord, BraidWord> hexagon_words(int k) {
  if (k == 0 || k % 2 == 0)
    throw std::invalid_argument("hexagon checks are defined for odd crossing powers");
  const BraidWord lhs =
      concat(generator_power(3, 1, k), generator_power(3, 2, k));
  const BraidWord rhs = cable(generator_power(2, 1, k), {1, 2});
  return {lhs, rhs};
}

bool hexagon_check(int k) {
  const auto [lhs, rhs] = hexagon_words(k);
  return equals(lhs, rhs);
}

bool hexagon_check_mirror(int k) {
  if (k == 0 || k % 2 == 0)
    throw std::invalid_argument("hexagon checks are defined for odd crossing powers");
  const BraidWord lhs =
      concat(generator_power(3, 2, k), generator_power(3, 1, k));
  const BraidWord rhs = cable(generator_power(2, 1, k), {2, 1});
  return equals(lhs, rhs);
}

}  // namespace braid
