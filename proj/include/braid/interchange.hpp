#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

enum class Sign { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// The one-parameter family of 4-strand braids that can underlie a coherent
/// interchange:  (s2 s1 s3 s2)^{+-n} s2^{+-1} (s1 s3)^{-+n}, spelled with the
/// letters of each block sign-flipped for the minus member.
BraidWord family(int n, Sign s);

/// Everything a 4-strand braid must satisfy to underlie an interchange.
/// candidate covers the cheap necessary conditions; the two associativity
/// verdicts compare the derived 6-strand braids and are only present when
/// they were computed.
struct InterchangeReport {
  bool candidate = false;
  bool permutation_ok = false;
  std::vector<std::pair<int, int>> unit_failures;  // among (1,2),(3,4),(1,3),(2,4)
  std::optional<bool> internal_assoc;              // derive_L == derive_R
  std::optional<bool> external_assoc;              // derive_Lp == derive_Rp

  std::optional<bool> interchanging() const {
    if (!internal_assoc || !external_assoc) return std::nullopt;
    return candidate && *internal_assoc && *external_assoc;
  }
};

/// Permutation and unit-deletion screen only; associativity left unset.
InterchangeReport is_candidate(const BraidWord& b);

/// Full report including both associativity verdicts.
InterchangeReport is_interchanging(const BraidWord& b);

/// Exponents of the two 2-strand sub-braids: inner keeps strands {2,3},
/// outer keeps strands {1,4}.  pattern_ok says they fit the family shape:
/// inner odd, outer adjacent to it with the same handedness.
struct InnerOuterProfile {
  int inner = 0;
  int outer = 0;
  bool pattern_ok = false;
};

InnerOuterProfile inner_outer_profile(const BraidWord& b);

struct InFamily {
  int n = 0;
  Sign sign = Sign::plus;
  bool operator==(const InFamily&) const = default;
};

enum class Refusal { bad_permutation, unit_failure, profile_mismatch, associativity_failure };

struct NotInterchanging {
  Refusal reason = Refusal::bad_permutation;
  bool operator==(const NotInterchanging&) const = default;
};

using ClassificationResult = std::variant<InFamily, NotInterchanging>;

/// Decides whether b is one of the family braids.  Screens in order:
/// permutation, unit deletions, inner/outer profile; a braid passing every
/// screen is finally checked for equality against the reconstructed family
/// member, and refused (with a log line) if that fails.
ClassificationResult classify(const BraidWord& b);

/// The two equivalence classes of interchanges, represented by n = 0.
/// family(n, +) is plus-equivalent iff n is even; family(n, -) iff n is odd.
enum class InterchangeClass { plus, minus };

InterchangeClass equivalence_class(const ClassificationResult& r);

/// Necessary-condition screens from single- and double-strand deletions.
/// A screen is applicable when its hypothesis holds; an applicable screen
/// that fails proves the braid cannot be interchanging.
///   A: both middle single-strand deletions trivial => b must be s2^{+-1}.
///   B: outer pair deletion trivial => both middle single deletions trivial.
///   C: first/last single deletions are pure powers of the surviving middle
///      pair's generator => that power must be +-1.
struct ScreenResult {
  char screen = 'A';
  bool applicable = false;
  bool pass = false;  // meaningful only when applicable
};

std::vector<ScreenResult> obstruction_screens(const BraidWord& b);

/// The two 3-strand words whose comparison decides the first coherence
/// hexagon for a k-fold crossing: s1^k s2^k against the cabled k-fold
/// crossing of strand 1 with the doubled strand 2.
std::pair<BraidWord, BraidWord> hexagon_words(int k);

/// True iff the hexagon commutes for the k-fold crossing (k odd).  Holds for
/// k = +-1 and fails for every other odd k.
bool hexagon_check(int k);

/// Mirror form of the hexagon (doubled strand on the left); equivalent to
/// hexagon_check by a rotation and sign flip.
bool hexagon_check_mirror(int k);

}  // namespace braid
