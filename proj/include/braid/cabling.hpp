#pragma once

#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

/// widths[i] = number of parallel strands replacing strand i+1.
using CableWidths = std::vector<int>;

/// Replaces each strand of w by a flat ribbon of parallel strands.  Each
/// crossing sigma_i^e becomes the block transposition of the two ribbons
/// currently at positions i, i+1: with left width P starting at position a
/// and right width Q, it emits, for p = P down to 1, the run
/// sigma_{a+p-1}^e ... sigma_{a+p+Q-2}^e, then swaps the two widths.
/// Output letters are reproducible byte for byte.
BraidWord cable(const BraidWord& w, const CableWidths& widths);

// The four 6-strand braids induced by a 4-strand braid b when its middle
// crossing is read as an operation on paired inputs.  L/R pair b with a
// ribboned copy of itself on the first/last four strands (the "internal"
// reading); the primed pair ribbons the inner or outer strands first (the
// "external" reading).  b underlies a coherent interchange only if
// derive_L == derive_R and derive_Lp == derive_Rp in B_6.

BraidWord derive_L(const BraidWord& b);
BraidWord derive_R(const BraidWord& b);
BraidWord derive_Lp(const BraidWord& b);
BraidWord derive_Rp(const BraidWord& b);

}  // namespace braid
