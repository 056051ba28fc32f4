#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace braid {

/// Permutation of {1..n}.  image(i) is where i is sent; for the permutation
/// of a braid this is the final position of the strand starting at position i.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swaps i and i+1.
  static Permutation transposition(int n, int i);
  /// The order-reversing permutation i -> n+1-i (underlies the half twist).
  static Permutation longest(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition "apply *this first, then g".
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle decomposition; cycles start at their least element and are
  /// ordered by that element.  Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;  // images_[i-1] = image of i
};

/// A word in the Artin generators of B_n.  Letter k with 1 <= |k| <= n-1
/// encodes sigma_{|k|} for k > 0 and its inverse for k < 0.  Words read left
/// to right = top to bottom of the diagram, and a positive crossing takes the
/// strand at position i over the strand at position i+1.
///
/// Text form: "n: k1 k2 ... km", e.g. "4: 2 1 3 2 2 -1 -3"; "4: " is the
/// identity of B_4.
class BraidWord {
public:
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord parse(std::string_view text);
  std::string str() const;

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter-level equality, not equality in the braid group.
  bool operator==(const BraidWord&) const = default;

private:
  int strands_;
  std::vector<int> letters_;
};

/// Strands named by their initial positions.
using StrandSet = std::set<int>;

BraidWord concat(const BraidWord& u, const BraidWord& v);

/// Image of w under the canonical epimorphism B_n -> S_n.
Permutation perm(const BraidWord& w);

/// Group inverse: letters reversed with signs negated.
BraidWord inverse(const BraidWord& w);

/// Half-turn of the diagram in the plane: letters reversed, index i -> n-i.
/// An involution, and an anti-homomorphism for concatenation.
BraidWord rotate180(const BraidWord& w);

/// Sub-braid on the surviving strands, in B_{n-|dead|}.  Strands are tracked
/// position by position; a crossing involving a dead strand is dropped but
/// still swaps positions.  The emitted word is freely reduced.
BraidWord delete_strands(const BraidWord& w, const StrandSet& dead);

/// Places w on strands offset..offset+n-1 of B_total.
BraidWord embed(const BraidWord& w, int total, int offset);

/// Sum of letter signs (abelianization); invariant under braid relations.
int exponent_sum(const BraidWord& w);

/// Cancels adjacent k, -k pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// k-th power of w in the group; negative k uses the inverse.
BraidWord power(const BraidWord& w, int k);

}  // namespace braid
