#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/interchange.hpp"

namespace braid {

struct SearchConfig {
  int max_len = 7;
  bool screens_enabled = true;  // profile screen before the 6-strand checks
  int workers = 1;
  std::string output_path;  // empty: no file written
  int hard_cap = 9;
};

/// One group element found interchanging, keyed by its normal form.
struct InterchangingClass {
  std::string key;
  BraidWord witness{4, {}};  // least spelling seen: shortest, then lexicographic
  ClassificationResult classification = NotInterchanging{};
};

struct SearchAnomaly {
  std::string key;
  std::string witness;
  std::string detail;
};

struct SearchReport {
  SearchConfig config;
  std::uint64_t words_enumerated = 0;
  std::uint64_t candidates = 0;
  std::vector<InterchangingClass> classes;  // sorted by key
  std::vector<SearchAnomaly> anomalies;     // interchanging braids classify refused
};

/// Exhaustively enumerates freely reduced 4-strand words up to
/// config.max_len, screens them, verifies the 6-strand equalities on the
/// survivors, dedups by canonical key and classifies one witness per class.
/// Deterministic for a fixed config regardless of worker count.
SearchReport run_search(const SearchConfig& config);

/// Samples the double coset h * s2^{+-1} * k (h a power of the interchange
/// ribbon twist, k a product of outer-strand twists) and verifies the
/// internal associativity equality on every sample.
struct CosetSampleReport {
  int max_h = 0;
  int max_k = 0;
  std::uint64_t words_checked = 0;
  std::vector<BraidWord> violations;
};

CosetSampleReport coset_property_sample(int max_h, int max_k);

}  // namespace braid
