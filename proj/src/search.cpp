#include "braid/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "braid/cabling.hpp"
#include "braid/garside.hpp"
#include "braid/json_io.hpp"

namespace braid {

namespace {

constexpr int kGenerators[] = {-3, -2, -1, 1, 2, 3};

// Shorter first, then lexicographic on letters: a total order on spellings
// that makes the reported witness independent of enumeration order.
bool witness_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Accum {
  std::uint64_t words = 0;
  std::uint64_t candidates = 0;
  std::map<std::string, std::vector<int>> classes;
};

void record(Accum& acc, const std::string& key, const std::vector<int>& letters) {
  auto [it, inserted] = acc.classes.emplace(key, letters);
  if (!inserted && witness_less(letters, it->second)) it->second = letters;
}

void process_word(const std::vector<int>& letters, const SearchConfig& cfg, Accum& acc) {
  ++acc.words;
  const BraidWord w(4, letters);
  if (!is_candidate(w).candidate) return;
  ++acc.candidates;
  if (cfg.screens_enabled && !inner_outer_profile(w).pattern_ok) return;
  if (!is_interchanging(w).interchanging().value_or(false)) return;
  record(acc, canonical_key(w), letters);
}

// Depth-first over freely reduced words: never append the inverse of the
// last letter.
void extend(std::vector<int>& cur, int max_len, const SearchConfig& cfg, Accum& acc) {
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int g : kGenerators) {
    if (!cur.empty() && cur.back() == -g) continue;
    cur.push_back(g);
    process_word(cur, cfg, acc);
    extend(cur, max_len, cfg, acc);
    cur.pop_back();
  }
}

}  // namespace

SearchReport run_search(const SearchConfig& config) {
  if (config.max_len < 1 || config.max_len > config.hard_cap)
    throw std::invalid_argument("search length must be between 1 and the hard cap");
  if (config.workers < 1) throw std::invalid_argument("worker count must be positive");

  SearchReport report;
  report.config = config;

  // Words shorter than the shard depth run inline; each freely reduced word
  // of exactly the shard depth roots an independent shard.
  const int depth = std::min(2, config.max_len);
  Accum base;
  std::vector<std::vector<int>> shards;
  {
    std::vector<int> cur;
    for (int g1 : kGenerators) {
      cur.assign(1, g1);
      if (depth == 1) {
        shards.push_back(cur);
        continue;
      }
      process_word(cur, config, base);
      for (int g2 : kGenerators) {
        if (g2 == -g1) continue;
        cur.assign({g1, g2});
        shards.push_back(cur);
      }
    }
  }

  std::vector<Accum> results(shards.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= shards.size()) break;
      std::vector<int> cur = shards[t];
      process_word(cur, config, results[t]);
      extend(cur, config.max_len, config, results[t]);
    }
  };
  const int pool_size = std::min<int>(config.workers, static_cast<int>(shards.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < pool_size; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  report.words_enumerated = base.words;
  report.candidates = base.candidates;
  std::map<std::string, std::vector<int>> merged = std::move(base.classes);
  for (Accum& acc : results) {
    report.words_enumerated += acc.words;
    report.candidates += acc.candidates;
    for (auto& [key, letters] : acc.classes) {
      const auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(key, std::move(letters));
      else if (witness_less(letters, it->second))
        it->second = std::move(letters);
    }
  }

  for (const auto& [key, letters] : merged) {
    InterchangingClass cls;
    cls.key = key;
    cls.witness = BraidWord(4, letters);
    cls.classification = classify(cls.witness);
    if (const auto* refused = std::get_if<NotInterchanging>(&cls.classification)) {
      SearchAnomaly anomaly;
      anomaly.key = key;
      anomaly.witness = cls.witness.str();
      anomaly.detail = std::string("interchanging braid refused by classify: ") +
                       io::refusal_name(refused->reason);
      report.anomalies.push_back(std::move(anomaly));
    }
    report.classes.push_back(std::move(cls));
  }

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) throw std::runtime_error("cannot open search output file: " + config.output_path);
    io::write_search_jsonl(report, out);
    if (!out) throw std::runtime_error("failed writing search output file: " + config.output_path);
  }
  return report;
}

CosetSampleReport coset_property_sample(int max_h, int max_k) {
  if (max_h < 0 || max_k < 0)
    throw std::invalid_argument("coset sample bounds must be nonnegative");
  CosetSampleReport report;
  report.max_h = max_h;
  report.max_k = max_k;
  const BraidWord twist(4, {2, 1, 3, 2});
  for (int h = -max_h; h <= max_h; ++h) {
    for (int a = -max_k; a <= max_k; ++a) {
      for (int c = -max_k; c <= max_k; ++c) {
        BraidWord w = power(twist, h);
        w = concat(w, BraidWord(4, {2}));
        w = concat(w, power(BraidWord(4, {1}), a));
        w = concat(w, power(BraidWord(4, {3}), c));
        ++report.words_checked;
        if (!equals(derive_L(w), derive_R(w))) report.violations.push_back(w);
      }
    }
  }
  return report;
}

}  // namespace braid
