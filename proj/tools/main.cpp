#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braid/braid_word.hpp"
#include "braid/cabling.hpp"
#include "braid/garside.hpp"
#include "braid/interchange.hpp"
#include "braid/json_io.hpp"
#include "braid/links.hpp"
#include "braid/search.hpp"

namespace {

using braid::BraidWord;
using nlohmann::json;

int default_workers() {
  if (const char* env = std::getenv("INTERBRAID_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  std::vector<int> out;
  int v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("expected a comma-separated list of integers");
  return out;
}

std::string cycle_text(const braid::Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Options shared by the subcommands that take a single braid word: either a
// positional word or --file with one word per line (JSON lines out).
struct WordArgs {
  std::string word;
  std::string file;
  bool plain = false;
};

void add_word_args(CLI::App* sub, WordArgs& args) {
  sub->add_option("word", args.word, "braid word, e.g. \"4: 2 1 3 2\"");
  sub->add_option("--file", args.file, "read one braid word per line and emit JSON lines")
      ->check(CLI::ExistingFile);
  sub->add_flag("--plain", args.plain, "plain text instead of JSON");
}

using WordHandler = std::function<json(const BraidWord&)>;
using PlainHandler = std::function<std::string(const BraidWord&)>;

void run_word_command(const WordArgs& args, const WordHandler& handler,
                      const PlainHandler& plain) {
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw std::runtime_error("cannot open " + args.file);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        std::cout << handler(BraidWord::parse(line)).dump() << '\n';
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(args.file + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    return;
  }
  if (args.word.empty()) throw std::invalid_argument("expected a braid word (or --file)");
  const BraidWord w = BraidWord::parse(args.word);
  if (args.plain && plain)
    std::cout << plain(w) << '\n';
  else
    std::cout << handler(w).dump() << '\n';
}

std::string normal_form_text(const braid::NormalForm& nf) {
  std::string out = "delta^" + std::to_string(nf.delta_power);
  for (const auto& f : nf.factors) {
    out += " [";
    for (std::size_t i = 0; i < f.images().size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f.images()[i]);
    }
    out += ']';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid computations for interchange coherence on four strands"};
  app.require_subcommand(1);
  int rc = 0;

  WordArgs normalize_args;
  auto* normalize = app.add_subcommand("normalize", "left-greedy normal form of a word");
  add_word_args(normalize, normalize_args);
  normalize->callback([&] {
    run_word_command(
        normalize_args, [](const BraidWord& w) { return braid::io::to_json(normal_form(w)); },
        [](const BraidWord& w) { return normal_form_text(normal_form(w)); });
  });

  struct {
    std::string u, v;
    bool quiet = false;
    bool plain = false;
  } equal_args;
  auto* equal = app.add_subcommand("equal", "decide equality of two words in the braid group");
  equal->add_option("u", equal_args.u)->required();
  equal->add_option("v", equal_args.v)->required();
  equal->add_flag("--quiet", equal_args.quiet, "no output; exit 0 iff equal");
  equal->add_flag("--plain", equal_args.plain);
  equal->callback([&] {
    const bool eq =
        braid::equals(BraidWord::parse(equal_args.u), BraidWord::parse(equal_args.v));
    if (equal_args.quiet)
      rc = eq ? 0 : 1;
    else if (equal_args.plain)
      std::cout << (eq ? "equal" : "unequal") << '\n';
    else
      std::cout << json{{"equal", eq}}.dump() << '\n';
  });

  WordArgs perm_args;
  auto* permc = app.add_subcommand("perm", "induced permutation of a word");
  add_word_args(permc, perm_args);
  permc->callback([&] {
    run_word_command(
        perm_args, [](const BraidWord& w) { return braid::io::to_json(perm(w)); },
        [](const BraidWord& w) { return cycle_text(perm(w)); });
  });

  WordArgs delete_args;
  std::string delete_strands_opt;
  auto* del = app.add_subcommand("delete", "sub-braid after deleting strands");
  add_word_args(del, delete_args);
  del->add_option("--strands", delete_strands_opt, "strands to delete, e.g. 1,4")->required();
  del->callback([&] {
    const auto dead_list = parse_int_list(delete_strands_opt);
    const braid::StrandSet dead(dead_list.begin(), dead_list.end());
    run_word_command(
        delete_args,
        [&](const BraidWord& w) { return json{{"word", delete_strands(w, dead).str()}}; },
        [&](const BraidWord& w) { return delete_strands(w, dead).str(); });
  });

  WordArgs rotate_args;
  auto* rotate = app.add_subcommand("rotate", "half-turn rotation of the diagram");
  add_word_args(rotate, rotate_args);
  rotate->callback([&] {
    run_word_command(
        rotate_args, [](const BraidWord& w) { return json{{"word", rotate180(w).str()}}; },
        [](const BraidWord& w) { return rotate180(w).str(); });
  });

  WordArgs cable_args;
  std::string widths_opt;
  auto* cablec = app.add_subcommand("cable", "replace strands by ribbons of parallel strands");
  add_word_args(cablec, cable_args);
  cablec->add_option("--widths", widths_opt, "ribbon widths, e.g. 2,2,1,1")->required();
  cablec->callback([&] {
    const braid::CableWidths widths = parse_int_list(widths_opt);
    run_word_command(
        cable_args, [&](const BraidWord& w) { return json{{"word", cable(w, widths).str()}}; },
        [&](const BraidWord& w) { return cable(w, widths).str(); });
  });

  WordArgs derive_args;
  auto* derive = app.add_subcommand("derive", "the four derived 6-strand braids and verdicts");
  add_word_args(derive, derive_args);
  derive->callback([&] {
    const auto report = [](const BraidWord& w) {
      const BraidWord l = derive_L(w), r = derive_R(w), lp = derive_Lp(w), rp = derive_Rp(w);
      return json{{"L", l.str()},
                  {"R", r.str()},
                  {"Lp", lp.str()},
                  {"Rp", rp.str()},
                  {"internal_assoc", braid::equals(l, r)},
                  {"external_assoc", braid::equals(lp, rp)}};
    };
    run_word_command(derive_args, report, [&](const BraidWord& w) {
      const json j = report(w);
      std::string out;
      for (const char* key : {"L", "R", "Lp", "Rp"})
        out += std::string(key) + ": " + j[key].get<std::string>() + "\n";
      out += std::string("internal_assoc: ") + (j["internal_assoc"].get<bool>() ? "true" : "false");
      out += std::string("\nexternal_assoc: ") +
             (j["external_assoc"].get<bool>() ? "true" : "false");
      return out;
    });
  });

  WordArgs check_args;
  bool check_quiet = false;
  auto* check = app.add_subcommand("check", "full interchange report for a word");
  add_word_args(check, check_args);
  check->add_flag("--quiet", check_quiet, "no output; exit 0 iff interchanging");
  check->callback([&] {
    if (check_quiet && check_args.file.empty()) {
      const auto rep = is_interchanging(BraidWord::parse(check_args.word));
      rc = rep.interchanging().value_or(false) ? 0 : 1;
      return;
    }
    run_word_command(
        check_args, [](const BraidWord& w) { return braid::io::to_json(is_interchanging(w)); },
        nullptr);
  });

  WordArgs classify_args;
  auto* classifyc = app.add_subcommand("classify", "locate a word in the interchange family");
  add_word_args(classifyc, classify_args);
  classifyc->callback([&] {
    run_word_command(
        classify_args, [](const BraidWord& w) { return braid::io::to_json(classify(w)); },
        nullptr);
  });

  WordArgs screens_args;
  auto* screens = app.add_subcommand("screens", "strand-deletion obstruction screens");
  add_word_args(screens, screens_args);
  screens->callback([&] {
    run_word_command(
        screens_args,
        [](const BraidWord& w) { return braid::io::to_json(obstruction_screens(w)); }, nullptr);
  });

  struct {
    int k = 1;
    bool mirror = false;
    bool quiet = false;
  } hexagon_args;
  auto* hexagon = app.add_subcommand("hexagon", "coherence hexagon for a k-fold crossing");
  hexagon->add_option("k", hexagon_args.k, "odd crossing power")->required();
  hexagon->add_flag("--mirror", hexagon_args.mirror, "doubled strand on the left");
  hexagon->add_flag("--quiet", hexagon_args.quiet, "no output; exit 0 iff the hexagon commutes");
  hexagon->callback([&] {
    const bool holds = hexagon_args.mirror ? braid::hexagon_check_mirror(hexagon_args.k)
                                           : braid::hexagon_check(hexagon_args.k);
    if (hexagon_args.quiet) {
      rc = holds ? 0 : 1;
      return;
    }
    json j{{"k", hexagon_args.k}, {"holds", holds}};
    if (!hexagon_args.mirror) {
      const auto [lhs, rhs] = braid::hexagon_words(hexagon_args.k);
      j["lhs"] = lhs.str();
      j["rhs"] = rhs.str();
    }
    std::cout << j.dump() << '\n';
  });

  WordArgs closure_args;
  auto* closure = app.add_subcommand("closure", "closure components, linking numbers, writhes");
  add_word_args(closure, closure_args);
  closure->callback([&] {
    run_word_command(
        closure_args, [](const BraidWord& w) { return braid::io::to_json(closure_summary(w)); },
        nullptr);
  });

  struct {
    int k = 1;
    bool quiet = false;
  } obstruction_args;
  auto* obstruction =
      app.add_subcommand("obstruction", "closure obstruction to a doubled-crossing braiding");
  obstruction->add_option("k", obstruction_args.k, "odd power")->required();
  obstruction->add_flag("--quiet", obstruction_args.quiet);
  obstruction->callback([&] {
    const bool obstructed = braid::braiding_obstruction(obstruction_args.k);
    if (obstruction_args.quiet)
      rc = obstructed ? 0 : 1;
    else
      std::cout << json{{"k", obstruction_args.k}, {"obstruction", obstructed}}.dump() << '\n';
  });

  braid::SearchConfig search_cfg;
  search_cfg.workers = default_workers();
  bool no_screens = false;
  auto* search = app.add_subcommand("search", "enumerate words and collect interchanging classes");
  search->add_option("--max-len", search_cfg.max_len, "maximum word length")
      ->capture_default_str();
  search->add_option("--workers", search_cfg.workers, "worker threads (env INTERBRAID_WORKERS)")
      ->capture_default_str();
  search->add_flag("--no-screens", no_screens, "skip the profile screen before 6-strand checks");
  search->add_option("--output", search_cfg.output_path, "also write JSON lines to this file");
  search->add_option("--hard-cap", search_cfg.hard_cap, "refuse lengths above this")
      ->capture_default_str();
  search->callback([&] {
    search_cfg.screens_enabled = !no_screens;
    std::cout << braid::io::to_json(run_search(search_cfg)).dump() << '\n';
  });

  struct {
    int max_h = 2;
    int max_k = 2;
  } coset_args;
  auto* coset = app.add_subcommand("coset-sample",
                                   "verify internal associativity over a double-coset sample");
  coset->add_option("--max-h", coset_args.max_h, "twist power range")->capture_default_str();
  coset->add_option("--max-k", coset_args.max_k, "outer twist range")->capture_default_str();
  coset->callback([&] {
    std::cout << braid::io::to_json(
                     braid::coset_property_sample(coset_args.max_h, coset_args.max_k))
                     .dump()
              << '\n';
  });

  struct {
    int n = 0;
    std::string sign = "+";
    bool plain = false;
  } family_args;
  auto* familyc = app.add_subcommand("family", "the n-th interchange braid of a handedness");
  familyc->add_option("n", family_args.n)->required();
  familyc->add_option("sign", family_args.sign, "+ or -")->required();
  familyc->add_flag("--plain", family_args.plain);
  familyc->callback([&] {
    braid::Sign s;
    if (family_args.sign == "+" || family_args.sign == "plus")
      s = braid::Sign::plus;
    else if (family_args.sign == "-" || family_args.sign == "minus")
      s = braid::Sign::minus;
    else
      throw std::invalid_argument("sign must be + or -");
    const BraidWord w = braid::family(family_args.n, s);
    if (family_args.plain)
      std::cout << w.str() << '\n';
    else
      std::cout << json{{"word", w.str()}}.dump() << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
