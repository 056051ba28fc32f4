#include "braid/json_io.hpp"

#include <ostream>

namespace braid::io {

using nlohmann::json;

json to_json(const BraidWord& w) { return w.str(); }

json to_json(const Permutation& p) {
  return json{{"images", p.images()}, {"cycles", p.cycles()}};
}

json to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const Permutation& f : nf.factors) factors.push_back(f.images());
  return json{{"strands", nf.strands}, {"delta", nf.delta_power}, {"factors", factors}};
}

json to_json(const InterchangeReport& rep) {
  json failures = json::array();
  for (auto [a, b] : rep.unit_failures) failures.push_back(json::array({a, b}));
  json j{{"candidate", rep.candidate},
         {"permutation_ok", rep.permutation_ok},
         {"unit_failures", failures}};
  j["internal_assoc"] = rep.internal_assoc ? json(*rep.internal_assoc) : json();
  j["external_assoc"] = rep.external_assoc ? json(*rep.external_assoc) : json();
  const auto verdict = rep.interchanging();
  j["interchanging"] = verdict ? json(*verdict) : json();
  return j;
}

json to_json(const InnerOuterProfile& prof) {
  return json{{"inner", prof.inner}, {"outer", prof.outer}, {"pattern_ok", prof.pattern_ok}};
}

const char* refusal_name(Refusal r) {
  switch (r) {
    case Refusal::bad_permutation: return "bad_permutation";
    case Refusal::unit_failure: return "unit_failure";
    case Refusal::profile_mismatch: return "profile_mismatch";
    case Refusal::associativity_failure: return "associativity_failure";
  }
  return "unknown";
}

const char* class_name(InterchangeClass c) {
  return c == InterchangeClass::plus ? "plus" : "minus";
}

const char* verdict_name(ConjugacyVerdict v) {
  return v == ConjugacyVerdict::distinct_closures ? "distinct_closures" : "inconclusive";
}

json to_json(const ClassificationResult& r) {
  if (const auto* fam = std::get_if<InFamily>(&r)) {
    return json{{"result", "in_family"},
                {"n", fam->n},
                {"sign", std::string(1, sign_char(fam->sign))},
                {"family_word", family(fam->n, fam->sign).str()},
                {"equivalence_class", class_name(equivalence_class(r))}};
  }
  return json{{"result", "not_interchanging"},
              {"reason", refusal_name(std::get<NotInterchanging>(r).reason)}};
}

json to_json(const std::vector<ScreenResult>& screens) {
  json out = json::array();
  for (const ScreenResult& s : screens) {
    json j{{"screen", std::string(1, s.screen)}, {"applicable", s.applicable}};
    j["pass"] = s.applicable ? json(s.pass) : json();
    out.push_back(std::move(j));
  }
  return out;
}

json to_json(const LinkSummary& s) {
  json lk = json::array();
  for (const auto& [pair, value] : s.pairwise_lk)
    lk.push_back(json{{"pair", json::array({pair.first, pair.second})}, {"lk", value}});
  return json{{"components", s.components}, {"pairwise_lk", lk}, {"writhe", s.writhe}};
}

namespace {

json class_record(const InterchangingClass& cls) {
  return json{{"key", cls.key},
              {"witness", cls.witness.str()},
              {"classification", to_json(cls.classification)}};
}

}  // namespace

json to_json(const SearchReport& report) {
  json classes = json::array();
  for (const InterchangingClass& cls : report.classes) classes.push_back(class_record(cls));
  json anomalies = json::array();
  for (const SearchAnomaly& a : report.anomalies)
    anomalies.push_back(json{{"key", a.key}, {"witness", a.witness}, {"detail", a.detail}});
  return json{{"config",
               {{"max_len", report.config.max_len},
                {"screens_enabled", report.config.screens_enabled},
                {"workers", report.config.workers}}},
              {"words_enumerated", report.words_enumerated},
              {"candidates", report.candidates},
              {"interchanging_classes", classes},
              {"anomalies", anomalies}};
}

json to_json(const CosetSampleReport& report) {
  json violations = json::array();
  for (const BraidWord& w : report.violations) violations.push_back(w.str());
  return json{{"max_h", report.max_h},
              {"max_k", report.max_k},
              {"words_checked", report.words_checked},
              {"violations", violations}};
}

void write_search_jsonl(const SearchReport& report, std::ostream& out) {
  for (const InterchangingClass& cls : report.classes) out << class_record(cls).dump() << '\n';
  json summary = to_json(report);
  summary.erase("interchanging_classes");
  out << json{{"summary", summary}}.dump() << '\n';
}

}  // namespace braid::io
