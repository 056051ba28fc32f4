#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "braid/garside.hpp"
#include "braid/interchange.hpp"
#include "braid/links.hpp"
#include "braid/search.hpp"

namespace braid::io {

// JSON views of the report types, shared by the command line tool and the
// python bindings.  Braid words serialize as their text form.

nlohmann::json to_json(const BraidWord& w);
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const NormalForm& nf);
nlohmann::json to_json(const InterchangeReport& rep);
nlohmann::json to_json(const InnerOuterProfile& prof);
nlohmann::json to_json(const ClassificationResult& r);
nlohmann::json to_json(const std::vector<ScreenResult>& screens);
nlohmann::json to_json(const LinkSummary& s);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const CosetSampleReport& report);

const char* refusal_name(Refusal r);
const char* class_name(InterchangeClass c);
const char* verdict_name(ConjugacyVerdict v);

/// One JSON line per interchanging class, then one summary line.
void write_search_jsonl(const SearchReport& report, std::ostream& out);

}  // namespace braid::io
