#pragma once

// JSON and plain-text renderings. JSON objects keep insertion order so that
// emitted documents are stable and re-serialize byte-identically.

#include <string>

#include "json.hpp"
#include "sqfrob/closed_form.hpp"
#include "sqfrob/power.hpp"
#include "sqfrob/progression.hpp"
#include "sqfrob/semigroup.hpp"
#include "sqfrob/verify.hpp"

namespace sqfrob {

using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& s);  // [g1, g2, ...]
Json to_json(const ApSemigroup& s);         // {"a", "d", "k"}
Json to_json(const LambdaProfile& p);
Json to_json(const MuJ& m);
Json to_json(const PowerResult& r);         // {"k", "root", "value", "method"}
Json to_json(const ClosedFormAnswer& c);    // {"a", "d", "value", "root", "branch"}
Json to_json(const ExceptionReport& e);
/// Wall time is left out so that equal inputs give equal documents.
Json to_json(const SweepReport& r);

NumericalSemigroup semigroup_from_json(const Json& j);
ApSemigroup ap_semigroup_from_json(const Json& j);

/// Aligned-column summary, including wall time.
std::string to_text(const SweepReport& r);
std::string to_text(const ExceptionReport& e);

}  // namespace sqfrob
