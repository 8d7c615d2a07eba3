// JSON (de)serialization shared by the CLI and tests. Forms are records
// {"field": "Q" | {"Fp": p}, "diag": ["-3/5", ...]}; Pfister slots are
// {"fold": 3, "sign": "+", "slots": ["a","b","c"]}. Rationals always travel
// as strings.
#pragma once

#include <nlohmann/json.hpp>

#include "wittforge/bounds.hpp"
#include "wittforge/clifford.hpp"
#include "wittforge/forms.hpp"
#include "wittforge/pfister.hpp"

namespace wittforge {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldElem parse_field_elem(const std::string& text, const BaseField& field);

BaseField field_from_json(const Json& j);
Json field_to_json(const BaseField& f);

/// Accepts {"field":..., "diag":[...]} and, as an input convenience,
/// {"field":..., "gram":[[...],...]} which is diagonalized on the way in.
DiagonalForm form_from_json(const Json& j);
Json form_to_json(const DiagonalForm& q);

PfisterSlots slots_from_json(const Json& j, const BaseField& field);
Json slots_to_json(const PfisterSlots& p);

Json invariants_to_json(const WittInvariants& inv);
Json summary_to_json(const GroupSummary& s);
Json report_to_json(const BoundReport& r);

}  // namespace wittforge
