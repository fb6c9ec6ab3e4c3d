#pragma once

#include <json.hpp>

#include "chordck/enumerate.hpp"
#include "chordck/theorems.hpp"

namespace chordck {

// Stable-field-order JSON for reports; identical inputs yield byte-identical
// output except for the timing fields.
using json = nlohmann::ordered_json;

json to_json(const CycleWitness& witness);
json to_json(const GraphEvaluation& ev, const TheoremSpec& spec);
json to_json(const GenStats& stats);
json to_json(const VerificationReport& report, const TheoremSpec& spec);

} // namespace chordck
