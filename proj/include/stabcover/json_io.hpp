#pragma once

#include <string>

#include <json.hpp>

#include "stabcover/constellations.hpp"
#include "stabcover/cover.hpp"

namespace stabcover {

using json = nlohmann::json;

// All rational values cross the JSON boundary as exact "p/q" strings;
// floating point literals are rejected everywhere.

json diagram_to_json(const Diagram& d);

json charge_to_json(const CentralCharge& Z);
CentralCharge charge_from_json(const json& j, const Diagram& d);
CentralCharge load_charge_file(const std::string& path, const Diagram& d);

json path_to_json(const ChargePath& p);
ChargePath path_from_json(const json& j, const Diagram& d);
ChargePath load_path_file(const std::string& path, const Diagram& d);

// Words as signed 1-based slot numbers: [1, 2, -1] is sigma_1 sigma_2
// sigma_1^{-1}, first letter outermost. (For affine diagrams slot 1 is the
// special vertex 0; a bare signed integer cannot express "-0", so slot
// numbers rather than vertex labels are used.)
json word_to_json(const BraidWord& w);
BraidWord word_from_json(const json& j, const Diagram& d);

json state_to_json(const CoverState& s);
CoverState state_from_json(const json& j);

json events_to_json(const std::vector<LiftEvent>& events);

json deck_to_json(const DeckTransform& deck);

json exchange_to_json(const ExchangeGraph& g);
std::string exchange_to_dot(const ExchangeGraph& g);

json rep_to_json(const CycleRep& rep);
json semistability_to_json(const SemistabilityReport& report);

json matrix_to_json(const IntMatrix& m);
json vector_to_json(const IntVector& v);

}  // namespace stabcover
