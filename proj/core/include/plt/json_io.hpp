#pragma once

#include <json.hpp>

#include "plt/registers.hpp"

namespace plt {

// {"mode":"planar","alphabet":"ab","dom":"+-","cod":"",
//  "edges":[{"src":["in",1],"tgt":["out",1],"label":"ab"}]}
nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

// {"convention":"pp","input":"012","output":"012","mode":"planar",
//  "states":"+++-+","init":...,"step":{"0":...},"final":...}
nlohmann::json transducer_to_json(const TwoWayTransducer& t);
TwoWayTransducer transducer_from_json(const nlohmann::json& j);

// {"registers":2,"alphabet":"ab","updates":{"a":["0a","1"],"b":["0","1b"]}}
// digits in update words are register indices, \d escapes a digit letter;
// optional "output" overrides the inferred output alphabet
nlohmann::json machine_to_json(const RegisterMachine& m);
RegisterMachine machine_from_json(const nlohmann::json& j);

}  // namespace plt
