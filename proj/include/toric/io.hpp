#pragma once

#include <string>

#include <json.hpp>

#include "toric/arrangement.hpp"
#include "toric/bott.hpp"
#include "toric/fibration.hpp"

namespace toric::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Documents are {"schema_version": "1", "kind": ..., "payload": ...} with
// kind one of fan | pair | numerical_pair | arrangement | morphism |
// tower_spec. Parsing is strict: unknown fields anywhere are rejected, all
// rationals travel as strings "p/q" (or "p"), and numeric fields accept
// integers only, so no floating point can enter or leave.

Json fan_payload(const Fan& fan);
Fan fan_from_payload(const Json& j);

Json pair_payload(const ToricPair& pair);
ToricPair pair_from_payload(const Json& j);

Json numerical_pair_payload(const NumericalPair& pair);
NumericalPair numerical_pair_from_payload(const Json& j);

Json arrangement_payload(const PlanePair& pair);
PlanePair arrangement_from_payload(const Json& j);

Json morphism_payload(const FanMorphism& f);
FanMorphism morphism_from_payload(const Json& j);

Json tower_spec_payload(const BottTowerSpec& spec);
BottTowerSpec tower_spec_from_payload(const Json& j);

Json make_document(const std::string& kind, Json payload);

struct Document {
  std::string kind;
  Json payload;
};

// Validates the envelope (strict keys, schema_version "1", known kind).
Document parse_document_text(const std::string& text);

// Deterministic serialization: keys in insertion order, two-space indent,
// trailing newline. Byte-stable for identical values.
std::string dump(const Json& j);

}  // namespace toric::io
