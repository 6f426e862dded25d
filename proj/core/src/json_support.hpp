#pragma once

#include "eft/records.hpp"

#include <json.hpp>

namespace eft {

using json = nlohmann::json;

void to_json(json& j, const NewformRecord& r);
void from_json(const json& j, NewformRecord& r);
void to_json(json& j, const IsogenyClassRecord& r);
void from_json(const json& j, IsogenyClassRecord& r);
void to_json(json& j, const ZerosRecord& r);
void from_json(const json& j, ZerosRecord& r);
void to_json(json& j, const CoefficientRecord& r);
void from_json(const json& j, CoefficientRecord& r);
void to_json(json& j, const ReferenceCell& c);
void from_json(const json& j, ReferenceCell& c);

} // namespace eft
