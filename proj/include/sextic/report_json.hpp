#pragma once

#include <json.hpp>

#include "sextic/classify.hpp"

namespace sextic {

nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const ConditionReport& c);

}  // namespace sextic
