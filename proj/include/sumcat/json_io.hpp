#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of the core values: phases as "p/q" exponent strings,
 *        scalars as coefficient/exponent term arrays, base data, objects and
 *        morphisms mirroring their field structure. Used by the CLI verify
 *        commands for failure dumps and by the tables emitter.
 */

#include <json.hpp>

#include "sumcat/pointed_base.hpp"
#include "sumcat/sum_completion.hpp"

namespace sumcat {

nlohmann::json to_json(const Phase& p);
nlohmann::json to_json(const CycNum& c);
nlohmann::json to_json(const ExpPoly& p);
nlohmann::json to_json(const AffineMap& m);
nlohmann::json to_json(const GroupSpec& g);
nlohmann::json to_json(const Cochain& c);
nlohmann::json to_json(const PointedData& d);
nlohmann::json to_json(const SumObject& x);
nlohmann::json to_json(const SumMorphism& m);

}  // namespace sumcat
