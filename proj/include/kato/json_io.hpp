#pragma once

#include "kato/reciprocity.hpp"
#include "kato/suites.hpp"

#include "json.hpp"

namespace kato {

using json = nlohmann::json;

json to_json(const CycNumber &x);
json to_json(const QExpansion &f);
json to_json(const UnitQExp &u);
json to_json(const ConvergenceReport &r);
json to_json(const SuiteResult &s);

CycNumber cyc_from_json(const json &j);
QExpansion qexp_from_json(const json &j);

}  // namespace kato
