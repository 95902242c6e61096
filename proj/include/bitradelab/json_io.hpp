#pragma once

#include <json.hpp>

#include "bitradelab/bitrades.hpp"
#include "bitradelab/trade.hpp"

namespace btl {

// All emitted JSON preserves insertion order so identical inputs produce
// byte-identical output.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const BigIntMatrix& m);  // arrays of decimal strings

Json group_to_json(const AbelianGroup& g);  // {"free_rank":r,"torsion":["d1",...]}

Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json surface_report_to_json(const SurfaceReport& r);

Json report_to_json(const TradeGroupReport& r);

Json bitrade_to_json(const Bitrade& bt);
Bitrade bitrade_from_json(const Json& j);

Json embedding_to_json(const Embedding& e);

}  // namespace btl
