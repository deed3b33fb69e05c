#pragma once

#include <string>

#include <json.hpp>

#include "heckefill/bijection.hpp"
#include "heckefill/core.hpp"
#include "heckefill/growth.hpp"
#include "heckefill/insertion.hpp"
#include "heckefill/linked.hpp"
#include "heckefill/polyomino.hpp"

namespace heckefill {

using Json = nlohmann::json;

// Canonical forms: partitions as part arrays without trailing zeros,
// tableaux as row-lists, set-valued cells as sorted arrays.
Json toJson(const Partition& p);
Json toJson(const IncreasingTableau& t);
Json toJson(const SetValuedTableau& t);
Json toJson(const HeckePair& pair);
Json toJson(const Polyomino& p);
Json toJson(const Filling& f);
Json toJson(const RectangleFilling& f);
Json toJson(const GenPoly& g);
Json toJson(const LinkedPartition& p);

Partition partitionFromJson(const Json& j);
IncreasingTableau increasingTableauFromJson(const Json& j);
SetValuedTableau setValuedTableauFromJson(const Json& j);
Polyomino polyominoFromJson(const Json& j);
Filling fillingFromJson(const Json& j);
RectangleFilling rectangleFillingFromJson(const Json& j);
GenPoly genPolyFromJson(const Json& j);

Word parseWord(const std::string& text);  // comma or space separated

// Fixture files live under fixtures/; name is the bare file name.
Json loadFixture(const std::string& name);
std::string fixturesDir();

}  // namespace heckefill
