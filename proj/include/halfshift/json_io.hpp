#pragma once

#include <json.hpp>

#include "halfshift/chain.hpp"
#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"

namespace halfshift {

using Json = nlohmann::ordered_json;

Json spec_to_json(const GrassmannianSpec& spec);

// {"family","n","k","alpha":[...],"lambda":[...],"dtype":0|1|2|null}
Json partition_to_json(const GrassmannianSpec& spec, const DoublePartition& p);
DoublePartition partition_from_json(const Json& j, GrassmannianSpec* spec_out = nullptr);

// {"H":[{"d":0,"betti":1,"torsion":[]},...]}
Json homology_to_json(const std::vector<HomologyGroup>& groups);

// {"spec":...,"dims":[...],"boundaries":[{"d":...,"entries":[[row,col,val],...]},...]}
Json complex_to_json(const ChainComplex& complex);

}  // namespace halfshift
