#include "halfshift/json_io.hpp"

#include <string>

namespace halfshift {

Json spec_to_json(const GrassmannianSpec& spec) {
  Json j;
  j["family"] = std::string(1, family_char(spec.family));
  j["n"] = spec.n;
  j["k"] = spec.k;
  return j;
}

Json partition_to_json(const GrassmannianSpec& spec,
                       const DoublePartition& p) {
  Json j = spec_to_json(spec);
  j["alpha"] = p.alpha;
  j["lambda"] = p.lambda;
  if (p.dtype >= 0)
    j["dtype"] = p.dtype;
  else
    j["dtype"] = nullptr;
  return j;
}

DoublePartition partition_from_json(const Json& j, GrassmannianSpec* spec_out) {
  GrassmannianSpec spec;
  spec.family = family_from_string(j.at("family").get<std::string>());
  spec.n = j.at("n").get<int>();
  spec.k = j.at("k").get<int>();
  DoublePartition p(j.at("alpha").get<std::vector<int>>(),
                    j.at("lambda").get<std::vector<int>>(),
                    j.at("dtype").is_null() ? -1 : j.at("dtype").get<int>());
  validate_shape(spec, p);
  if (spec_out) *spec_out = spec;
  return p;
}

Json homology_to_json(const std::vector<HomologyGroup>& groups) {
  Json j;
  j["H"] = Json::array();
  for (const HomologyGroup& g : groups) {
    Json e;
    e["d"] = g.degree;
    e["betti"] = g.betti;
    e["torsion"] = g.torsion;
    j["H"].push_back(std::move(e));
  }
  return j;
}

Json complex_to_json(const ChainComplex& cx) {
  Json j;
  j["spec"] = spec_to_json(cx.spec);
  Json dims = Json::array();
  for (const auto& cells : cx.cells) dims.push_back(cells.size());
  j["dims"] = std::move(dims);
  Json bs = Json::array();
  for (int d = 1; d <= cx.top_dimension(); ++d) {
    const BoundaryMatrix& b = cx.boundaries[d];
    Json e;
    e["d"] = d;
    Json entries = Json::array();
    for (const Triplet& t : b.entries)
      entries.push_back(Json::array({t.row, t.col, t.value}));
    e["entries"] = std::move(entries);
    bs.push_back(std::move(e));
  }
  j["boundaries"] = std::move(bs);
  return j;
}

}  // namespace halfshift
