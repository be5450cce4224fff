#pragma once

#include "horo/detour.hpp"
#include "horo/horofunction.hpp"
#include "horo/space.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace horo {

using json = nlohmann::json;

// Space descriptors: {"kind": "disc"}, {"kind": "ball", "n": 2},
// {"kind": "product", "factors": [...]}, optional "basepoint".
json space_to_json(const Space& space);
Space space_from_json(const json& j);

// Points serialise space-free; parsing is space-directed (a [re, im] pair is a
// disc point or a 2-vector depending on the space). Complex numbers are
// [re, im]; the star graph uses {"edge": k, "offset": s}.
json point_to_json(const Point& x);
Point point_from_json(const Space& space, const json& j);

json boundary_to_json(const BoundaryPoint& xi);
BoundaryPoint boundary_from_json(const Space& space, const json& j);

json horofunction_to_json(const Horofunction& h);
Horofunction horofunction_from_json(const json& j);

json limit_estimate_to_json(const LimitEstimate& e);
json defect_report_to_json(const DefectReport& r, bool include_pairs = false);
json detour_value_to_json(const DetourValue& v);
json decomposition_to_json(const Decomposition& d);
json part_key_to_json(const PartKey& k);

Embedding embedding_from_json(const Space& src, const json& j);

// Canonical dump: keys in insertion order, doubles in shortest round-trip form
// (nlohmann), newline-terminated. Byte-identical for identical inputs.
std::string dump_json(const json& j);

}  // namespace horo
