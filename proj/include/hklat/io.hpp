#pragma once

#include <json.hpp>

#include "hklat/atomic.hpp"
#include "hklat/lagrangian.hpp"

namespace hklat {

using json = nlohmann::ordered_json;

// Rationals serialize as canonical strings; parsing accepts integers or
// "p/q" strings. Round trips are exact.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const Vec<Rat>& v);
Vec<Rat> vec_from_json(const json& j);

json to_json(const Mat<Rat>& m);
Mat<Rat> mat_from_json(const json& j);

// QuadSpace: { "dim": int, "gram": [[...]], "labels": [...] }.
// MukaiSpace: the base plus {"mukai": true}.
json to_json(const QuadSpace& s);
QuadSpace quadspace_from_json(const json& j);
json to_json(const MukaiSpace& s);
MukaiSpace mukai_from_json(const json& j);

// SymVec: { "n": int, "terms": [ { "exp": [ints], "coeff": "p/q" } ] }.
json to_json(const SymVec<Rat>& x);
SymVec<Rat> symvec_from_json(const json& j, int dim);

// HodgeData: { "e": [...], "f": [...] } in H^2 coordinates.
json to_json(const HodgeData& hd);
HodgeData hodge_from_json(const MukaiSpace& space, const json& j);

// RestrictionData: { "matrix": [[...]], "c1L": [...] }.
json to_json(const RestrictionData& rd);
RestrictionData restriction_from_json(const json& j);

json to_json(const AtomicVerdict& v);
json to_json(const AnnihilatorReport& r);
json to_json(const LagrangianVerdict& v);
json to_json(const ModularityVerdict& v);
json to_json(const IsotropyVerdict& v);
json to_json(const SphericalVerdict& v);
json to_json(const EpwIdentityReport& r);

json load_json_file(const std::string& path);

}  // namespace hklat
