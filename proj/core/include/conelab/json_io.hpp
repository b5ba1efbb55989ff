#pragma once

#include <json.hpp>

#include "conelab/decompose.hpp"
#include "conelab/exotic.hpp"
#include "conelab/linmap.hpp"

namespace conelab {

using nlohmann::json;

// Scalars serialize as {"algebra": tag, "coeffs": [...]}: numbers in float
// mode, "p/q" strings in rational mode.
json to_json(const HurwitzScalar<double>& x);
json to_json(const HurwitzScalar<Rational>& x);
HurwitzScalar<double> hurwitz_from_json(const json& j);
HurwitzScalar<Rational> hurwitz_exact_from_json(const json& j);

json to_json(const ConeVector<double>& v);
json to_json(const ConeVector<Rational>& v);

// Hermitian matrices: {"algebra", "n", "entries": [[scalar...]...]};
// symmetry is validated on load.
json to_json(const HermitianMatrix<double>& X);
json to_json(const HermitianMatrix<Rational>& X);
HermitianMatrix<double> hermitian_from_json(const json& j);
HermitianMatrix<Rational> hermitian_exact_from_json(const json& j);

json to_json(const ConeMap& A);
ConeMap cone_map_from_json(const json& j);

json to_json(const SampleCheckReport& r);
json to_json(const VerifyReport& r);
json to_json(const Certificate& c);
json to_json(const LpReport& r);

}  // namespace conelab
