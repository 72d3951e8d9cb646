#pragma once

/*
 * JSON forms of the public types. Scalars serialize as exact strings
 * ("p" or "p/q"); quaternions as 4-arrays in the fixed (1,i,j,k) order;
 * matrices row-major. Emission uses insertion-ordered objects so a given
 * value always serializes to the same bytes.
 */

#include "qlie/liecore.hpp"

#include <json.hpp>

namespace qlie {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Quaternion& q);
Json to_json(const MatrixQ& m);
Json to_json(const Subspace& s);
Json to_json(const LieAlgebra& algebra);

Rational rational_from_json(const Json& j);
Quaternion quaternion_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
LieAlgebra lie_algebra_from_json(const Json& j);

}  // namespace qlie
