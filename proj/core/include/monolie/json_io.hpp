// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_JSON_IO_HPP
#define MONOLIE_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "monolie/lie_sphere.hpp"
#include "monolie/multivector.hpp"
#include "monolie/operator_calculus.hpp"
#include "monolie/poly.hpp"

namespace monolie::io {

using json = nlohmann::json;

/// {"n": 2, "coeffs": [[re, im], ...]} with 2^n blade entries.
json multivector_to_json(const Multivector& u);
Multivector multivector_from_json(const json& j);

/// {"n": 2, "terms": [{"exp": [e0..en], "coeff": {"blade": mask,
/// "re": .., "im": ..}}, ...]}; multivector coefficients expand to one
/// term per nonzero blade.
json poly_to_json(const PolyMultivector& p);
PolyMultivector poly_from_json(const json& j);

/// {"n": 2, "d": 2, "matrices": [[[re, im], ...], ...]} row-major.
json tuple_to_json(const MatrixTuple& A);
MatrixTuple tuple_from_json(const json& j);

/// {"n": 2, "maxDegree": 4, "entries": [{"m": .., "k": .., "poly": ..}]}.
json decomposition_to_json(const LieDecomposition& dec);
LieDecomposition decomposition_from_json(const json& j);

/// Array of points; each point is an array of n + 1 coordinates, each a
/// number or an [re, im] pair.
std::vector<Paravector> points_from_json(const json& j);
json points_to_json(const std::vector<Paravector>& pts);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/// Shortest round-trip decimal form (printf %.17g).
std::string format_g17(double v);

}  // namespace monolie::io

#endif  // MONOLIE_JSON_IO_HPP
