#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "leafpow/certificate.hpp"
#include "leafpow/gadget.hpp"
#include "leafpow/simple_graph.hpp"
#include "leafpow/tree_metric.hpp"
#include "leafpow/weighted_tree.hpp"

namespace leafpow {

using Json = nlohmann::json;

// All readers throw FormatError (or a subclass) on malformed input.
Json parse_json(std::string_view text);

// Rationals are written as "p/q" strings; integers and decimal strings are
// accepted on input, JSON floating point numbers are rejected.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

// {"vertices":[...], "edges":[[u,v,"p/q"],...], "leaves":{"label":vertex,...}}
Json tree_to_json(const WeightedTree& tree);
WeightedTree tree_from_json(const Json& j);

// {"vertices":[...], "edges":[["a","b"],...]}, vertices sorted.
Json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const Json& j);

// {"tree": <tree>, "thresholds": ["p/q", ...]}
Json certificate_to_json(const GlpCertificate& cert);
GlpCertificate certificate_from_json(const Json& j);

// {"v":{"x":vertex,...}, "u":{"x,y":vertex,...}, "O":vertex}, keys over S'.
Json roles_to_json(const GadgetRoles& roles);
GadgetRoles roles_from_json(const Json& j);

// {"labels":[...], "matrix":[[...],...]}
Json distance_matrix_to_json(const DistanceMatrix& m);
DistanceMatrix distance_matrix_from_json(const Json& j);

std::string graph_to_dot(const SimpleGraph& graph);
std::string tree_to_dot(const WeightedTree& tree);

}  // namespace leafpow
