#pragma once

// JSON renderings shared by the command-line tool and the tests. Floats are
// rounded to 4 decimals; rationals are [numerator, denominator] pairs, with
// components outside the int64 range written as decimal strings.

#include "json.hpp"

#include "agx/bounds.hpp"
#include "agx/constructor.hpp"
#include "agx/exact.hpp"
#include "agx/graph.hpp"
#include "agx/transforms.hpp"

namespace agx {

double round4(double x);

nlohmann::json to_json(const Rational& q);
/// {"a": [p, q], "b": ..., "c": ..., "d": ..., "float": x} for a + b√2 + c√3 + d√6.
nlohmann::json to_json(const ExactValue& v);
/// Inverse of to_json(ExactValue); the "float" field is ignored.
ExactValue exact_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Census& c);
nlohmann::json to_json(const Quadruplet& q);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const Construction& c);
nlohmann::json to_json(const Move& m);

/// graph6, order, size, census and AG of one graph.
nlohmann::json graph_summary(const ChemicalGraph& g);

}  // namespace agx
