#include "agx/report.hpp"

#include <cmath>
#include <limits>

#include "agx/ag_index.hpp"
#include "agx/error.hpp"
#include "agx/graph6.hpp"

namespace agx {

namespace {

nlohmann::json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

BigInt integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

double round4(double x) {
  const double r = std::round(x * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

nlohmann::json to_json(const Rational& q) {
  return {integer_json(boost::multiprecision::numerator(q)), integer_json(boost::multiprecision::denominator(q))};
}

nlohmann::json to_json(const ExactValue& v) {
  return {{"a", to_json(v.a())},
          {"b", to_json(v.b())},
          {"c", to_json(v.c())},
          {"d", to_json(v.d())},
          {"float", round4(v.to_double())}};
}

ExactValue exact_from_json(const nlohmann::json& j) {
  auto coef = [&j](const char* name) {
    const auto& p = j.at(name);
    return Rational(integer_from_json(p.at(0)), integer_from_json(p.at(1)));
  };
  return {coef("a"), coef("b"), coef("c"), coef("d")};
}

nlohmann::json to_json(const Census& c) {
  nlohmann::json degrees = nlohmann::json::object();
  for (int d = 0; d <= 4; ++d) degrees["n" + std::to_string(d)] = c.n(d);
  nlohmann::json edges = nlohmann::json::object();
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) edges["x" + std::to_string(i) + std::to_string(j)] = c.x(i, j);
  }
  return {{"degrees", degrees}, {"edges", edges}};
}

nlohmann::json to_json(const Quadruplet& q) { return {q.t1, q.t2, q.t3, q.t4}; }

nlohmann::json to_json(const BoundReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"ub", to_json(r.ub)},
          {"residue", r.residue},
          {"exceptional", r.exceptional},
          {"sharp", to_json(r.sharp)}};
}

nlohmann::json to_json(const Construction& c) {
  const auto& p = c.plan;
  auto range = [](const VertexRange& r) { return nlohmann::json{r.begin, r.end}; };
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : p.steps) steps.push_back({{"step", s.step}, {"edges", edges_json(s.edges)}});
  nlohmann::json out = graph_summary(c.graph);
  out["ub"] = to_json(upper_bound(c.graph.order(), c.graph.size()));
  out["target"] = to_json(p.target);
  out["partition"] = {{"v1", range(p.v1)}, {"v2", range(p.v2)}, {"v3", range(p.v3)}, {"v4", range(p.v4)}};
  out["steps"] = steps;
  out["repaired"] = p.repaired;
  return out;
}

nlohmann::json to_json(const Move& m) {
  return {{"kind", std::string(to_string(m.kind))},
          {"witness", m.witness},
          {"removed", edges_json(m.removed)},
          {"added", edges_json(m.added)}};
}

nlohmann::json graph_summary(const ChemicalGraph& g) {
  const Census c = census(g);
  return {{"graph6", encode_graph6(g)},
          {"n", g.order()},
          {"m", g.size()},
          {"connected", is_connected(g)},
          {"census", to_json(c)},
          {"ag", to_json(ag_value(c))}};
}

}  // namespace agx
