#pragma once

#include "agx/exact.hpp"
#include "agx/graph.hpp"

namespace agx {

/// Degree census target (t1, t2, t3, t4): vertex counts of degree 1..4.
struct Quadruplet {
  int t1 = 0, t2 = 0, t3 = 0, t4 = 0;

  int order() const { return t1 + t2 + t3 + t4; }
  int degree_sum() const { return t1 + 2 * t2 + 3 * t3 + 4 * t4; }
  bool operator==(const Quadruplet&) const = default;
};

inline Quadruplet quadruplet_of(const Census& c) { return {c.n(1), c.n(2), c.n(3), c.n(4)}; }

/// (i + j) / (2 sqrt(ij)) for endpoint degrees 1 <= i, j <= 4; throws DegreeOutOfRange.
ExactValue edge_cost(int i, int j);

ExactValue ag_value(const Census& c);
ExactValue ag_value(const ChemicalGraph& g);

/// 3/4 t1 + (3/sqrt2 - 1) t2 + (21/(4 sqrt3) - 3/2) t3 + 2 t4: the AG value of any
/// graph whose edges all touch a degree-4 vertex, as a function of its degree census.
ExactValue f_value(const Quadruplet& q);

}  // namespace agx
