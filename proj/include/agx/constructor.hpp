#pragma once

// Connected members of G(n,m): graphs with no isolated vertex, at most one
// vertex of degree 2 or 3, and every edge incident to a degree-4 vertex.

#include <vector>

#include "agx/ag_index.hpp"
#include "agx/graph.hpp"

namespace agx {

struct VertexRange {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
};

struct ConstructionStep {
  int step = 0;  // 2..6
  std::vector<Edge> edges;
};

struct ConstructionPlan {
  Quadruplet target;
  VertexRange v1, v2, v3, v4;  // vertices by target degree
  std::vector<ConstructionStep> steps;
  bool repaired = false;  // step 5 needed edge switching after the greedy pass
};

struct Construction {
  ChemicalGraph graph;
  ConstructionPlan plan;
};

/// The four inequalities that make the construction possible for the
/// canonical quadruplet of (n, m).
struct Feasibility {
  bool has_quadruplet = false;
  bool special_vertex_fits = false;  // 2 t2 <= t4 and 3 t3 <= t4
  bool core_edges_fit = false;       // m - t1 - 2 t2 - 3 t3 <= t4 (t4 - 1) / 2
  bool pendants_fit = false;         // t1 <= 4 t4

  bool ok() const { return has_quadruplet && special_vertex_fits && core_edges_fit && pendants_fit; }
};

Feasibility feasibility(int n, int m);

/// Builds a connected graph in G(n,m) with AG equal to the closed-form bound.
/// Errors: SizeOutOfRange, ExceptionalPair, Infeasible.
Construction construct_extremal_with_plan(int n, int m);
inline ChemicalGraph construct_extremal(int n, int m) { return construct_extremal_with_plan(n, m).graph; }

bool is_member_Gnm(const ChemicalGraph& g);

}  // namespace agx
