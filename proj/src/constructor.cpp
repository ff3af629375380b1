#include "agx/constructor.hpp"

#include <string>

#include "agx/bounds.hpp"
#include "agx/error.hpp"

namespace agx {

namespace {

std::string pair_text(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

// Mutable adjacency used while the construction is in progress.
class Builder {
 public:
  explicit Builder(int n) : rows_(n, 0) {}

  int degree(int v) const { return std::popcount(rows_[v]); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

  void add(int u, int v, ConstructionStep& step) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
    step.edges.emplace_back(std::min(u, v), std::max(u, v));
  }

  void remove(int u, int v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  const std::vector<std::uint64_t>& rows() const { return rows_; }

 private:
  std::vector<std::uint64_t> rows_;
};

// Step 5 after the lexicographic greedy pass came up short: each round turns
// one existing step-5 edge xy into ax and by, where a and b still have
// capacity but cannot be joined directly.
bool switch_repair(Builder& b, const VertexRange& v4, ConstructionStep& step, int missing) {
  auto capacity = [&](int v) { return ChemicalGraph::kMaxDegree - b.degree(v); };
  while (missing > 0) {
    int a = -1;
    int c = -1;
    for (int v = v4.begin; v < v4.end && a < 0; ++v) {
      if (capacity(v) > 0) a = v;
    }
    if (a < 0) return false;
    for (int v = a + 1; v < v4.end && c < 0; ++v) {
      if (capacity(v) > 0) c = v;
    }
    if (c < 0) {
      if (capacity(a) < 2) return false;
      c = a;
    }
    if (c != a && !b.adjacent(a, c)) {
      b.add(a, c, step);
      --missing;
      continue;
    }
    bool switched = false;
    for (std::size_t k = 0; k < step.edges.size() && !switched; ++k) {
      for (int orient = 0; orient < 2 && !switched; ++orient) {
        const int x = orient == 0 ? step.edges[k].first : step.edges[k].second;
        const int y = orient == 0 ? step.edges[k].second : step.edges[k].first;
        if (x == a || x == c || y == a || y == c) continue;
        if (b.adjacent(a, x) || b.adjacent(c, y)) continue;
        b.remove(x, y);
        step.edges.erase(step.edges.begin() + static_cast<std::ptrdiff_t>(k));
        b.add(a, x, step);
        b.add(c, y, step);
        switched = true;
      }
    }
    if (!switched) return false;
    --missing;
  }
  return true;
}

}  // namespace

Feasibility feasibility(int n, int m) {
  Feasibility f;
  const auto q = canonical_quadruplet(n, m);
  if (!q) return f;
  f.has_quadruplet = true;
  f.special_vertex_fits = 2 * q->t2 <= q->t4 && 3 * q->t3 <= q->t4;
  f.core_edges_fit = 2LL * (m - q->t1 - 2 * q->t2 - 3 * q->t3) <= 1LL * q->t4 * (q->t4 - 1);
  f.pendants_fit = q->t1 <= 4 * q->t4;
  return f;
}

Construction construct_extremal_with_plan(int n, int m) {
  if (!in_connected_range(n, m)) {
    throw Error(ErrorCode::SizeOutOfRange, pair_text(n, m) + " outside the connected range");
  }
  if (is_exceptional_pair(n, m)) {
    throw Error(ErrorCode::ExceptionalPair, pair_text(n, m) + " has a unique extremal graph off the bound");
  }
  const Feasibility feas = feasibility(n, m);
  if (!feas.ok()) throw Error(ErrorCode::Infeasible, "feasibility inequality fails for " + pair_text(n, m));

  ConstructionPlan plan;
  const Quadruplet t = *canonical_quadruplet(n, m);
  plan.target = t;
  plan.v1 = {0, t.t1};
  plan.v2 = {plan.v1.end, plan.v1.end + t.t2};
  plan.v3 = {plan.v2.end, plan.v2.end + t.t3};
  plan.v4 = {plan.v3.end, n};
  const VertexRange& v4 = plan.v4;

  Builder b(n);
  auto capacity = [&](int v) { return ChemicalGraph::kMaxDegree - b.degree(v); };
  for (int s = 2; s <= 6; ++s) plan.steps.push_back({s, {}});
  ConstructionStep& step2 = plan.steps[0];
  ConstructionStep& step3 = plan.steps[1];
  ConstructionStep& step4 = plan.steps[2];
  ConstructionStep& step5 = plan.steps[3];
  ConstructionStep& step6 = plan.steps[4];

  // Steps 2-3: the special vertex joins the first 2 (or 3) core vertices.
  int linked = 0;
  if (t.t2 == 1) {
    for (; linked < 2; ++linked) b.add(plan.v2.begin, v4.begin + linked, step2);
  }
  if (t.t3 == 1) {
    for (; linked < 3; ++linked) b.add(plan.v3.begin, v4.begin + linked, step3);
  }

  // Step 4: chain the remaining core vertices onto the last linked one, so
  // V2 u V3 u V4 induces a tree.
  for (int v = v4.begin + std::max(linked, 1); v < v4.end; ++v) b.add(v - 1, v, step4);

  // Step 5: remaining core-core edges, lexicographically smallest pair first.
  const int wanted = m - t.t1 - t.t2 - t.t3 - t.t4 + 1;
  for (int u = v4.begin; u < v4.end && static_cast<int>(step5.edges.size()) < wanted; ++u) {
    for (int v = u + 1; v < v4.end && static_cast<int>(step5.edges.size()) < wanted; ++v) {
      if (capacity(u) > 0 && capacity(v) > 0 && !b.adjacent(u, v)) b.add(u, v, step5);
    }
  }
  if (const int missing = wanted - static_cast<int>(step5.edges.size()); missing > 0) {
    plan.repaired = true;
    if (!switch_repair(b, v4, step5, missing)) {
      throw Error(ErrorCode::Infeasible, "core edges cannot be placed for " + pair_text(n, m));
    }
  }

  // Step 6: pendants round-robin over core vertices with spare capacity.
  int cursor = 0;
  for (int p = plan.v1.begin; p < plan.v1.end; ++p) {
    int tries = 0;
    while (capacity(v4.begin + cursor) == 0 && tries++ < v4.size()) cursor = (cursor + 1) % v4.size();
    const int w = v4.begin + cursor;
    if (capacity(w) == 0) throw Error(ErrorCode::Infeasible, "no room for pendant vertices");
    b.add(p, w, step6);
    cursor = (cursor + 1) % v4.size();
  }

  ChemicalGraph g = ChemicalGraph::from_rows(n, b.rows());
  if (g.size() != m || quadruplet_of(census(g)) != t || !is_connected(g)) {
    throw Error(ErrorCode::Infeasible, "construction did not reach the target census for " + pair_text(n, m));
  }
  return Construction{std::move(g), std::move(plan)};
}

bool is_member_Gnm(const ChemicalGraph& g) {
  const Census c = census(g);
  if (c.n(0) != 0 || c.n(2) + c.n(3) > 1) return false;
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) != 4 && g.degree(v) != 4) return false;
  }
  return true;
}

}  // namespace agx
