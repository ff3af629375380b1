#include "agx/transforms.hpp"

#include <algorithm>

#include "agx/error.hpp"

namespace agx {

namespace {

ExactValue c(int i, int j) { return edge_cost(i, j); }

template <class F>
ExactValue min_over(int lo, int hi, F f) {
  ExactValue best = f(lo);
  for (int i = lo + 1; i <= hi; ++i) {
    ExactValue v = f(i);
    if (exact_compare(v, best) < 0) best = std::move(v);
  }
  return best;
}

ExactValue census_shift(MoveKind kind) {
  const Quadruplet base{2, 2, 2, 2};
  return f_value(*apply_census_move(base, kind)) - f_value(base);
}

ExactValue rotation_a() {
  return c(1, 4) - c(2, 3) + min_over(1, 4, [](int i) { return c(4, i) - c(2, i); }) +
         min_over(1, 4, [](int j) { return c(4, j) - c(3, j); }) * 2;
}

ExactValue rotation_b() {
  return min_over(3, 4, [](int i) { return c(1, i) - c(2, i); }) + min_over(2, 3, [](int k) {
           return min_over(2, 3, [k](int j) { return c(j, k + 1) - c(j, 2); }) +
                  min_over(1, 4, [k](int l) { return c(l, k + 1) - c(l, k); }) * k;
         });
}

ExactValue chain_swap() {
  return min_over(1, 3, [](int i) {
    return min_over(2, 3, [i](int j) {
      return min_over(i + 1, 4, [i, j](int k) { return c(i, 4) + c(j, k) - c(i, j) - c(4, k); });
    });
  });
}

ExactValue component_edge_swap() {
  return c(1, 4) + min_over(3, 4, [](int i) {
           return min_over(2, 4, [i](int j) { return c(i - 1, j) - c(i, j); }) - c(4, i);
         }) +
         min_over(3, 4, [](int i) { return min_over(1, 4, [i](int k) { return c(i - 1, k) - c(i, k); }) * (i - 2); });
}

// Moving a neighbor from one of two adjacent degree-3 vertices to the other,
// when they share a neighbor.
ExactValue adjacent_33_common() {
  return c(2, 4) - c(3, 3) + min_over(1, 4, [](int i) { return c(4, i) - c(3, i); }) +
         min_over(1, 4, [](int j) { return c(4, j) - c(3, j); }) +
         min_over(2, 4, [](int k) { return c(4, k) + c(2, k) - c(3, k) * 2; });
}

ExactValue adjacent_33_apart() {
  return c(2, 4) - c(3, 3) + min_over(2, 4, [](int i) { return c(2, i) - c(3, i); }) +
         min_over(1, 4, [](int j) { return c(4, j) - c(3, j); }) +
         min_over(1, 4, [](int k) { return c(4, k) - c(3, k); }) * 2;
}

ExactValue adjacent_22() {
  return c(1, 3) - c(2, 2) + min_over(1, 4, [](int i) { return c(3, i) - c(2, i); }) +
         min_over(1, 4, [](int j) { return c(3, j) - c(2, j); });
}

Edge norm(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool connected_without(const ChemicalGraph& g, int x, int y) {
  // Is y reachable from x once the edge xy is removed?
  std::uint64_t seen = std::uint64_t{1} << x;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t bits = frontier; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      std::uint64_t row = g.row(v);
      if (v == x) row &= ~(std::uint64_t{1} << y);
      if (v == y) row &= ~(std::uint64_t{1} << x);
      next |= row;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return (seen >> y) & 1U;
}

// Precondition of each graph move, read from its witness.
bool holds(const ChemicalGraph& g, const Move& mv) {
  const auto& w = mv.witness;
  const int n = g.order();
  if (std::any_of(w.begin(), w.end(), [n](int v) { return v < 0 || v >= n; })) return false;
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  switch (mv.kind) {
    case MoveKind::RotationA: {
      if (w.size() != 3) return false;
      const int u = w[0], v = w[1], x = w[2];
      return g.degree(u) == 2 && g.adjacent(u, v) && g.adjacent(u, x) && !g.adjacent(v, x) && g.degree(v) == 3;
    }
    case MoveKind::RotationB: {
      if (w.size() != 4) return false;
      const int u = w[0], v = w[1], x = w[2], y = w[3];
      return g.degree(u) == 2 && g.adjacent(u, v) && g.adjacent(u, x) && g.adjacent(v, x) && g.degree(v) >= 3 &&
             g.degree(x) <= 3 && !g.adjacent(y, x) && (g.degree(y) == 2 || g.degree(y) == 3);
    }
    case MoveKind::ChainSwap: {
      const std::size_t r = w.size();
      if (r < 4) return false;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        if (!g.adjacent(w[i], w[i + 1])) return false;
      }
      return !g.adjacent(w[0], w[r - 2]) && !g.adjacent(w[1], w[r - 1]) && g.degree(w[0]) < g.degree(w[r - 1]) &&
             g.degree(w[1]) <= 3 && g.degree(w[r - 2]) == 4;
    }
    case MoveKind::ComponentEdgeSwap: {
      if (w.size() != 3) return false;
      const int x = w[0], y = w[1], z = w[2];
      return g.degree(z) == 0 && g.adjacent(x, y) && g.degree(x) == 4 && g.degree(y) >= 3 && connected_without(g, x, y);
    }
    default: return false;
  }
}

Move make_move(MoveKind kind, std::vector<int> w) {
  Move mv{kind, std::move(w), {}, {}};
  const auto& v = mv.witness;
  switch (kind) {
    case MoveKind::RotationA:
      mv.removed = {norm(v[0], v[2])};
      mv.added = {norm(v[1], v[2])};
      break;
    case MoveKind::RotationB:
      mv.removed = {norm(v[0], v[2])};
      mv.added = {norm(v[3], v[2])};
      break;
    case MoveKind::ChainSwap: {
      const std::size_t r = v.size();
      mv.removed = {norm(v[0], v[1]), norm(v[r - 2], v[r - 1])};
      mv.added = {norm(v[0], v[r - 2]), norm(v[1], v[r - 1])};
      break;
    }
    case MoveKind::ComponentEdgeSwap:
      mv.removed = {norm(v[0], v[1])};
      mv.added = {norm(v[0], v[2])};
      break;
    default: break;
  }
  return mv;
}

// Calls visit(move) for each applicable move in scan order until it returns false.
template <class Visit>
void scan(const ChemicalGraph& g, MoveKind kind, const MoveOptions& opts, Visit&& visit) {
  const int n = g.order();
  auto offer = [&](std::vector<int> w) {
    Move mv = make_move(kind, std::move(w));
    return !holds(g, mv) || visit(std::move(mv));
  };
  switch (kind) {
    case MoveKind::RotationA:
      for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 2) continue;
        const auto nb = g.neighbors(u);
        if (!offer({u, nb[0], nb[1]}) || !offer({u, nb[1], nb[0]})) return;
      }
      break;
    case MoveKind::RotationB:
      for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 2) continue;
        const auto nb = g.neighbors(u);
        for (int side = 0; side < 2; ++side) {
          const int v = nb[side], w = nb[1 - side];
          for (int x = 0; x < n; ++x) {
            if (!offer({u, v, w, x})) return;
          }
        }
      }
      break;
    case MoveKind::ChainSwap: {
      std::vector<int> path;
      std::uint64_t used = 0;
      bool stop = false;
      auto extend = [&](auto&& self) -> void {
        if (path.size() >= 4 && !offer(path)) {
          stop = true;
          return;
        }
        if (static_cast<int>(path.size()) >= opts.max_chain_length) return;
        for (int next : g.neighbors(path.back())) {
          if ((used >> next) & 1U) continue;
          path.push_back(next);
          used |= std::uint64_t{1} << next;
          self(self);
          used &= ~(std::uint64_t{1} << next);
          path.pop_back();
          if (stop) return;
        }
      };
      for (int v1 = 0; v1 < n && !stop; ++v1) {
        path = {v1};
        used = std::uint64_t{1} << v1;
        extend(extend);
      }
      break;
    }
    case MoveKind::ComponentEdgeSwap: {
      int z = -1;
      for (int v = 0; v < n && z < 0; ++v) {
        if (g.degree(v) == 0) z = v;
      }
      if (z < 0) return;
      for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 4) continue;
        for (int y : g.neighbors(x)) {
          if (!offer({x, y, z})) return;
        }
      }
      break;
    }
    default: break;
  }
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::RotationA: return "RotationA";
    case MoveKind::RotationB: return "RotationB";
    case MoveKind::ChainSwap: return "ChainSwap";
    case MoveKind::QuadSwapT2: return "QuadSwapT2";
    case MoveKind::QuadSwapT3: return "QuadSwapT3";
    case MoveKind::QuadSwapMixed: return "QuadSwapMixed";
    case MoveKind::ComponentEdgeSwap: return "ComponentEdgeSwap";
  }
  return "?";
}

bool is_graph_move(MoveKind kind) {
  return std::find(std::begin(kGraphMoves), std::end(kGraphMoves), kind) != std::end(kGraphMoves);
}

ExactValue delta_lower_bound(MoveKind kind) {
  switch (kind) {
    case MoveKind::RotationA: return rotation_a();
    case MoveKind::RotationB: return rotation_b();
    case MoveKind::ChainSwap: return chain_swap();
    case MoveKind::QuadSwapT2:
    case MoveKind::QuadSwapT3:
    case MoveKind::QuadSwapMixed: return census_shift(kind);
    case MoveKind::ComponentEdgeSwap: return component_edge_swap();
  }
  return ExactValue();
}

std::vector<DeltaConstant> delta_constants() {
  return {
      {"rotation-a", rotation_a()},
      {"rotation-b", rotation_b()},
      {"chain-swap", chain_swap()},
      {"adjacent-33-common-neighbor", adjacent_33_common()},
      {"adjacent-33-no-common-neighbor", adjacent_33_apart()},
      {"adjacent-22", adjacent_22()},
      {"census-swap-t2", census_shift(MoveKind::QuadSwapT2)},
      {"census-swap-t3", census_shift(MoveKind::QuadSwapT3)},
      {"census-swap-mixed", census_shift(MoveKind::QuadSwapMixed)},
      {"component-edge-swap", component_edge_swap()},
  };
}

std::optional<Quadruplet> apply_census_move(const Quadruplet& q, MoveKind kind) {
  Quadruplet s = q;
  switch (kind) {
    case MoveKind::QuadSwapT2: s = {q.t1 + 1, q.t2 - 2, q.t3 + 1, q.t4}; break;
    case MoveKind::QuadSwapT3: s = {q.t1, q.t2 + 1, q.t3 - 2, q.t4 + 1}; break;
    case MoveKind::QuadSwapMixed: s = {q.t1 + 1, q.t2 - 1, q.t3 - 1, q.t4 + 1}; break;
    default: return std::nullopt;
  }
  if (s.t1 < 0 || s.t2 < 0 || s.t3 < 0 || s.t4 < 0) return std::nullopt;
  return s;
}

std::optional<Move> find_move(const ChemicalGraph& g, MoveKind kind, const MoveOptions& opts) {
  std::optional<Move> found;
  scan(g, kind, opts, [&](Move mv) {
    found = std::move(mv);
    return false;
  });
  return found;
}

std::vector<Move> find_moves(const ChemicalGraph& g, MoveKind kind, const MoveOptions& opts) {
  std::vector<Move> out;
  scan(g, kind, opts, [&](Move mv) {
    out.push_back(std::move(mv));
    return true;
  });
  return out;
}

ChemicalGraph apply_move(const ChemicalGraph& g, const Move& move) {
  if (!is_graph_move(move.kind) || !holds(g, move)) {
    throw Error(ErrorCode::StaleMove, std::string(to_string(move.kind)) + " precondition does not hold");
  }
  return g.with_edges_replaced(move.removed, move.added);
}

SearchResult local_search_traced(const ChemicalGraph& g, const MoveOptions& opts) {
  SearchResult result{g, {}};
  ExactValue current = ag_value(g);
  for (bool moved = true; moved;) {
    moved = false;
    for (MoveKind kind : kGraphMoves) {
      auto mv = find_move(result.graph, kind, opts);
      if (!mv) continue;
      result.graph = apply_move(result.graph, *mv);
      ExactValue next = ag_value(result.graph);
      result.trace.push_back({std::move(*mv), next - current});
      current = std::move(next);
      moved = true;
      break;
    }
  }
  return result;
}

}  // namespace agx
