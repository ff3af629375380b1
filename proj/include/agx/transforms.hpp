#pragma once

// AG-improving rewrites with exact lower bounds on their gain, and a greedy
// local search that applies them until none fits.
//
// Graph moves:
//   RotationA          u of degree 2 with nonadjacent neighbors v (degree 3) and w:
//                      replace uw with vw.
//   RotationB          u of degree 2 adjacent to adjacent v, w with d_v >= 3, d_w <= 3,
//                      and x of degree 2 or 3 not adjacent to w: replace uw with xw.
//   ChainSwap          path v1..vr (r >= 4) with v1 !~ v(r-1), v2 !~ vr,
//                      d(v1) < d(vr), d(v2) <= 3, d(v(r-1)) = 4:
//                      replace v1v2, v(r-1)vr with v1v(r-1), v2vr.
//   ComponentEdgeSwap  isolated z and a non-bridge edge xy with d_x = 4, d_y >= 3:
//                      replace xy with xz.
// Census moves (QuadSwap*) shift a degree census; the census form of AG
// (f_value) changes by a constant.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "agx/ag_index.hpp"
#include "agx/exact.hpp"
#include "agx/graph.hpp"

namespace agx {

enum class MoveKind { RotationA, RotationB, ChainSwap, QuadSwapT2, QuadSwapT3, QuadSwapMixed, ComponentEdgeSwap };

inline constexpr MoveKind kGraphMoves[] = {MoveKind::RotationA, MoveKind::RotationB, MoveKind::ChainSwap,
                                           MoveKind::ComponentEdgeSwap};
inline constexpr MoveKind kCensusMoves[] = {MoveKind::QuadSwapT2, MoveKind::QuadSwapT3, MoveKind::QuadSwapMixed};

std::string_view to_string(MoveKind kind);
bool is_graph_move(MoveKind kind);

/// Exact minimum of the kind's gain expression over all admissible endpoint degrees.
ExactValue delta_lower_bound(MoveKind kind);

/// A named gain bound: the seven move bounds plus the three used to rule out
/// adjacent equal-degree vertices.
struct DeltaConstant {
  std::string_view name;
  ExactValue value;
};
std::vector<DeltaConstant> delta_constants();

struct Move {
  MoveKind kind;
  // RotationA: u v w; RotationB: u v w x; ChainSwap: v1 .. vr; ComponentEdgeSwap: x y z.
  std::vector<int> witness;
  std::vector<Edge> removed;  // (u, v) with u < v
  std::vector<Edge> added;
};

struct MoveOptions {
  int max_chain_length = 6;  // longest path v1..vr tried by ChainSwap
};

/// First applicable move of a graph-move kind in lexicographic vertex order.
/// Census kinds never apply to graphs and yield nullopt.
std::optional<Move> find_move(const ChemicalGraph& g, MoveKind kind, const MoveOptions& opts = {});

/// Every applicable move of the kind, in the order find_move scans them.
std::vector<Move> find_moves(const ChemicalGraph& g, MoveKind kind, const MoveOptions& opts = {});

/// Throws StaleMove when the move's precondition no longer holds on g.
ChemicalGraph apply_move(const ChemicalGraph& g, const Move& move);

/// Census image of a QuadSwap kind; nullopt when an entry would go negative.
std::optional<Quadruplet> apply_census_move(const Quadruplet& q, MoveKind kind);

struct SearchStep {
  Move move;
  ExactValue delta;
};

struct SearchResult {
  ChemicalGraph graph;
  std::vector<SearchStep> trace;
};

/// Applies the first found graph move (kinds tried in kGraphMoves order) until none applies.
SearchResult local_search_traced(const ChemicalGraph& g, const MoveOptions& opts = {});
inline ChemicalGraph local_search(const ChemicalGraph& g, const MoveOptions& opts = {}) {
  return local_search_traced(g, opts).graph;
}

}  // namespace agx
