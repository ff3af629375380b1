#include "agx/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "agx/error.hpp"

namespace agx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DegreeExceedsFour: return "DegreeExceedsFour";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InfeasiblePair: return "InfeasiblePair";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::ExceptionalPair: return "ExceptionalPair";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CatalogMismatch: return "CatalogMismatch";
    case ErrorCode::StaleMove: return "StaleMove";
  }
  return "Unknown";
}

namespace {

void check_order(int order) {
  if (order < 1 || order > ChemicalGraph::kMaxOrder) {
    throw Error(ErrorCode::VertexOutOfRange,
                "order " + std::to_string(order) + " outside [1, 64]");
  }
}

void check_degrees(int order, std::span<const std::uint64_t> rows) {
  for (int v = 0; v < order; ++v) {
    if (std::popcount(rows[v]) > ChemicalGraph::kMaxDegree) {
      throw Error(ErrorCode::DegreeExceedsFour,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(std::popcount(rows[v])));
    }
  }
}

}  // namespace

ChemicalGraph ChemicalGraph::from_rows(int order, std::span<const std::uint64_t> rows) {
  check_order(order);
  if (static_cast<int>(rows.size()) != order) {
    throw std::invalid_argument("row count does not match order");
  }
  const std::uint64_t valid = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  int degree_sum = 0;
  for (int v = 0; v < order; ++v) {
    if (rows[v] & ~valid) {
      throw Error(ErrorCode::VertexOutOfRange, "adjacency bit beyond order");
    }
    if ((rows[v] >> v) & 1U) {
      throw Error(ErrorCode::LoopEdge, "self-loop at vertex " + std::to_string(v));
    }
    for (std::uint64_t bits = rows[v]; bits; bits &= bits - 1) {
      const int w = std::countr_zero(bits);
      if (!((rows[w] >> v) & 1U)) throw std::invalid_argument("asymmetric adjacency rows");
    }
    degree_sum += std::popcount(rows[v]);
  }
  check_degrees(order, rows);
  return ChemicalGraph(order, degree_sum / 2, std::vector<std::uint64_t>(rows.begin(), rows.end()));
}

ChemicalGraph build_graph(int order, std::span<const Edge> edges) {
  check_order(order);
  std::vector<std::uint64_t> rows(order, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    if ((rows[u] >> v) & 1U) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
    }
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return ChemicalGraph::from_rows(order, rows);
}

std::vector<int> ChemicalGraph::degrees() const {
  std::vector<int> out(order_);
  for (int v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> ChemicalGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u < order_; ++u) {
    for (std::uint64_t bits = rows_[u] >> u; bits; bits &= bits - 1) {
      out.emplace_back(u, u + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<int> ChemicalGraph::neighbors(int v) const {
  std::vector<int> out;
  for (std::uint64_t bits = rows_[v]; bits; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

ChemicalGraph ChemicalGraph::with_edges_replaced(std::span<const Edge> removed,
                                                 std::span<const Edge> added) const {
  std::vector<std::uint64_t> rows = rows_;
  for (const auto& [u, v] : removed) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_ || !((rows[u] >> v) & 1U)) {
      throw std::invalid_argument("removing an edge that is not present");
    }
    rows[u] &= ~(std::uint64_t{1} << v);
    rows[v] &= ~(std::uint64_t{1} << u);
  }
  for (const auto& [u, v] : added) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_) {
      throw Error(ErrorCode::VertexOutOfRange, "added edge endpoint");
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "added loop");
    if ((rows[u] >> v) & 1U) throw Error(ErrorCode::DuplicateEdge, "added edge already present");
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return from_rows(order_, rows);
}

ChemicalGraph ChemicalGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw std::invalid_argument("permutation size");
  std::uint64_t hit = 0;
  for (int p : perm) {
    if (p < 0 || p >= order_ || ((hit >> p) & 1U)) throw std::invalid_argument("not a permutation");
    hit |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> rows(order_, 0);
  for (int u = 0; u < order_; ++u) {
    for (std::uint64_t bits = rows_[u]; bits; bits &= bits - 1) {
      rows[perm[u]] |= std::uint64_t{1} << perm[std::countr_zero(bits)];
    }
  }
  return ChemicalGraph(order_, size_, std::move(rows));
}

Census census(const ChemicalGraph& g) {
  Census c;
  const int n = g.order();
  for (int v = 0; v < n; ++v) ++c.degree_counts[g.degree(v)];
  for (const auto& [u, v] : g.edges()) {
    const int a = g.degree(u);
    const int b = g.degree(v);
    ++c.edge_counts[std::min(a, b)][std::max(a, b)];
  }
  return c;
}

std::vector<std::vector<int>> components(const ChemicalGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::uint64_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1U) continue;
    std::uint64_t comp = std::uint64_t{1} << s;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t bits = frontier; bits; bits &= bits - 1) {
        next |= g.row(std::countr_zero(bits));
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> vs;
    for (std::uint64_t bits = comp; bits; bits &= bits - 1) vs.push_back(std::countr_zero(bits));
    out.push_back(std::move(vs));
  }
  return out;
}

bool is_connected(const ChemicalGraph& g) { return components(g).size() == 1; }

ChemicalGraph induced_subgraph(const ChemicalGraph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < k; ++i) index[vertices[i]] = i;
  std::vector<std::uint64_t> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (std::uint64_t bits = g.row(vertices[i]); bits; bits &= bits - 1) {
      const int j = index[std::countr_zero(bits)];
      if (j >= 0) rows[i] |= std::uint64_t{1} << j;
    }
  }
  return ChemicalGraph::from_rows(k, rows);
}

ChemicalGraph disjoint_union(const ChemicalGraph& a, const ChemicalGraph& b) {
  const int n = a.order() + b.order();
  if (n > ChemicalGraph::kMaxOrder) throw Error(ErrorCode::VertexOutOfRange, "union too large");
  std::vector<std::uint64_t> rows(n, 0);
  for (int v = 0; v < a.order(); ++v) rows[v] = a.row(v);
  for (int v = 0; v < b.order(); ++v) rows[a.order() + v] = b.row(v) << a.order();
  return ChemicalGraph::from_rows(n, rows);
}

}  // namespace agx
