#pragma once

// Small immutable chemical graphs (max degree 4, at most 64 vertices) with
// degree and edge-type censuses.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace agx {

using Edge = std::pair<int, int>;

class ChemicalGraph {
 public:
  static constexpr int kMaxOrder = 64;
  static constexpr int kMaxDegree = 4;

  /// Validating constructor from adjacency bit rows (bit j of rows[i] set iff ij is an edge).
  static ChemicalGraph from_rows(int order, std::span<const std::uint64_t> rows);

  int order() const noexcept { return order_; }
  int size() const noexcept { return size_; }

  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int v) const noexcept { return rows_[v]; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  std::vector<int> degrees() const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int v) const;

  /// New graph with `removed` edges deleted, then `added` edges inserted.
  ChemicalGraph with_edges_replaced(std::span<const Edge> removed,
                                    std::span<const Edge> added) const;
  /// Relabels vertex v as perm[v]; perm must be a permutation of [0, order).
  ChemicalGraph relabeled(std::span<const int> perm) const;

  bool operator==(const ChemicalGraph&) const = default;

 private:
  ChemicalGraph(int order, int size, std::vector<std::uint64_t> rows)
      : order_(order), size_(size), rows_(std::move(rows)) {}

  int order_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> rows_;
};

ChemicalGraph build_graph(int order, std::span<const Edge> edges);
inline ChemicalGraph build_graph(int order, const std::vector<Edge>& edges) {
  return build_graph(order, std::span<const Edge>(edges));
}

/// Vertex counts by degree (n0..n4) and edge counts x(i,j) by endpoint degrees.
struct Census {
  std::array<int, 5> degree_counts{};
  std::array<std::array<int, 5>, 5> edge_counts{};  // only [i][j] with 1 <= i <= j <= 4 is used

  int n(int degree) const { return degree_counts.at(degree); }
  int x(int i, int j) const { return i <= j ? edge_counts.at(i).at(j) : edge_counts.at(j).at(i); }

  bool operator==(const Census&) const = default;
};

Census census(const ChemicalGraph& g);

bool is_connected(const ChemicalGraph& g);
/// Vertex sets of connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const ChemicalGraph& g);
/// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
ChemicalGraph induced_subgraph(const ChemicalGraph& g, std::span<const int> vertices);
ChemicalGraph disjoint_union(const ChemicalGraph& a, const ChemicalGraph& b);

}  // namespace agx
