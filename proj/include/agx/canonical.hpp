#pragma once

// Canonical labeling by individualization and refinement.
//
// Colors are refined to the coarsest equitable partition (vertex color plus
// the multiset of neighbor colors), then the search individualizes vertices
// of the smallest non-singleton cell until the partition is discrete. Each
// leaf relabels the graph; the lexicographically smallest relabeled
// adjacency matrix is the canonical form. Subtrees are skipped when a known
// automorphism (twin transpositions, or ones discovered from equal leaves)
// fixes the current prefix pointwise and maps one branch vertex to another.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agx/graph.hpp"

namespace agx {

struct CanonicalKey {
  std::string key;  // graph6 of the canonically relabeled graph

  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalLabeling {
  std::vector<int> position;         // position[v] = canonical label of vertex v
  std::vector<std::uint64_t> rows;   // adjacency rows of the relabeled graph
  std::vector<std::vector<int>> automorphisms;  // generators found along the way (may be incomplete)
};

CanonicalLabeling canonical_labeling(int order, std::span<const std::uint64_t> rows);
inline CanonicalLabeling canonical_labeling(const ChemicalGraph& g) {
  return canonical_labeling(g.order(), g.rows());
}

CanonicalKey canonical_key(const ChemicalGraph& g);
CanonicalKey canonical_key(int order, std::span<const std::uint64_t> rows);
ChemicalGraph canonical_form(const ChemicalGraph& g);

}  // namespace agx
