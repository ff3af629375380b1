#pragma once

// Isomorph-free generation by canonical augmentation. Both generators take
// the canonical graph6 keys of one level and return the keys of the next,
// sorted, so results do not depend on the worker count.
//
// A child is kept only when its canonical deletion (a fixed edge or vertex
// picked from the child's own canonical labeling) leads back to the parent's
// isomorphism class. Children of one parent are deduplicated locally; no two
// parents produce the same child.

#include <string>
#include <vector>

namespace agx {

/// Chemical graphs on `order` vertices with one more edge than the parents.
std::vector<std::string> augment_by_edge(int order, const std::vector<std::string>& parents, int threads);

/// Limits on the final graph of a vertex-augmentation run; intermediate graphs
/// that cannot be extended to one are pruned.
struct CoreTarget {
  int order = 0;       // final vertex count
  int size = 0;        // final edge count
  int min_degree = 0;  // every final vertex has at least this degree
};

/// Graphs with one more vertex than the parents that can still reach `target`.
/// The new vertex always has minimum degree in the child.
std::vector<std::string> augment_by_vertex(const std::vector<std::string>& parents, const CoreTarget& target,
                                           int threads);

/// All chemical graphs matching `target` exactly, built vertex by vertex.
std::vector<std::string> generate_cores(const CoreTarget& target, int threads);

}  // namespace agx
