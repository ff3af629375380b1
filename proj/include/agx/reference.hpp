#pragma once

// Reference values that the enumeration and bound code must reproduce.

#include <span>

namespace agx {

/// Number of chemical graphs (connected or not) of order n and size m, for the exceptional pairs.
struct GraphCount {
  int n;
  int m;
  long long count;
};

/// Printed 4-decimal value of UB(n,m) - AG(H) for the extremal graph H of an exceptional pair.
struct BoundGap {
  int n;
  int m;
  double printed;
};

/// Connected and non-connected extremal graph counts.
struct ExtremalCell {
  int n;
  int m;
  long long connected;
  long long nonconnected;
};

std::span<const GraphCount> reference_graph_counts();
std::span<const BoundGap> reference_bound_gaps();
/// Every pair with 1 <= n <= 14 and n-1 <= m <= min(2n, n(n-1)/2), ordered by m then n.
std::span<const ExtremalCell> reference_extremal_counts();

}  // namespace agx
