#pragma once

#include <optional>
#include <span>
#include <string>

#include "agx/ag_index.hpp"
#include "agx/exact.hpp"

namespace agx {

struct BoundReport {
  int n = 0;
  int m = 0;
  ExactValue ub;
  int residue = 0;  // (2m - n) mod 3, in 0..2
  bool exceptional = false;
  ExactValue sharp;  // ub, or the AG value of the unique extremal graph for exceptional pairs
};

/// One of the 22 pairs whose unique extremal graph falls short of the closed-form bound.
struct ExceptionalValue {
  int n;
  int m;
  ExactValue ag;
  std::string closed_form;  // human-readable form of `ag`
};

int residue(int n, int m);

/// The unique quadruplet with t2 + t3 <= 1, or nullopt when it would have a
/// negative entry.
std::optional<Quadruplet> canonical_quadruplet(int n, int m);

/// (2n + 5m)/6 plus a residue-dependent correction; defined for any pair.
ExactValue bound_formula(int n, int m);
/// bound_formula(n, m) for pairs with a canonical quadruplet; throws InfeasiblePair otherwise.
ExactValue upper_bound(int n, int m);

/// n - 1 <= m <= min(2n, n(n-1)/2): the sizes a connected chemical graph of order n can have.
bool in_connected_range(int n, int m);
bool is_exceptional_pair(int n, int m);
std::span<const ExceptionalValue> exceptional_values();

/// Throws SizeOutOfRange outside the connected range.
BoundReport sharp_bound(int n, int m);

}  // namespace agx
