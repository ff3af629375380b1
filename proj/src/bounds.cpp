#include "agx/bounds.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "agx/error.hpp"

namespace agx {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string pair_text(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

const std::vector<ExceptionalValue>& table() {
  static const std::vector<ExceptionalValue> values = {
      {1, 0, ExactValue(0), "0"},
      {2, 1, ExactValue(1), "1"},
      {3, 2, ExactValue::sqrt2(ratio(3, 2)), "3/sqrt(2)"},
      {3, 3, ExactValue(3), "3"},
      {4, 3, ExactValue::sqrt3(2), "6/sqrt(3)"},
      {4, 4, ExactValue(1, 0, ratio(2, 3), ratio(5, 6)), "1+2/sqrt(3)+5/sqrt(6)"},
      {4, 5, ExactValue(1, 0, 0, ratio(5, 3)), "1+10/sqrt(6)"},
      {4, 6, ExactValue(6), "6"},
      {5, 5, ExactValue(ratio(7, 2), ratio(3, 2)), "7/2+3/sqrt(2)"},
      {5, 6, ExactValue(ratio(5, 4), ratio(3, 2), ratio(7, 12), ratio(5, 6)),
       "5/4+3/sqrt(2)+7/(4sqrt(3))+5/sqrt(6)"},
      {5, 7, ExactValue(1, ratio(9, 2)), "1+9/sqrt(2)"},
      {5, 8, ExactValue(2, ratio(3, 2), ratio(7, 3)), "2+3/sqrt(2)+7/sqrt(3)"},
      {5, 9, ExactValue(3, 0, ratio(7, 2)), "3+21/(2sqrt(3))"},
      {6, 5, ExactValue(ratio(15, 4), ratio(3, 2)), "15/4+3/sqrt(2)"},
      {6, 6, ExactValue(ratio(5, 2), ratio(3, 4), ratio(5, 4), ratio(5, 12)),
       "5/2+3/(2sqrt(2))+15/(4sqrt(3))+5/(2sqrt(6))"},
      {6, 7, ExactValue(ratio(7, 2), 3), "7/2+6/sqrt(2)"},
      {6, 8, ExactValue(ratio(9, 2), 0, ratio(7, 3)), "9/2+7/sqrt(3)"},
      {6, 9, ExactValue(ratio(17, 4), ratio(3, 2), ratio(7, 4)), "17/4+3/sqrt(2)+21/(4sqrt(3))"},
      {7, 6, ExactValue(ratio(15, 4), 0, ratio(23, 12)), "15/4+4/sqrt(3)+7/(4sqrt(3))"},
      {7, 8, ExactValue(ratio(5, 2), ratio(9, 2)), "5/2+9/sqrt(2)"},
      {8, 8, ExactValue(5, 3), "5+6/sqrt(2)"},
      {10, 9, ExactValue(ratio(15, 2), 0, ratio(11, 6)), "15/2+11/(2sqrt(3))"},
  };
  return values;
}

}  // namespace

int residue(int n, int m) { return ((2 * m - n) % 3 + 3) % 3; }

std::optional<Quadruplet> canonical_quadruplet(int n, int m) {
  if (n < 1 || m < 0) return std::nullopt;
  const int r = residue(n, m);
  Quadruplet q{floor_div(4 * n - 2 * m, 3), r == 1 ? 1 : 0, r == 2 ? 1 : 0, floor_div(2 * m - n, 3)};
  if (q.t1 < 0 || q.t4 < 0) return std::nullopt;
  if (q.order() != n || q.degree_sum() != 2 * m) return std::nullopt;
  return q;
}

ExactValue bound_formula(int n, int m) {
  ExactValue ub(Rational(2 * n + 5 * m, 6));
  switch (residue(n, m)) {
    case 1: ub += ExactValue(ratio(-13, 6), ratio(3, 2)); break;      // 3/sqrt2 - 13/6
    case 2: ub += ExactValue(ratio(-37, 12), 0, ratio(7, 4)); break;  // 21/(4 sqrt3) - 37/12
    default: break;
  }
  return ub;
}

ExactValue upper_bound(int n, int m) {
  if (!canonical_quadruplet(n, m)) {
    throw Error(ErrorCode::InfeasiblePair, "no canonical quadruplet for " + pair_text(n, m));
  }
  return bound_formula(n, m);
}

bool in_connected_range(int n, int m) {
  if (n < 1) return false;
  const long long max_m = std::min<long long>(2LL * n, 1LL * n * (n - 1) / 2);
  return m >= n - 1 && m <= max_m;
}

bool is_exceptional_pair(int n, int m) {
  const auto& t = table();
  return std::any_of(t.begin(), t.end(), [&](const ExceptionalValue& e) { return e.n == n && e.m == m; });
}

std::span<const ExceptionalValue> exceptional_values() { return table(); }

BoundReport sharp_bound(int n, int m) {
  if (!in_connected_range(n, m)) {
    throw Error(ErrorCode::SizeOutOfRange, pair_text(n, m) + " outside n-1 <= m <= min(2n, n(n-1)/2)");
  }
  BoundReport r;
  r.n = n;
  r.m = m;
  r.ub = bound_formula(n, m);
  r.residue = residue(n, m);
  r.sharp = r.ub;
  for (const auto& e : table()) {
    if (e.n == n && e.m == m) {
      r.exceptional = true;
      r.sharp = e.ag;
    }
  }
  return r;
}

}  // namespace agx
