#include "agx/ag_index.hpp"

#include <array>
#include <string>

#include "agx/error.hpp"

namespace agx {

namespace {

// sqrt(k) = outer * sqrt(radical) with radical squarefree in {1, 2, 3, 6}.
struct Surd {
  int outer;
  int radical;
};

Surd simplify_sqrt(int k) {
  int outer = 1;
  for (int f = 2; f * f <= k; ++f) {
    while (k % (f * f) == 0) {
      k /= f * f;
      outer *= f;
    }
  }
  return {outer, k};
}

ExactValue compute_cost(int i, int j) {
  // (i + j) / (2 sqrt(ij)) = (i + j) sqrt(ij) / (2 ij)
  const Surd s = simplify_sqrt(i * j);
  const Rational k = Rational(i + j, 2 * i * j) * s.outer;
  switch (s.radical) {
    case 1: return ExactValue(k);
    case 2: return ExactValue::sqrt2(k);
    case 3: return ExactValue::sqrt3(k);
    case 6: return ExactValue::sqrt6(k);
    default: break;
  }
  throw Error(ErrorCode::DegreeOutOfRange, "radical outside {1,2,3,6}");
}

const std::array<std::array<ExactValue, 5>, 5>& cost_table() {
  static const auto table = [] {
    std::array<std::array<ExactValue, 5>, 5> t{};
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) t[i][j] = compute_cost(i, j);
    }
    return t;
  }();
  return table;
}

}  // namespace

ExactValue edge_cost(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "degrees (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1..4");
  }
  return cost_table()[i][j];
}

ExactValue ag_value(const Census& c) {
  ExactValue total;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) {
      if (const int x = c.x(i, j); x != 0) total += cost_table()[i][j] * x;
    }
  }
  return total;
}

ExactValue ag_value(const ChemicalGraph& g) { return ag_value(census(g)); }

ExactValue f_value(const Quadruplet& q) {
  const ExactValue w1(ratio(3, 4));
  const ExactValue w2(-1, ratio(3, 2));           // 3/sqrt2 - 1
  const ExactValue w3(ratio(-3, 2), 0, ratio(7, 4));  // 21/(4 sqrt3) - 3/2
  const ExactValue w4(2);
  return w1 * q.t1 + w2 * q.t2 + w3 * q.t3 + w4 * q.t4;
}

}  // namespace agx
