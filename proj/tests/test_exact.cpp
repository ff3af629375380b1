#include "doctest.h"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "agx/exact.hpp"

using namespace agx;
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

namespace {

Wide to_wide(const Rational& q) {
  return Wide(boost::multiprecision::numerator(q)) / Wide(boost::multiprecision::denominator(q));
}

Wide wide_value(const ExactValue& v) {
  static const Wide r2 = sqrt(Wide(2));
  static const Wide r3 = sqrt(Wide(3));
  static const Wide r6 = sqrt(Wide(6));
  return to_wide(v.a()) + to_wide(v.b()) * r2 + to_wide(v.c()) * r3 + to_wide(v.d()) * r6;
}

int wide_sign(const ExactValue& v) {
  const Wide w = wide_value(v);
  return w > 0 ? 1 : (w < 0 ? -1 : 0);
}

int as_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

// (x + y sqrt(r))^k expanded with integer coefficients.
std::pair<BigInt, BigInt> power(BigInt x, BigInt y, int r, int k) {
  BigInt a = 1, b = 0;
  for (int i = 0; i < k; ++i) {
    const BigInt na = a * x + b * y * r;
    const BigInt nb = a * y + b * x;
    a = na;
    b = nb;
  }
  return {a, b};
}

}  // namespace

TEST_CASE("arithmetic") {
  const ExactValue x(1, ratio(1, 2), 0, 3);
  const ExactValue y(ratio(2, 3), -1, 5, 0);
  CHECK(x + y == ExactValue(ratio(5, 3), ratio(-1, 2), 5, 3));
  CHECK(x - x == ExactValue());
  CHECK((x - x).is_zero());
  CHECK(x * 2 == ExactValue(2, 1, 0, 6));
  CHECK(ratio(1, 3) * y == ExactValue(ratio(2, 9), ratio(-1, 3), ratio(5, 3), 0));
  CHECK(-y == ExactValue(ratio(-2, 3), 1, -5, 0));
  CHECK(ExactValue::sqrt6(2).to_double() == doctest::Approx(2 * std::sqrt(6.0)));
}

TEST_CASE("rendering") {
  CHECK(ExactValue(11, ratio(3, 2)).to_string() == "11 + 3/2*sqrt(2)");
  CHECK(ExactValue().to_string() == "0");
  CHECK(ExactValue(2, ratio(3, 2)).to_decimal(4) == "4.1213");
  CHECK(to_string(ratio(-7, 4)) == "-7/4");
}

TEST_CASE("sign agrees with a 400-bit evaluation on random values") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  for (int t = 0; t < 20000; ++t) {
    const ExactValue v(ratio(coef(rng), den(rng)), ratio(coef(rng), den(rng)), ratio(coef(rng), den(rng)),
                       ratio(coef(rng), den(rng)));
    REQUIRE(sign(v) == wide_sign(v));
  }
}

TEST_CASE("sign of values within 1e-40 of zero") {
  for (int k = 1; k <= 60; ++k) {
    // (1 + sqrt2)^k = a + b sqrt2 and a - b sqrt2 = (1 - sqrt2)^k.
    const auto [a2, b2] = power(1, 1, 2, k);
    const ExactValue u(Rational(a2), Rational(-b2));
    CHECK(sign(u) == (k % 2 == 0 ? 1 : -1));
    CHECK(sign(u) == wide_sign(u));

    const auto [a3, b3] = power(2, 1, 3, k);
    const ExactValue w(Rational(a3), 0, Rational(-b3));
    CHECK(sign(w) == 1);
    CHECK(sign(-w) == -1);

    const auto [a6, b6] = power(5, 2, 6, k);
    const ExactValue z(Rational(-a6), 0, 0, Rational(b6));
    CHECK(sign(z) == -1);
    CHECK(sign(z) == wide_sign(z));
  }
  // (sqrt3 - sqrt2)^(2k+1) = (sqrt3 - sqrt2)(5 - 2 sqrt6)^k.
  for (int k = 1; k <= 40; ++k) {
    const auto [a, b] = power(5, -2, 6, k);
    const ExactValue v(0, Rational(3 * b - a), Rational(a - 2 * b), 0);
    CHECK(sign(v) == 1);
    CHECK(sign(v) == wide_sign(v));
    CHECK(exact_compare(v + ExactValue(1), ExactValue(1)) > 0);
  }
}

TEST_CASE("exact_compare is a total order consistent with the oracle") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::vector<ExactValue> vs;
  for (int t = 0; t < 200; ++t) vs.emplace_back(coef(rng), coef(rng), coef(rng), coef(rng));
  std::vector<Wide> ws;
  for (const auto& v : vs) ws.push_back(wide_value(v));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const auto& x = vs[i];
      const auto& y = vs[j];
      const Wide d = ws[i] - ws[j];
      const int expected = d > 0 ? 1 : (d < 0 ? -1 : 0);
      REQUIRE(as_int(exact_compare(x, y)) == expected);
      REQUIRE(as_int(x <=> y) == expected);
    }
  }
}
