#pragma once

// Exact values a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) with rational
// coefficients. {1, sqrt2, sqrt3, sqrt6} is linearly independent over Q, so
// a value is zero iff all four coefficients are zero.

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace agx {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(long long p, long long q = 1) { return Rational(p, q); }

class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(Rational a, Rational b = 0, Rational c = 0, Rational d = 0)  // NOLINT(google-explicit-constructor)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  ExactValue(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)

  static ExactValue sqrt2(Rational k = 1) { return {0, std::move(k), 0, 0}; }
  static ExactValue sqrt3(Rational k = 1) { return {0, 0, std::move(k), 0}; }
  static ExactValue sqrt6(Rational k = 1) { return {0, 0, 0, std::move(k)}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

  ExactValue& operator+=(const ExactValue& o);
  ExactValue& operator-=(const ExactValue& o);
  ExactValue& operator*=(const Rational& k);

  friend ExactValue operator+(ExactValue x, const ExactValue& y) { return x += y; }
  friend ExactValue operator-(ExactValue x, const ExactValue& y) { return x -= y; }
  friend ExactValue operator*(ExactValue x, const Rational& k) { return x *= k; }
  friend ExactValue operator*(const Rational& k, ExactValue x) { return x *= k; }
  friend ExactValue operator*(ExactValue x, long long k) { return x *= Rational(k); }
  friend ExactValue operator*(long long k, ExactValue x) { return x *= Rational(k); }
  ExactValue operator-() const { return {-a_, -b_, -c_, -d_}; }

  /// Coefficient-wise equality, which is value equality.
  friend bool operator==(const ExactValue& x, const ExactValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const ExactValue& x, const ExactValue& y);

  double to_double() const;
  /// Readable closed form, e.g. "11 + 3/2*sqrt(2)".
  std::string to_string() const;
  /// Fixed-point decimal rendering of the float projection.
  std::string to_decimal(int places = 4) const;

 private:
  Rational a_, b_, c_, d_;
};

/// Sign of the represented real number: -1, 0 or +1.
int sign(const ExactValue& v);

/// Orders two exact values. A double-precision evaluation with an error bound
/// settles the sign when the difference is far from zero; otherwise the sign
/// is decided algebraically by squaring within Q(sqrt2) and Q(sqrt2, sqrt3).
std::strong_ordering exact_compare(const ExactValue& x, const ExactValue& y);

std::string to_string(const Rational& q);

}  // namespace agx
