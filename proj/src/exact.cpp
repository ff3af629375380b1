#include "agx/exact.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace agx {

ExactValue& ExactValue::operator+=(const ExactValue& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

ExactValue& ExactValue::operator*=(const Rational& k) {
  a_ *= k;
  b_ *= k;
  c_ *= k;
  d_ *= k;
  return *this;
}

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

int sgn(const Rational& q) { return q.sign(); }

// Sign of x + y*sqrt(2).
int sign_q2(const Rational& x, const Rational& y) {
  const int sx = sgn(x);
  const int sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const int st = sgn(x * x - 2 * y * y);
  return st > 0 ? sx : (st < 0 ? sy : 0);
}

int exact_sign(const ExactValue& v) {
  // v = P + Q*sqrt(3) with P = a + b*sqrt2 and Q = c + d*sqrt2.
  const int sp = sign_q2(v.a(), v.b());
  const int sq = sign_q2(v.c(), v.d());
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // P^2 - 3 Q^2 = (a^2 + 2b^2 - 3c^2 - 6d^2) + (2ab - 6cd) sqrt2
  const Rational r = v.a() * v.a() + 2 * v.b() * v.b() - 3 * v.c() * v.c() - 6 * v.d() * v.d();
  const Rational s = 2 * v.a() * v.b() - 6 * v.c() * v.d();
  const int st = sign_q2(r, s);
  return st > 0 ? sp : (st < 0 ? sq : 0);
}

}  // namespace

double ExactValue::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * kSqrt2 +
         c_.convert_to<double>() * kSqrt3 + d_.convert_to<double>() * kSqrt6;
}

int sign(const ExactValue& v) {
  if (v.is_zero()) return 0;
  const double a = v.a().convert_to<double>();
  const double b = v.b().convert_to<double>() * kSqrt2;
  const double c = v.c().convert_to<double>() * kSqrt3;
  const double d = v.d().convert_to<double>() * kSqrt6;
  const double value = a + b + c + d;
  const double magnitude = std::fabs(a) + std::fabs(b) + std::fabs(c) + std::fabs(d);
  if (std::isfinite(value) && std::fabs(value) > magnitude * 1e-12) return value > 0 ? 1 : -1;
  return exact_sign(v);
}

std::strong_ordering operator<=>(const ExactValue& x, const ExactValue& y) {
  return exact_compare(x, y);
}

std::strong_ordering exact_compare(const ExactValue& x, const ExactValue& y) {
  if (x == y) return std::strong_ordering::equal;
  const int s = sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

std::string ExactValue::to_string() const {
  std::string out;
  auto term = [&out](const Rational& k, const char* radical) {
    if (k == 0) return;
    Rational mag = k < 0 ? Rational(-k) : k;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (radical == nullptr) {
      out += agx::to_string(mag);
    } else {
      if (mag != 1) out += agx::to_string(mag) + "*";
      out += radical;
    }
  };
  term(a_, nullptr);
  term(b_, "sqrt(2)");
  term(c_, "sqrt(3)");
  term(d_, "sqrt(6)");
  return out.empty() ? "0" : out;
}

std::string ExactValue::to_decimal(int places) const {
  char buf[64];
  double v = to_double();
  if (std::fabs(v) < 0.5 * std::pow(10.0, -places)) v = 0.0;  // avoid "-0.0000"
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

}  // namespace agx
