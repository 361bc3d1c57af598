#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace liouville {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Recovers a small-denominator rational from a double via continued
// fractions.  Doubles that came from simple decimal/fraction input
// (0.5, 1/3, 2, -1.25, ...) are recognized; anything else falls back
// to the exact dyadic value of the double, flagged as such.
struct ExactReal {
  Rational value;
  bool recognized = true;  // false: exact dyadic fallback, input was "irrational-looking"

  double to_double() const { return static_cast<double>(value); }
};

inline std::optional<Rational> recover_rational(double x, long long max_den = 1000000LL,
                                                double rel_tol = 1e-12) {
  if (!std::isfinite(x)) return std::nullopt;
  if (x == 0.0) return Rational(0);
  const double scale = std::fabs(x);
  double v = x;
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // convergents p/q
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) break;
    long long a = static_cast<long long>(fl);
    long long h = a * h0 + h1;
    long long k = a * k0 + k1;
    if (k > max_den || k < 0) break;
    double approx = static_cast<double>(h) / static_cast<double>(k);
    if (std::fabs(approx - x) <= rel_tol * scale) return Rational(h, k);
    h1 = h0; h0 = h;
    k1 = k0; k0 = k;
    double frac = v - fl;
    if (frac < 1e-18) break;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

inline ExactReal exact_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_from_double: non-finite input");
  if (auto q = recover_rational(x)) return {*q, true};
  return {Rational(x), false};  // cpp_rational(double) is exact
}

inline bool is_perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// Exact value a + b*sqrt(c) with rational a, b and rational c >= 0.
// Normalized so that b = 0 whenever c is a perfect square of a rational.
// Comparisons are decided exactly by isolating the radical and squaring.
class Surd {
 public:
  Surd() = default;
  explicit Surd(Rational a) : a_(std::move(a)) {}
  Surd(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (c_ < 0) throw std::invalid_argument("Surd: negative radicand");
    normalize();
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  const Rational& radicand() const { return c_; }
  bool is_rational() const { return b_ == 0; }

  double to_double() const {
    return static_cast<double>(a_) +
           static_cast<double>(b_) * std::sqrt(static_cast<double>(c_));
  }

  // sign of a + b*sqrt(c), exact
  int sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 c
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * c_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
  }

  Surd operator-() const { return Surd(-a_, -b_, c_); }

  friend Surd operator+(const Surd& x, const Surd& y) {
    auto [b, c] = combine_radicals(x, y);
    return Surd(x.a_ + y.a_, b, c);
  }
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Rational& q, const Surd& x) { return Surd(q * x.a_, q * x.b_, x.c_); }
  friend Surd operator/(const Surd& x, const Rational& q) {
    if (q == 0) throw std::invalid_argument("Surd: division by zero");
    return Surd(x.a_ / q, x.b_ / q, x.c_);
  }

  // exact three-way comparison; requires compatible radicands
  friend int compare(const Surd& x, const Surd& y) { return (x - y).sign(); }
  friend bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return compare(x, y) >= 0; }
  friend bool operator==(const Surd& x, const Surd& y) { return compare(x, y) == 0; }

  friend int compare(const Surd& x, const Rational& q) { return compare(x, Surd(q)); }
  friend bool operator<(const Surd& x, const Rational& q) { return compare(x, q) < 0; }
  friend bool operator>(const Surd& x, const Rational& q) { return compare(x, q) > 0; }
  friend bool operator==(const Surd& x, const Rational& q) { return compare(x, q) == 0; }

 private:
  static int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

  static std::pair<Rational, Rational> combine_radicals(const Surd& x, const Surd& y) {
    if (x.b_ == 0) return {y.b_, y.c_};
    if (y.b_ == 0) return {x.b_, x.c_};
    if (x.c_ == y.c_) return {x.b_ + y.b_, x.c_};
    throw std::invalid_argument("Surd: incompatible radicands in arithmetic");
  }

  void normalize() {
    if (b_ == 0 || c_ == 0) {
      if (b_ != 0 && c_ == 0) { /* b*sqrt(0) = 0 */ }
      b_ = 0;
      c_ = 0;
      return;
    }
    // sqrt(p/q) = sqrt(p*q)/q; rational iff p and q are both perfect squares
    BigInt num = boost::multiprecision::numerator(c_);
    BigInt den = boost::multiprecision::denominator(c_);
    BigInt rn, rd;
    if (is_perfect_square(num, rn) && is_perfect_square(den, rd)) {
      a_ += b_ * Rational(rn, rd);
      b_ = 0;
      c_ = 0;
    }
  }

  Rational a_{0}, b_{0}, c_{0};
};

// sqrt of a nonnegative rational as a Surd
inline Surd surd_sqrt(const Rational& c) {
  if (c < 0) throw std::invalid_argument("surd_sqrt: negative argument");
  return Surd(Rational(0), Rational(1), c);
}

}  // namespace liouville
