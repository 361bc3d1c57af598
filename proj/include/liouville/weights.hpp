#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liouville {

// The g factor in omega_2 = g(r) (1+r^2)^{beta/2}.  Every variant has a
// finite limit at infinity.  The Witness* variants are the explicit
// factors appearing in the optimality constructions; they are affine in
// s = r^2/(1+r^2) and hence monotone in r.
struct GFactor {
  enum class Kind { One, Constant, WitnessG, WitnessL, WitnessM, Sampled };

  Kind kind = Kind::One;
  double eps = 1.0;                       // Constant
  double N = 0, alpha = 0, beta = 0, p = 2;  // Witness* parameters
  std::vector<double> sample_r, sample_v;    // Sampled (strictly increasing radii)

  static GFactor one() { return GFactor{}; }
  static GFactor constant(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("GFactor::constant: eps must be positive");
    GFactor g; g.kind = Kind::Constant; g.eps = eps; return g;
  }
  static GFactor witness_g(double N, double alpha, double beta) {
    GFactor g; g.kind = Kind::WitnessG; g.N = N; g.alpha = alpha; g.beta = beta; return g;
  }
  static GFactor witness_l(double N, double alpha, double beta, double p) {
    GFactor g; g.kind = Kind::WitnessL; g.N = N; g.alpha = alpha; g.beta = beta; g.p = p; return g;
  }
  static GFactor witness_m(double N, double alpha, double beta, double p) {
    GFactor g; g.kind = Kind::WitnessM; g.N = N; g.alpha = alpha; g.beta = beta; g.p = p; return g;
  }
  static GFactor sampled(std::vector<double> r, std::vector<double> v);

  // coefficients (c0, c1) of g = c0 + c1 * s, s = r^2/(1+r^2), for the
  // closed-form variants
  std::pair<double, double> affine_coeffs() const {
    const double D = beta - alpha + 2.0;
    switch (kind) {
      case Kind::One: return {1.0, 0.0};
      case Kind::Constant: return {eps, 0.0};
      case Kind::WitnessG: return {D * N, D * (alpha - 2.0)};
      case Kind::WitnessL: {
        const double q = D / (p - 1.0);
        return {q * N, q * (alpha - 2.0 - q)};
      }
      case Kind::WitnessM: {
        const double q = D / (p + 1.0);
        return {q * N, q * (alpha - 2.0 + q)};
      }
      default: throw std::logic_error("affine_coeffs: not a closed-form variant");
    }
  }

  double value(double r) const;
  double limit_at_infinity() const;
  // infimum of g over [0, inf); for affine-in-s variants this is
  // min(g(0), limit at infinity)
  double infimum() const;
  bool strictly_positive() const { return infimum() > 0.0; }
};

// Closed-form radial profiles used by the witness constructions.
//   Zero, Constant(c), LogPower(k) = -k ln(1+r^2), Power(m) = (1+r^2)^m
struct RadialFunction {
  enum class Kind { Zero, Constant, LogPower, Power };

  Kind kind = Kind::Zero;
  double param = 0.0;

  static RadialFunction zero() { return {Kind::Zero, 0.0}; }
  static RadialFunction constant(double c) { return {Kind::Constant, c}; }
  static RadialFunction log_power(double k) { return {Kind::LogPower, k}; }
  static RadialFunction power(double m) { return {Kind::Power, m}; }

  double value(double r) const {
    const double w = 1.0 + r * r;
    switch (kind) {
      case Kind::Zero: return 0.0;
      case Kind::Constant: return param;
      case Kind::LogPower: return -param * std::log(w);
      case Kind::Power: return std::pow(w, param);
    }
    return 0.0;
  }
  double d1(double r) const {
    const double w = 1.0 + r * r;
    switch (kind) {
      case Kind::Zero:
      case Kind::Constant: return 0.0;
      case Kind::LogPower: return -2.0 * param * r / w;
      case Kind::Power: return 2.0 * param * r * std::pow(w, param - 1.0);
    }
    return 0.0;
  }
  double d2(double r) const {
    const double w = 1.0 + r * r;
    switch (kind) {
      case Kind::Zero:
      case Kind::Constant: return 0.0;
      case Kind::LogPower: return -2.0 * param * (1.0 - r * r) / (w * w);
      case Kind::Power:
        return 2.0 * param * std::pow(w, param - 1.0) +
               4.0 * param * (param - 1.0) * r * r * std::pow(w, param - 2.0);
    }
    return 0.0;
  }
};

// omega_1 = (1+r^2)^{alpha/2},  omega_2 = g(r) (1+r^2)^{beta/2}
struct WeightFamily {
  double alpha = 0.0;
  double beta = 0.0;
  GFactor g = GFactor::one();

  double omega1(double r) const { return std::pow(1.0 + r * r, 0.5 * alpha); }

  // d omega_1 / dr = alpha r (1+r^2)^{alpha/2 - 1}
  double omega1_prime(double r) const {
    return alpha * r * std::pow(1.0 + r * r, 0.5 * alpha - 1.0);
  }

  double omega2(double r) const { return g.value(r) * std::pow(1.0 + r * r, 0.5 * beta); }

  // the radial weight is non-increasing along rays iff alpha <= 0
  bool gradient_inward() const { return alpha <= 0.0; }
};

inline constexpr double kOperatorMinRadius = 1e-8;

// -div(omega_1 grad u) applied to a radial u at r > 0:
//   -(omega_1 u'' + omega_1' u' + (N-1)/r omega_1 u')
double apply_operator(const WeightFamily& w, double N, const RadialFunction& u, double r);

}  // namespace liouville
