#include "liouville/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liouville {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGaussX[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362};
constexpr double kGaussW[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

constexpr int kPanels = 64;

}  // namespace

double sphere_area(double N) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N);
}

double annulus_integral(const std::function<double(double)>& integrand, double N, double R) {
  if (!(R > 0)) throw std::invalid_argument("annulus_integral: R must be positive");
  const double h = R / kPanels;  // panels of [R, 2R]
  double sum = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double a = R + p * h;
    const double mid = a + 0.5 * h;
    double panel = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double r = mid + 0.5 * h * kGaussX[i];
      const double f = integrand(r);
      if (!std::isfinite(f))
        throw std::domain_error("annulus_integral: non-finite integrand at r = " +
                                std::to_string(r));
      panel += kGaussW[i] * f * std::pow(r, N - 1.0);
    }
    sum += 0.5 * h * panel;
  }
  return sphere_area(N) * sum;
}

std::string IJKind::name() const {
  const char q = quantity == IJQuantity::I ? 'I' : 'J';
  switch (eq.tag) {
    case EquationKind::Tag::G: return std::string(1, q) + "_G";
    case EquationKind::Tag::L: return std::string(1, q) + "_L";
    case EquationKind::Tag::M: return std::string(1, q) + "_M";
  }
  return "?";
}

double ij_quantity(const IJKind& kind, const WeightFamily& w, double N, double t, double R) {
  const double p = kind.eq.p_double();
  const bool grad = kind.quantity == IJQuantity::J;

  double num_exp = 0, outer_exp = 1, prefactor_exp = 0;
  switch (kind.eq.tag) {
    case EquationKind::Tag::G:
      num_exp = 2 * t + 1;
      outer_exp = 1.0;
      prefactor_exp = grad ? -(2 * t + 1) : -(4 * t + 2);
      break;
    case EquationKind::Tag::L:
      num_exp = p + 2 * t - 1;
      outer_exp = 1.0 / (p - 1.0);
      prefactor_exp = grad ? -(p + 2 * t - 1) / (p - 1) : -2 * (2 * t + p - 1) / (p - 1);
      break;
    case EquationKind::Tag::M:
      num_exp = p + 2 * t + 1;
      outer_exp = 1.0 / (p + 1.0);
      prefactor_exp = grad ? -(p + 2 * t + 1) / (p + 1) : -2 * (p + 2 * t + 1) / (p + 1);
      break;
  }

  auto integrand = [&](double r) {
    const double w2 = w.omega2(r);
    if (!(w2 > 0))
      throw std::domain_error("ij_quantity: omega_2 vanishes inside the annulus at r = " +
                              std::to_string(r));
    const double num = grad ? std::fabs(w.omega1_prime(r)) : w.omega1(r);
    return std::pow(std::pow(num, num_exp) / std::pow(w2, 2 * t), outer_exp);
  };
  return std::pow(R, prefactor_exp) * annulus_integral(integrand, N, R);
}

RateReport fit_rate(const IJKind& kind, const WeightFamily& w, double N, double t, double R0,
                    int k_max) {
  RateReport rep;
  rep.predicted_exponent =
      growth_exponent(kind.eq, kind.quantity, N, w.alpha, w.beta, t);
  for (int k = 0; k <= k_max; ++k) {
    const double R = R0 * std::pow(2.0, k);
    rep.radii.push_back(R);
    rep.values.push_back(ij_quantity(kind, w, N, t, R));
    if (!(rep.values.back() > 0)) rep.degenerate = true;
  }
  if (rep.degenerate) {
    rep.fitted_slope = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  // least-squares slope of log2(value) against k
  const int n = k_max + 1;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < n; ++k) {
    const double y = std::log2(rep.values[k]);
    sx += k; sy += y; sxx += double(k) * k; sxy += k * y;
  }
  rep.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - rep.fitted_slope * sx) / n;
  for (int k = 0; k < n; ++k) {
    const double resid =
        std::fabs(std::log2(rep.values[k]) - (intercept + rep.fitted_slope * k));
    rep.max_fit_residual = std::max(rep.max_fit_residual, resid);
  }
  return rep;
}

}  // namespace liouville
