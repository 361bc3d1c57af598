#pragma once

#include "liouville/criteria.hpp"
#include "liouville/problem.hpp"
#include "liouville/weights.hpp"

#include <functional>
#include <string>
#include <vector>

namespace liouville {

// surface area of the unit sphere in R^N, 2 pi^{N/2} / Gamma(N/2)
double sphere_area(double N);

// sphere_area(N) * int_R^{2R} f(r) r^{N-1} dr, composite Gauss-Legendre
// (64 panels x 8 points).  Throws std::domain_error naming the offending
// radius if the integrand is non-finite there.
double annulus_integral(const std::function<double(double)>& integrand, double N, double R);

// One of the six scaled annulus quantities; the equation kind supplies p
// and its range check, the quantity picks the omega_1 vs |grad omega_1|
// numerator.
struct IJKind {
  EquationKind eq;
  IJQuantity quantity = IJQuantity::I;

  std::string name() const;
};

// value of the quantity at truncation radius R (prefactor * annulus integral)
double ij_quantity(const IJKind& kind, const WeightFamily& w, double N, double t, double R);

struct RateReport {
  std::vector<double> radii;   // R0 * 2^k
  std::vector<double> values;  // quantity at each radius
  double fitted_slope = 0;     // least-squares slope of log2(value) vs k
  double predicted_exponent = 0;
  double max_fit_residual = 0;
  bool degenerate = false;  // some value was zero (e.g. J with alpha = 0)
};

RateReport fit_rate(const IJKind& kind, const WeightFamily& w, double N, double t, double R0,
                    int k_max);

}  // namespace liouville
