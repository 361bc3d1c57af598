#include "liouville/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace liouville {

GFactor GFactor::sampled(std::vector<double> r, std::vector<double> v) {
  if (r.size() != v.size() || r.size() < 2)
    throw std::invalid_argument("GFactor::sampled: need at least two (r, value) samples");
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (!(r[i] < r[i + 1])) throw std::invalid_argument("GFactor::sampled: radii must increase");
  if (r.front() < 0) throw std::invalid_argument("GFactor::sampled: negative radius");
  GFactor g;
  g.kind = Kind::Sampled;
  g.sample_r = std::move(r);
  g.sample_v = std::move(v);
  return g;
}

namespace {

// Fritsch-Carlson monotone cubic (PCHIP) evaluation on a sample table.
// Constant extrapolation outside the table.
double pchip_eval(const std::vector<double>& x, const std::vector<double>& y, double q) {
  const std::size_t n = x.size();
  if (q <= x.front()) return y.front();
  if (q >= x.back()) return y.back();

  std::vector<double> h(n - 1), delta(n - 1), d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  d[0] = delta[0];
  d[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  auto it = std::upper_bound(x.begin(), x.end(), q);
  std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
  const double s = (q - x[i]) / h[i];
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  return h00 * y[i] + h10 * h[i] * d[i] + h01 * y[i + 1] + h11 * h[i] * d[i + 1];
}

}  // namespace

double GFactor::value(double r) const {
  if (r < 0) throw std::invalid_argument("GFactor::value: negative radius");
  if (kind == Kind::Sampled) return pchip_eval(sample_r, sample_v, r);
  auto [c0, c1] = affine_coeffs();
  const double s = r * r / (1.0 + r * r);
  return c0 + c1 * s;
}

double GFactor::limit_at_infinity() const {
  if (kind == Kind::Sampled) return sample_v.back();
  auto [c0, c1] = affine_coeffs();
  return c0 + c1;
}

double GFactor::infimum() const {
  if (kind == Kind::Sampled) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : sample_v) m = std::min(m, v);
    return m;  // monotone interpolation cannot undershoot the sample range
  }
  auto [c0, c1] = affine_coeffs();
  return std::min(c0, c0 + c1);
}

double apply_operator(const WeightFamily& w, double N, const RadialFunction& u, double r) {
  if (!(r >= kOperatorMinRadius))
    throw std::invalid_argument("apply_operator: r below the minimum radius");
  const double w1 = w.omega1(r);
  const double w1p = w.omega1_prime(r);
  return -(w1 * u.d2(r) + w1p * u.d1(r) + (N - 1.0) / r * w1 * u.d1(r));
}

}  // namespace liouville
