#include "doctest.h"

#include "liouville/criteria.hpp"
#include "liouville/witness.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace liouville;

namespace {

std::vector<double> log_spaced_radii(int n, double lo, double hi) {
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i)
    r[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return r;
}

double relative_residual(const Witness& w, double r) {
  const WeightFamily wf = w.weights();
  const double lhs = apply_operator(wf, w.N, w.u, r);
  const double rhs = wf.omega2(r) * w.eq.f(w.u.value(r));
  return std::fabs(lhs - rhs) / (std::fabs(lhs) + std::fabs(rhs) + 1.0);
}

// draws an instance strictly on the existence side with beta-alpha+2 > 0
struct ExistenceSampler {
  std::mt19937 rng;
  explicit ExistenceSampler(unsigned seed) : rng(seed) {}

  std::tuple<double, double, double> draw(const EquationKind& eq) {
    std::uniform_real_distribution<double> apar(-2.0, 3.0), dpar(0.25, 3.0),
        mpar(0.5, 5.0);
    const double alpha = std::round(apar(rng) * 16) / 16;
    const double D = std::round(dpar(rng) * 16) / 16;
    const double beta = alpha - 2 + D;
    const Surd thr = sharp_threshold(eq, exact_from_double(alpha).value,
                                     exact_from_double(beta).value);
    double N = thr.to_double() + 2 - alpha + mpar(rng);
    N = std::max(N, 2 - alpha + 0.5);
    N = std::round(N * 16) / 16;
    return {N, alpha, beta};
  }
};

}  // namespace

TEST_CASE("growth-regime constructions solve the equations exactly") {
  // hand-checked case: (G), N=11, alpha=beta=0; both sides equal
  // 2 (1+r^2)^{-2} (11 + 9 r^2) at every r; at r=1 that is 10
  auto wg = construct_witness(EquationKind::gelfand(), 11, 0, 0);
  CHECK(wg.expected_exact);
  const WeightFamily wf = wg.weights();
  CHECK(apply_operator(wf, 11, wg.u, 1.0) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(wf.omega2(1.0) * std::exp(wg.u.value(1.0)) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(std::fabs(residual(wg, 1.0)) <= 1e-12);

  // (L), p=2, N=20: u = (1+r^2)^{-1}, g = 2(20 - 4 r^2/(1+r^2))
  auto wl = construct_witness(EquationKind::lane_emden(2.0), 20, 0, 0);
  CHECK(wl.u.kind == RadialFunction::Kind::Power);
  CHECK(wl.u.param == doctest::Approx(-1.0));
  CHECK(wl.g.value(1.0) == doctest::Approx(2.0 * (20 - 4 * 0.5)));
  for (double r : log_spaced_radii(50, 1e-3, 1e3))
    CHECK(relative_residual(wl, r) <= 1e-12);

  // (M), p=1, N=20 at r=2
  auto wm = construct_witness(EquationKind::mems(1.0), 20, 0, 0);
  CHECK(std::fabs(residual(wm, 2.0)) /
            (std::fabs(apply_operator(wm.weights(), 20, wm.u, 2.0)) + 1.0) <=
        1e-12);
}

TEST_CASE("randomized existence-side instances have machine-zero residuals") {
  ExistenceSampler sampler(101);
  const auto radii = log_spaced_radii(200, 1e-3, 1e3);
  for (auto eq : {EquationKind::gelfand(), EquationKind::lane_emden(2.0),
                  EquationKind::mems(1.5)}) {
    for (int i = 0; i < 10; ++i) {
      auto [N, alpha, beta] = sampler.draw(eq);
      auto w = construct_witness(eq, N, alpha, beta);
      CHECK(w.expected_exact);
      for (double r : radii) CHECK(relative_residual(w, r) <= 1e-10);
    }
  }
}

TEST_CASE("flat-regime witnesses satisfy the strict sign contract") {
  // (G), N=5, beta=-4: D=-2, u=0, g = epsilon
  auto w = construct_witness(EquationKind::gelfand(), 5, 0, -4);
  CHECK_FALSE(w.expected_exact);
  CHECK(w.u.kind == RadialFunction::Kind::Zero);
  CHECK(w.g.kind == GFactor::Kind::Constant);
  for (double r : log_spaced_radii(50, 1e-2, 1e3))
    CHECK(residual(w, r) < 0.0);  // strict sub-solution

  // (L) flat: u = 1, residual = -eps (1+r^2)^{beta/2} < 0
  auto wl = construct_witness(EquationKind::lane_emden(2.0), 5, 0, -4);
  CHECK(residual(wl, 3.0) == doctest::Approx(-wl.g.eps * std::pow(10.0, -2.0)));

  // (M) flat: super-solution, residual > 0
  auto wm = construct_witness(EquationKind::mems(2.0), 5, 0, -4);
  for (double r : log_spaced_radii(50, 1e-2, 1e3)) CHECK(residual(wm, r) > 0.0);
}

TEST_CASE("construct_witness rejects boundary and nonexistence-side inputs") {
  CHECK_THROWS_AS(construct_witness(EquationKind::gelfand(), 9, 0, 0), std::domain_error);
  CHECK_THROWS_AS(construct_witness(EquationKind::gelfand(), 10, 0, 0), std::domain_error);
  CHECK_THROWS_AS(construct_witness(EquationKind::gelfand(), 5, 0, -2), std::domain_error);
  CHECK_THROWS_AS(construct_witness(EquationKind::gelfand(), 1.5, 0, -4), std::domain_error);
}

TEST_CASE("g positivity infima") {
  Witness wg = construct_witness(EquationKind::gelfand(), 11, 0, 0);
  auto gp = g_positivity(wg);
  CHECK(gp.positive);
  CHECK(gp.infimum == doctest::Approx(18.0));  // 2 (11 - 2), the r->infinity limit

  // outside the existence region the same closed form dips negative
  Witness bad = construct_pair_unchecked(EquationKind::gelfand(), 1, 0, 0);
  auto gb = g_positivity(bad);
  CHECK_FALSE(gb.positive);
  CHECK(gb.infimum == doctest::Approx(-2.0));

  Witness flat = construct_witness(EquationKind::gelfand(), 5, 0, -4);
  CHECK(g_positivity(flat).infimum == doctest::Approx(flat.g.eps));
}

TEST_CASE("g positivity agrees with dense sampling") {
  ExistenceSampler sampler(55);
  for (auto eq : {EquationKind::gelfand(), EquationKind::lane_emden(3.0),
                  EquationKind::mems(0.5)}) {
    auto [N, alpha, beta] = sampler.draw(eq);
    auto w = construct_witness(eq, N, alpha, beta);
    auto gp = g_positivity(w);
    double sampled = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10000; ++i) {
      const double r = std::pow(10.0, -3.0 + 9.0 * i / 10000.0);
      sampled = std::min(sampled, w.g.value(r));
    }
    sampled = std::min(sampled, w.g.value(0.0));
    CHECK(gp.infimum <= sampled + 1e-9 * std::fabs(sampled));
    CHECK(gp.infimum >= sampled - 0.05 * std::fabs(sampled) - 1e-9);
  }
}

TEST_CASE("epsilon selection matches the closed-form optimum") {
  auto c3 = select_epsilon(EquationKind::gelfand(), 3, 0);
  CHECK(c3.t_used == doctest::Approx(0.25));
  CHECK(c3.sigma_max == doctest::Approx(0.125));
  CHECK(c3.epsilon == doctest::Approx(0.0625));

  auto c4 = select_epsilon(EquationKind::gelfand(), 4, 0);
  CHECK(c4.sigma_max == doctest::Approx(0.5));
  CHECK(c4.epsilon == doctest::Approx(0.25));

  auto cl = select_epsilon(EquationKind::lane_emden(2.0), 3, 0);
  CHECK(cl.epsilon == doctest::Approx(0.03125));

  CHECK_THROWS_AS(select_epsilon(EquationKind::gelfand(), 2, 0), std::domain_error);
}

TEST_CASE("selected sigma satisfies the defining pointwise inequality") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> apar(-2.0, 4.0), dim(1.0, 15.0);
  int tested = 0;
  while (tested < 20) {
    const double alpha = apar(rng), N = dim(rng);
    if (!(N + alpha - 2 > 0.1)) continue;
    ++tested;
    const auto c = select_epsilon(EquationKind::gelfand(), N, alpha);
    CHECK(c.sigma_max > 0.0);
    for (int i = 0; i < 1000; ++i) {
      const double s = i / 1000.0;
      CHECK(c.sigma_max <=
            (c.t_used + 0.5 * alpha) * (N - 2.0 * (c.t_used + 1.0) * s) + 1e-12);
    }
  }
}
