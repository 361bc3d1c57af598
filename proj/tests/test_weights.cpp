#include "doctest.h"

#include "liouville/weights.hpp"

#include <cmath>
#include <random>

using namespace liouville;

TEST_CASE("omega1 values and radial derivative") {
  WeightFamily w0{0.0, 0.0, GFactor::one()};
  CHECK(w0.omega1(5.0) == doctest::Approx(1.0));
  CHECK(w0.omega1_prime(7.0) == doctest::Approx(0.0));

  WeightFamily w2{2.0, 0.0, GFactor::one()};
  CHECK(w2.omega1(1.0) == doctest::Approx(2.0));
  CHECK(w2.omega1_prime(1.0) == doctest::Approx(2.0));

  WeightFamily wm3{-3.0, 0.0, GFactor::one()};
  CHECK(wm3.omega1(3.0) == doctest::Approx(std::pow(10.0, -1.5)).epsilon(1e-12));

  WeightFamily wm4{-4.0, 0.0, GFactor::one()};
  CHECK(wm4.omega1_prime(1.0) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("omega2 values") {
  WeightFamily w{0.0, 0.0, GFactor::one()};
  CHECK(w.omega2(9.0) == doctest::Approx(1.0));

  // witness g for (G) at N=11, alpha=0, beta=0: g(0) = 2*11
  WeightFamily wg{0.0, 0.0, GFactor::witness_g(11, 0, 0)};
  CHECK(wg.omega2(0.0) == doctest::Approx(22.0));

  WeightFamily wc{0.0, 2.0, GFactor::constant(0.5)};
  CHECK(wc.omega2(1.0) == doctest::Approx(1.0));
}

TEST_CASE("apply_operator on closed forms") {
  // u = 1 + r^2, N = 3, flat weight: -(u'' + (2/r) u') = -(2 + 4) at r=1
  WeightFamily flat{0.0, 0.0, GFactor::one()};
  CHECK(apply_operator(flat, 3, RadialFunction::power(1.0), 1.0) == doctest::Approx(-6.0));

  CHECK(apply_operator(flat, 7, RadialFunction::constant(1.0), 2.0) == doctest::Approx(0.0));
  WeightFamily heavy{3.0, -1.0, GFactor::one()};
  CHECK(apply_operator(heavy, 7, RadialFunction::constant(4.0), 2.0) == doctest::Approx(0.0));

  // u = -ln(1+r^2), N = 11, flat weight: 2(1+r^2)^{-2} (N + (N-2) r^2) at r=1
  CHECK(apply_operator(flat, 11, RadialFunction::log_power(1.0), 1.0) ==
        doctest::Approx(2.0 * 0.25 * (11 + 9)).epsilon(1e-12));

  CHECK_THROWS_AS(apply_operator(flat, 3, RadialFunction::power(1.0), 0.0),
                  std::invalid_argument);
}

TEST_CASE("analytic derivatives match central finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> par(-2.5, 2.5);
  std::vector<RadialFunction> fs;
  for (int i = 0; i < 8; ++i) {
    fs.push_back(RadialFunction::log_power(par(rng)));
    fs.push_back(RadialFunction::power(par(rng)));
  }
  fs.push_back(RadialFunction::constant(3.0));
  for (const auto& f : fs) {
    for (double r : {1e-3, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
      const double h = 1e-5 * std::max(1.0, r);
      const double fd1 = (f.value(r + h) - f.value(r - h)) / (2 * h);
      const double fd2 = (f.value(r + h) - 2 * f.value(r) + f.value(r - h)) / (h * h);
      const double scale1 = std::fabs(f.d1(r)) + std::fabs(f.value(r)) + 1e-12;
      const double scale2 = std::fabs(f.d2(r)) + std::fabs(f.value(r)) + 1e-9;
      CHECK(std::fabs(f.d1(r) - fd1) <= 1e-6 * scale1);
      CHECK(std::fabs(f.d2(r) - fd2) <= 1e-4 * scale2);
    }
  }
}

TEST_CASE("omega1 monotonicity predicate matches sign of alpha") {
  for (double alpha : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
    WeightFamily w{alpha, 0.0, GFactor::one()};
    bool inward = true;
    for (double r : {0.5, 1.0, 10.0, 100.0})
      if (w.omega1_prime(r) * r > 0) inward = false;
    CHECK(inward == w.gradient_inward());
  }
}

TEST_CASE("sampled g factor interpolates monotonically and extrapolates flat") {
  auto g = GFactor::sampled({0.0, 1.0, 2.0, 5.0}, {1.0, 2.0, 4.0, 5.0});
  CHECK(g.value(0.0) == doctest::Approx(1.0));
  CHECK(g.value(1.0) == doctest::Approx(2.0));
  CHECK(g.value(100.0) == doctest::Approx(5.0));  // finite limit at infinity
  CHECK(g.limit_at_infinity() == doctest::Approx(5.0));
  // monotone data: interpolant stays within neighboring sample values
  for (double r = 0.0; r <= 5.0; r += 0.01) {
    CHECK(g.value(r) >= 1.0 - 1e-12);
    CHECK(g.value(r) <= 5.0 + 1e-12);
  }
  CHECK(g.infimum() == doctest::Approx(1.0));
}

TEST_CASE("witness g factors evaluate the closed forms") {
  // (L): ((b-a+2)/(p-1)) (N + (a-2-(b-a+2)/(p-1)) s)
  auto gl = GFactor::witness_l(20, 0, 0, 2);
  CHECK(gl.value(0.0) == doctest::Approx(2.0 * 20));
  double s = 1.0 / 2.0;  // r = 1
  CHECK(gl.value(1.0) == doctest::Approx(2.0 * (20 + (0 - 2 - 2) * s)));
  auto gm = GFactor::witness_m(20, 0, 0, 1);
  CHECK(gm.value(1.0) == doctest::Approx(1.0 * (20 + (0 - 2 + 1) * s)));
}
