#include "liouville/witness.hpp"

#include "liouville/criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace liouville {

EpsilonChoice select_epsilon(const EquationKind& eq, double N, double alpha) {
  if (!(N + alpha - 2 > 0))
    throw std::domain_error("select_epsilon: requires N + alpha - 2 > 0");
  // maximize (t+alpha/2) * min(N, N-2t-2) over t in (-alpha/2, (N-2)/2);
  // the quadratic branch peaks at t* = (N-2-alpha)/4, which is interior
  // whenever t* >= -1; otherwise the linear branch caps out at t = -1
  EpsilonChoice c;
  const double t_star = 0.25 * (N - 2.0 - alpha);
  if (t_star >= -1.0) {
    c.t_used = t_star;
    c.sigma_max = (t_star + 0.5 * alpha) * (N - 2.0 * t_star - 2.0);
  } else {
    c.t_used = -1.0;
    c.sigma_max = (0.5 * alpha - 1.0) * N;
  }
  const double divisor = eq.tag == EquationKind::Tag::G ? 2.0 : 2.0 * eq.p_double();
  c.epsilon = c.sigma_max / divisor;
  return c;
}

Witness construct_pair_unchecked(const EquationKind& eq, double N, double alpha, double beta) {
  const double D = beta - alpha + 2.0;
  Witness w;
  w.eq = eq;
  w.N = N;
  w.alpha = alpha;
  w.beta = beta;
  w.role = natural_role(eq);
  if (D > 0) {
    w.expected_exact = true;
    switch (eq.tag) {
      case EquationKind::Tag::G:
        w.u = RadialFunction::log_power(0.5 * D);
        w.g = GFactor::witness_g(N, alpha, beta);
        break;
      case EquationKind::Tag::L:
        w.u = RadialFunction::power(-0.5 * D / (eq.p_double() - 1.0));
        w.g = GFactor::witness_l(N, alpha, beta, eq.p_double());
        break;
      case EquationKind::Tag::M:
        w.u = RadialFunction::power(0.5 * D / (eq.p_double() + 1.0));
        w.g = GFactor::witness_m(N, alpha, beta, eq.p_double());
        break;
    }
  } else if (D < 0) {
    w.expected_exact = false;
    w.u = eq.tag == EquationKind::Tag::G ? RadialFunction::zero() : RadialFunction::constant(1.0);
    w.g = GFactor::constant(select_epsilon(eq, N, alpha).epsilon);
  } else {
    throw std::domain_error("construct_pair_unchecked: beta - alpha + 2 = 0 has no construction");
  }
  return w;
}

Witness construct_witness(const EquationKind& eq, double N, double alpha, double beta) {
  const ExactReal Ne = exact_from_double(N);
  const ExactReal ae = exact_from_double(alpha);
  const ExactReal be = exact_from_double(beta);
  const Rational margin = Ne.value + ae.value - 2;
  if (!(margin > 0)) throw std::domain_error("construct_witness: requires N + alpha - 2 > 0");
  const Rational growth = be.value - ae.value + 2;
  if (growth == 0)
    throw std::domain_error("construct_witness: beta - alpha + 2 = 0 is undetermined territory");
  if (!(Surd(margin) > sharp_threshold(eq, ae.value, be.value)))
    throw std::domain_error("construct_witness: instance is not strictly on the existence side");
  return construct_pair_unchecked(eq, N, alpha, beta);
}

double residual(const Witness& wit, double r) {
  if (!(r > 0)) throw std::invalid_argument("residual: requires r > 0");
  const WeightFamily w = wit.weights();
  if (!(w.g.value(r) > 0) && wit.expected_exact)
    throw std::domain_error("residual: g is not positive at this radius");
  const double lhs = apply_operator(w, wit.N, wit.u, r);
  const double rhs = w.omega2(r) * wit.eq.f(wit.u.value(r));
  return lhs - rhs;
}

GPositivity g_positivity(const Witness& wit) {
  GPositivity gp;
  gp.infimum = wit.g.infimum();
  gp.positive = gp.infimum > 0.0;
  return gp;
}

}  // namespace liouville
