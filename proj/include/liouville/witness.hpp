#pragma once

#include "liouville/problem.hpp"
#include "liouville/weights.hpp"

namespace liouville {

// Explicit sub/super-solution pair (u, g) for the optimality side.
// expected_exact: the pair solves the equation with equality (growth
// regime); false for the flat regime, where the inequality is strict.
struct Witness {
  RadialFunction u;
  GFactor g;
  SolutionRole role = SolutionRole::SubSolution;
  EquationKind eq;
  double N = 0, alpha = 0, beta = 0;
  bool expected_exact = false;

  WeightFamily weights() const { return WeightFamily{alpha, beta, g}; }
};

struct EpsilonChoice {
  double epsilon = 0;
  double sigma_max = 0;
  double t_used = 0;
};

// sigma_max = sup over admissible t of inf_{s in [0,1)} (t+alpha/2)(N-2(t+1)s);
// epsilon = sigma_max/2 for (G), sigma_max/(2p) for (L), (M).
// Requires N + alpha - 2 > 0.
EpsilonChoice select_epsilon(const EquationKind& eq, double N, double alpha);

// Builds the explicit witness for an instance strictly on the existence
// side (N+alpha-2 > 0, strictly above the sharp threshold, beta-alpha+2 != 0).
// Throws std::domain_error on boundary or nonexistence-side inputs.
Witness construct_witness(const EquationKind& eq, double N, double alpha, double beta);

// Same closed-form pair without the existence-side gate; used to probe
// instability on the nonexistence side, where the pair still solves the
// equation exactly but cannot be stable.
Witness construct_pair_unchecked(const EquationKind& eq, double N, double alpha, double beta);

// LHS - RHS of the equation at radius r.  Sub-solutions have residual <= 0,
// super-solutions >= 0; exact pairs have |residual| ~ 0.
double residual(const Witness& wit, double r);

struct GPositivity {
  double infimum = 0;
  bool positive = false;
};
GPositivity g_positivity(const Witness& wit);

}  // namespace liouville
