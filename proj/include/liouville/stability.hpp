#pragma once

#include "liouville/problem.hpp"
#include "liouville/weights.hpp"
#include "liouville/witness.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace liouville {

// Radial mesh on [0, r_max]; natural boundary at 0, essential zero at r_max.
struct RadialGrid {
  double N = 3;
  double r_max = 1;
  std::vector<double> nodes;  // strictly increasing, nodes.front() == 0

  // uniform mesh with n elements
  static RadialGrid uniform(double N, double r_max, int elements);
  // geometric grading: element size h0 at the origin growing by `ratio`
  // per element, node count capped at 2^16
  static RadialGrid graded(double N, double r_max, double h0 = 1e-3, double ratio = 1.05);
};

using RadialCoefficient = std::function<double(double)>;

// Q(psi) = sphere_area(N) * int (omega_1 psi'^2 - potential psi^2) r^{N-1} dr
// for a P1 function psi given by nodal values (psi.back() must be 0).
double quadratic_form(const WeightFamily& w, const RadialCoefficient& potential,
                      const RadialGrid& grid, const std::vector<double>& psi);

// sphere_area-weighted L2 mass of a P1 nodal function
double l2_mass(const RadialGrid& grid, const std::vector<double>& psi);

// Smallest eigenvalue of A x = lambda B x, where A discretizes
// int (omega_1 psi'^2 - potential psi^2) r^{N-1} dr and B the weighted L2
// inner product; P1 elements, 3-point Gauss per element, bisection on the
// Sturm-sequence inertia of A - lambda B to absolute tolerance 1e-10.
struct RayleighResult {
  double lambda_min = 0;
  std::vector<double> mode;  // minimizing nodal vector (interior dofs + zero tail)
};
RayleighResult min_rayleigh(const WeightFamily& w, const RadialCoefficient& potential,
                            const RadialGrid& grid);

enum class StabilityVerdict { StableEvidence, UnstableCertificate, Inconclusive };

struct StabilityRung {
  double r_max = 0;
  double lambda_coarse = 0;
  double lambda_fine = 0;
  std::size_t mesh_size = 0;  // nodes of the fine mesh
};

struct StabilityReport {
  std::vector<StabilityRung> rungs;
  StabilityVerdict verdict = StabilityVerdict::Inconclusive;
  double worst_lambda = 0;
  std::vector<double> violator;  // minimizing mode for the most negative rung
};

// Evaluates the stability quadratic form of the witness over a truncation
// ladder, two mesh resolutions per rung.  A mesh-converged negative
// eigenvalue is a genuine disproof of stability (a compactly supported
// violator); nonnegative eigenvalues on every rung are evidence only.
StabilityReport check_stability(const Witness& wit, const std::vector<double>& ladder);

// Smooth compactly supported bump exp(-1/(1-y^2)), y = (r-center)/width,
// vanishing to all orders at the support edges.
struct SmoothBump {
  double center = 1;
  double width = 0.5;

  double value(double r) const;
  double deriv(double r) const;
  double support_lo() const { return center - width; }
  double support_hi() const { return center + width; }
};

struct HardyResult {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

// (tau-1/2)^2 int E^{2tau-2} |E'|^2 phi^2 + (1/2-tau) int (-Lap E) E^{2tau-1} phi^2
//   <= int E^{2tau} |phi'|^2,   Lap E = E'' + (N-1) E'/r
HardyResult hardy_lemma_check(const RadialFunction& E, double tau, double N,
                              const SmoothBump& phi);

// int (1+r^2)^{a/2} |phi'|^2 >= (t+a/2)^2 int r^2 (1+r^2)^{-2+a/2} phi^2
//   + (t+a/2) int (N - 2(t+1) r^2/(1+r^2)) (1+r^2)^{-1+a/2} phi^2
HardyResult hardy_corollary_check(double alpha, double t, double N, const SmoothBump& phi);

// t in [-alpha/2, (N-2)/2] satisfying
//   (beta-alpha+2) <= t + alpha/2   and
//   (beta-alpha+2)(N+alpha-2) <= (t+alpha/2)(N-t-2+alpha/2);
// tries t = (N-2)/2 first, then scans.  Requires beta-alpha+2 > 0.
std::optional<double> t_feasibility_G(double alpha, double beta, double N);

// Pointwise sufficient stability condition: the coefficient
// omega_2 f'(u) is dominated at every grid radius (and in the r->infinity
// limit) by the Hardy-corollary right-hand side coefficient at this t.
bool pointwise_domination_check(const EquationKind& eq, const Witness& wit, double t,
                                const RadialGrid& grid);

// scans for a t making pointwise_domination_check pass
std::optional<double> find_domination_t(const EquationKind& eq, const Witness& wit,
                                        const RadialGrid& grid);

}  // namespace liouville
