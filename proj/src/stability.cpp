#include "liouville/stability.hpp"

#include "liouville/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace liouville {

namespace {

constexpr double kGauss3X[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGauss3W[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

constexpr std::size_t kMaxNodes = 1u << 16;
constexpr double kBisectTol = 1e-10;

struct Tridiag {
  std::vector<double> diag, off;  // off[i] couples dof i and i+1
};

// Assembles stiffness-minus-potential (A) and mass (B) for P1 elements on
// the grid with weight r^{N-1}; essential zero at the last node (its dof
// is eliminated), natural boundary at r = 0.
void assemble(const WeightFamily& w, const RadialCoefficient& potential,
              const RadialGrid& grid, Tridiag& A, Tridiag& B) {
  const std::size_t n = grid.nodes.size();
  if (n < 2) throw std::invalid_argument("assemble: degenerate grid");
  const std::size_t dofs = n - 1;
  A.diag.assign(dofs, 0.0); A.off.assign(dofs - 1, 0.0);
  B.diag.assign(dofs, 0.0); B.off.assign(dofs - 1, 0.0);

  for (std::size_t e = 0; e + 1 < n; ++e) {
    const double ra = grid.nodes[e], rb = grid.nodes[e + 1];
    const double h = rb - ra;
    double k = 0;                       // int omega_1 r^{N-1} / h^2
    double m[2][2] = {{0, 0}, {0, 0}};  // int r^{N-1} phi_i phi_j
    double v[2][2] = {{0, 0}, {0, 0}};  // int V r^{N-1} phi_i phi_j
    for (int q = 0; q < 3; ++q) {
      const double s = 0.5 + 0.5 * kGauss3X[q];
      const double r = ra + s * h;
      const double wq = 0.5 * h * kGauss3W[q];
      const double rad = std::pow(r, grid.N - 1.0);
      const double phi[2] = {1.0 - s, s};
      k += wq * w.omega1(r) * rad / (h * h);
      const double V = potential(r);
      if (!std::isfinite(V))
        throw std::domain_error("assemble: non-finite potential at r = " + std::to_string(r));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          m[i][j] += wq * rad * phi[i] * phi[j];
          v[i][j] += wq * V * rad * phi[i] * phi[j];
        }
    }
    const double ke[2][2] = {{k, -k}, {-k, k}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const std::size_t gi = e + i, gj = e + j;
        if (gi >= dofs || gj >= dofs) continue;  // Dirichlet node dropped
        const double a = ke[i][j] - v[i][j];
        const double b = m[i][j];
        if (gi == gj) { A.diag[gi] += a; B.diag[gi] += b; }
        else if (gj == gi + 1) { A.off[gi] += a; B.off[gi] += b; }
        // gi == gj + 1 is the mirror of the off-diagonal entry already counted
      }
  }
}

// number of negative pivots of the LDL^T factorization of A - lambda B
std::size_t inertia(const Tridiag& A, const Tridiag& B, double lambda) {
  const std::size_t n = A.diag.size();
  std::size_t neg = 0;
  double prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = A.diag[i] - lambda * B.diag[i];
    if (i > 0) {
      const double e = A.off[i - 1] - lambda * B.off[i - 1];
      d -= e * e / prev;
    }
    if (d == 0.0) d = -1e-300;  // shift off exact singularity
    if (d < 0) ++neg;
    prev = d;
  }
  return neg;
}

// solve (A - sigma B) x = rhs in place, LDL^T without pivoting (pivots
// regularized); adequate for inverse iteration near a simple eigenvalue
void shifted_solve(const Tridiag& A, const Tridiag& B, double sigma, std::vector<double>& x) {
  const std::size_t n = A.diag.size();
  std::vector<double> d(n), l(n > 0 ? n - 1 : 0);
  double prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double di = A.diag[i] - sigma * B.diag[i];
    if (i > 0) {
      const double e = A.off[i - 1] - sigma * B.off[i - 1];
      l[i - 1] = e / prev;
      di -= l[i - 1] * e;
    }
    if (std::fabs(di) < 1e-300) di = di >= 0 ? 1e-300 : -1e-300;
    d[i] = di;
    prev = di;
  }
  for (std::size_t i = 1; i < n; ++i) x[i] -= l[i - 1] * x[i - 1];
  for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= l[i] * x[i + 1];
}

double b_norm(const Tridiag& B, const std::vector<double>& x) {
  const std::size_t n = x.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += B.diag[i] * x[i] * x[i];
    if (i + 1 < n) s += 2.0 * B.off[i] * x[i] * x[i + 1];
  }
  return std::sqrt(std::max(s, 0.0));
}

}  // namespace

RadialGrid RadialGrid::uniform(double N, double r_max, int elements) {
  if (elements < 1 || !(r_max > 0)) throw std::invalid_argument("RadialGrid::uniform: bad args");
  RadialGrid g;
  g.N = N;
  g.r_max = r_max;
  g.nodes.resize(static_cast<std::size_t>(elements) + 1);
  for (int i = 0; i <= elements; ++i) g.nodes[i] = r_max * i / elements;
  g.nodes.back() = r_max;
  return g;
}

RadialGrid RadialGrid::graded(double N, double r_max, double h0, double ratio) {
  if (!(r_max > 0) || !(h0 > 0) || !(ratio > 1))
    throw std::invalid_argument("RadialGrid::graded: bad args");
  // geometric element sizes toward the midpoint, mirrored so the mesh
  // clusters at both r = 0 and r = r_max
  std::vector<double> inc;
  double h = h0, acc = 0;
  const double half = 0.5 * r_max;
  while (acc < half && 2 * inc.size() + 1 < kMaxNodes) {
    inc.push_back(h);
    acc += h;
    h *= ratio;
  }
  const double scale = half / acc;
  RadialGrid g;
  g.N = N;
  g.r_max = r_max;
  g.nodes.push_back(0.0);
  for (double step : inc) g.nodes.push_back(g.nodes.back() + step * scale);
  for (auto it = inc.rbegin(); it != inc.rend(); ++it)
    g.nodes.push_back(g.nodes.back() + *it * scale);
  g.nodes.back() = r_max;
  if (g.nodes.size() < 16) return uniform(N, r_max, 16);
  return g;
}

double quadratic_form(const WeightFamily& w, const RadialCoefficient& potential,
                      const RadialGrid& grid, const std::vector<double>& psi) {
  if (psi.size() != grid.nodes.size())
    throw std::invalid_argument("quadratic_form: psi size mismatch");
  if (psi.back() != 0.0)
    throw std::invalid_argument("quadratic_form: psi must vanish at r_max");
  double q = 0;
  for (std::size_t e = 0; e + 1 < grid.nodes.size(); ++e) {
    const double ra = grid.nodes[e], rb = grid.nodes[e + 1];
    const double h = rb - ra;
    const double dpsi = (psi[e + 1] - psi[e]) / h;
    for (int g = 0; g < 3; ++g) {
      const double s = 0.5 + 0.5 * kGauss3X[g];
      const double r = ra + s * h;
      const double wq = 0.5 * h * kGauss3W[g];
      const double rad = std::pow(r, grid.N - 1.0);
      const double val = psi[e] * (1.0 - s) + psi[e + 1] * s;
      q += wq * rad * (w.omega1(r) * dpsi * dpsi - potential(r) * val * val);
    }
  }
  return sphere_area(grid.N) * q;
}

double l2_mass(const RadialGrid& grid, const std::vector<double>& psi) {
  if (psi.size() != grid.nodes.size())
    throw std::invalid_argument("l2_mass: psi size mismatch");
  double q = 0;
  for (std::size_t e = 0; e + 1 < grid.nodes.size(); ++e) {
    const double ra = grid.nodes[e], rb = grid.nodes[e + 1];
    const double h = rb - ra;
    for (int g = 0; g < 3; ++g) {
      const double s = 0.5 + 0.5 * kGauss3X[g];
      const double r = ra + s * h;
      const double wq = 0.5 * h * kGauss3W[g];
      const double val = psi[e] * (1.0 - s) + psi[e + 1] * s;
      q += wq * std::pow(r, grid.N - 1.0) * val * val;
    }
  }
  return sphere_area(grid.N) * q;
}

RayleighResult min_rayleigh(const WeightFamily& w, const RadialCoefficient& potential,
                            const RadialGrid& grid) {
  Tridiag A, B;
  assemble(w, potential, grid, A, B);
  for (double b : B.diag)
    if (!(b > 0)) throw std::domain_error("min_rayleigh: mass matrix not positive definite");

  // bracket the smallest eigenvalue by expanding until the inertia flips
  double lo = -1.0, hi = 1.0;
  while (inertia(A, B, lo) > 0) { hi = lo; lo *= 8.0; if (lo < -1e30) break; }
  while (inertia(A, B, hi) < 1) { hi = hi > 0 ? hi * 8.0 : 1.0; if (hi > 1e30) break; }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (inertia(A, B, mid) >= 1) hi = mid; else lo = mid;
    if (hi - lo <= kBisectTol * std::max(1.0, std::fabs(hi))) break;
  }
  RayleighResult res;
  res.lambda_min = 0.5 * (lo + hi);

  // inverse iteration for the minimizing mode
  const std::size_t dofs = A.diag.size();
  std::vector<double> x(dofs, 1.0);
  const double sigma = res.lambda_min - 1e-8 * std::max(1.0, std::fabs(res.lambda_min));
  for (int it = 0; it < 4; ++it) {
    // x <- (A - sigma B)^{-1} B x
    std::vector<double> bx(dofs, 0.0);
    for (std::size_t i = 0; i < dofs; ++i) {
      bx[i] = B.diag[i] * x[i];
      if (i + 1 < dofs) bx[i] += B.off[i] * x[i + 1];
      if (i > 0) bx[i] += B.off[i - 1] * x[i - 1];
    }
    shifted_solve(A, B, sigma, bx);
    const double nrm = b_norm(B, bx);
    if (!(nrm > 0)) break;
    for (auto& v : bx) v /= nrm;
    x = std::move(bx);
  }
  x.push_back(0.0);  // Dirichlet node
  res.mode = std::move(x);
  return res;
}

namespace {

RadialCoefficient witness_potential(const Witness& wit) {
  const WeightFamily w = wit.weights();
  const EquationKind eq = wit.eq;
  const RadialFunction u = wit.u;
  return [w, eq, u](double r) { return w.omega2(r) * eq.fprime(u.value(r)); };
}

}  // namespace

StabilityReport check_stability(const Witness& wit, const std::vector<double>& ladder) {
  const WeightFamily w = wit.weights();
  const RadialCoefficient V = witness_potential(wit);

  StabilityReport rep;
  rep.worst_lambda = std::numeric_limits<double>::infinity();
  bool all_nonneg = true;
  bool certified = false;

  for (double r_max : ladder) {
    const RadialGrid coarse = RadialGrid::graded(wit.N, r_max, 1e-3, 1.04);
    const RadialGrid fine = RadialGrid::graded(wit.N, r_max, 5e-4, 1.02);
    RayleighResult rc = min_rayleigh(w, V, coarse);
    RayleighResult rf = min_rayleigh(w, V, fine);
    rep.rungs.push_back({r_max, rc.lambda_min, rf.lambda_min, fine.nodes.size()});
    if (rf.lambda_min < rep.worst_lambda) {
      rep.worst_lambda = rf.lambda_min;
      rep.violator = rf.mode;
    }
    if (rf.lambda_min < -1e-6) all_nonneg = false;
    const bool converged =
        std::fabs(rf.lambda_min - rc.lambda_min) <= 0.05 * std::fabs(rf.lambda_min);
    if (rf.lambda_min < -1e-5 && converged) certified = true;
  }
  rep.verdict = certified ? StabilityVerdict::UnstableCertificate
                          : (all_nonneg ? StabilityVerdict::StableEvidence
                                        : StabilityVerdict::Inconclusive);
  return rep;
}

double SmoothBump::value(double r) const {
  const double y = (r - center) / width;
  if (std::fabs(y) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - y * y));
}

double SmoothBump::deriv(double r) const {
  const double y = (r - center) / width;
  if (std::fabs(y) >= 1.0) return 0.0;
  const double t = 1.0 - y * y;
  return value(r) * (-2.0 * y / (t * t)) / width;
}

namespace {

// composite Gauss over the bump support
double bump_integral(const SmoothBump& phi, double N,
                     const std::function<double(double)>& f) {
  const double lo = std::max(0.0, phi.support_lo());
  const double hi = phi.support_hi();
  const int panels = 256;
  const double h = (hi - lo) / panels;
  double sum = 0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    for (int q = 0; q < 3; ++q) {
      const double r = a + (0.5 + 0.5 * kGauss3X[q]) * h;
      sum += 0.5 * h * kGauss3W[q] * f(r) * std::pow(r, N - 1.0);
    }
  }
  return sphere_area(N) * sum;
}

}  // namespace

HardyResult hardy_lemma_check(const RadialFunction& E, double tau, double N,
                              const SmoothBump& phi) {
  auto lhs1 = [&](double r) {
    const double Ev = E.value(r), Ep = E.d1(r), ph = phi.value(r);
    return std::pow(Ev, 2 * tau - 2) * Ep * Ep * ph * ph;
  };
  auto lhs2 = [&](double r) {
    const double Ev = E.value(r), Ep = E.d1(r), Epp = E.d2(r), ph = phi.value(r);
    const double lap = Epp + (N - 1.0) * Ep / r;
    return -lap * std::pow(Ev, 2 * tau - 1) * ph * ph;
  };
  auto rhs_f = [&](double r) {
    const double Ev = E.value(r), dp = phi.deriv(r);
    return std::pow(Ev, 2 * tau) * dp * dp;
  };
  HardyResult res;
  const double c = tau - 0.5;
  res.lhs = c * c * bump_integral(phi, N, lhs1) - c * bump_integral(phi, N, lhs2);
  res.rhs = bump_integral(phi, N, rhs_f);
  res.holds = res.lhs <= res.rhs + 1e-9 * (std::fabs(res.lhs) + std::fabs(res.rhs));
  return res;
}

HardyResult hardy_corollary_check(double alpha, double t, double N, const SmoothBump& phi) {
  const double c = t + 0.5 * alpha;
  auto pot1 = [&](double r) {
    const double ph = phi.value(r);
    return r * r * std::pow(1.0 + r * r, -2.0 + 0.5 * alpha) * ph * ph;
  };
  auto pot2 = [&](double r) {
    const double w = 1.0 + r * r;
    const double ph = phi.value(r);
    return (N - 2.0 * (t + 1.0) * r * r / w) * std::pow(w, -1.0 + 0.5 * alpha) * ph * ph;
  };
  auto energy = [&](double r) {
    const double dp = phi.deriv(r);
    return std::pow(1.0 + r * r, 0.5 * alpha) * dp * dp;
  };
  HardyResult res;
  res.lhs = c * c * bump_integral(phi, N, pot1) + c * bump_integral(phi, N, pot2);
  res.rhs = bump_integral(phi, N, energy);
  res.holds = res.lhs <= res.rhs + 1e-9 * (std::fabs(res.lhs) + std::fabs(res.rhs));
  return res;
}

namespace {

bool g_feasible_t(double alpha, double beta, double N, double t, double tol) {
  const double D = beta - alpha + 2.0;
  const double c = t + 0.5 * alpha;
  if (t < -0.5 * alpha - tol || t > 0.5 * (N - 2.0) + tol) return false;
  if (D > c + tol) return false;
  if (D * (N + alpha - 2.0) > c * (N - t - 2.0 + 0.5 * alpha) + tol) return false;
  return true;
}

}  // namespace

std::optional<double> t_feasibility_G(double alpha, double beta, double N) {
  if (!(beta - alpha + 2.0 > 0))
    throw std::domain_error("t_feasibility_G: requires beta - alpha + 2 > 0");
  const double tol = 1e-12 * (1.0 + std::fabs(N) + std::fabs(alpha) + std::fabs(beta));
  const double t_top = 0.5 * (N - 2.0);
  if (g_feasible_t(alpha, beta, N, t_top, tol)) return t_top;
  const double t_lo = -0.5 * alpha;
  const int steps = 20000;
  for (int i = steps; i >= 0; --i) {
    const double t = t_lo + (t_top - t_lo) * i / steps;
    if (g_feasible_t(alpha, beta, N, t, tol)) return t;
  }
  return std::nullopt;
}

bool pointwise_domination_check(const EquationKind& eq, const Witness& wit, double t,
                                const RadialGrid& grid) {
  const WeightFamily w = wit.weights();
  const double alpha = wit.alpha;
  const double c = t + 0.5 * alpha;
  const double N = wit.N;
  const RadialCoefficient V = witness_potential(wit);

  auto rhs_coeff = [&](double r) {
    const double q = 1.0 + r * r;
    const double s = r * r / q;
    return c * c * r * r * std::pow(q, -2.0 + 0.5 * alpha) +
           c * (N - 2.0 * (t + 1.0) * s) * std::pow(q, -1.0 + 0.5 * alpha);
  };
  const double tol = 1e-10;
  for (double r : grid.nodes) {
    const double lhs = V(r), rhs = rhs_coeff(r);
    if (lhs > rhs + tol * (std::fabs(lhs) + std::fabs(rhs) + 1.0)) return false;
  }
  // r -> infinity: both sides scale like (1+r^2)^{alpha/2-1} in the growth
  // regime (the flat regime decays strictly faster on the left)
  const double cf = eq.tag == EquationKind::Tag::G ? 1.0 : eq.p_double();
  double lhs_lim;
  if (wit.expected_exact) {
    lhs_lim = cf * wit.g.limit_at_infinity();
  } else {
    if (wit.beta < alpha - 2.0) return true;  // strictly faster decay
    lhs_lim = cf * wit.g.limit_at_infinity();
  }
  const double rhs_lim = c * c + c * (N - 2.0 * (t + 1.0));
  return lhs_lim <= rhs_lim + tol * (std::fabs(lhs_lim) + std::fabs(rhs_lim) + 1.0);
}

std::optional<double> find_domination_t(const EquationKind& eq, const Witness& wit,
                                        const RadialGrid& grid) {
  const double t_lo = -0.5 * wit.alpha;
  const double t_hi = 0.5 * (wit.N - 2.0);
  if (!(t_lo <= t_hi)) return std::nullopt;
  if (pointwise_domination_check(eq, wit, t_hi, grid)) return t_hi;
  const int steps = 400;
  for (int i = steps; i >= 0; --i) {
    const double t = t_lo + (t_hi - t_lo) * i / steps;
    if (pointwise_domination_check(eq, wit, t, grid)) return t;
  }
  return std::nullopt;
}

}  // namespace liouville
