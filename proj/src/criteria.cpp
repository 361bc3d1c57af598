#include "liouville/criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace liouville {

namespace {

// growth_exponent is affine in t:  e(t) = (N+alpha-2) - 2 t (beta-alpha+2)/m
// with m = 1 (G), p-1 (L), p+1 (M).
Rational affine_divisor(const EquationKind& eq) {
  switch (eq.tag) {
    case EquationKind::Tag::G: return Rational(1);
    case EquationKind::Tag::L: return eq.p - 1;
    case EquationKind::Tag::M: return eq.p + 1;
  }
  return Rational(1);
}

// a rational strictly inside the open interval (lo, hi): the exact
// midpoint when it is rational, otherwise the coarsest dyadic rounding of
// the numeric midpoint that verifies exactly
Rational rational_inside(const Surd& lo, const Surd& hi) {
  const Surd mid = (lo + hi) / Rational(2);
  if (mid.is_rational()) return mid.rational_part();
  const double m = mid.to_double();
  BigInt den = 1;
  for (int k = 0; k <= 64; ++k, den *= 2) {
    const double scaled = m * static_cast<double>(den);
    const Rational t(BigInt(std::llround(scaled)), den);
    Surd ts{t};
    if (lo < ts && ts < hi) return t;
  }
  throw std::logic_error("rational_inside: no dyadic point found in a nonempty interval");
}

}  // namespace

TInterval t_interval(const EquationKind& eq, SolutionRole role) {
  if (!role_admissible(eq, role))
    throw std::invalid_argument("t_interval: role not admissible for this equation");
  switch (eq.tag) {
    case EquationKind::Tag::G:
      return {Surd(Rational(0)), Surd(Rational(2))};
    case EquationKind::Tag::L: {
      if (role == SolutionRole::SuperSolution)
        return {Surd(Rational(0)), Surd(Rational(1, 2))};
      const Rational rad = eq.p * (eq.p - 1);
      return {Surd(eq.p, Rational(-1), rad), Surd(eq.p, Rational(1), rad)};
    }
    case EquationKind::Tag::M: {
      const Rational rad = eq.p * (eq.p + 1);
      return {Surd(Rational(0)), Surd(eq.p, Rational(1), rad)};
    }
  }
  throw std::logic_error("t_interval: unreachable");
}

Rational growth_exponent(const EquationKind& eq, IJQuantity, const Rational& N,
                         const Rational& alpha, const Rational& beta, const Rational& t) {
  switch (eq.tag) {
    case EquationKind::Tag::G:
      return N + alpha * (2 * t + 1) - 2 * t * beta - (4 * t + 2);
    case EquationKind::Tag::L:
      return N + (alpha * (eq.p + 2 * t - 1) - 2 * t * beta) / (eq.p - 1) -
             2 * (2 * t + eq.p - 1) / (eq.p - 1);
    case EquationKind::Tag::M:
      return N + (alpha * (eq.p + 2 * t + 1) - 2 * t * beta) / (eq.p + 1) -
             2 * (eq.p + 2 * t + 1) / (eq.p + 1);
  }
  throw std::logic_error("growth_exponent: unreachable");
}

double growth_exponent(const EquationKind& eq, IJQuantity q, double N, double alpha,
                       double beta, double t) {
  return static_cast<double>(growth_exponent(eq, q, exact_from_double(N).value,
                                             exact_from_double(alpha).value,
                                             exact_from_double(beta).value,
                                             exact_from_double(t).value));
}

std::optional<Rational> nonexistence_certificate(const EquationKind& eq, SolutionRole role,
                                                 const Rational& N, const Rational& alpha,
                                                 const Rational& beta) {
  const TInterval iv = t_interval(eq, role);
  const Rational margin = N + alpha - 2;
  const Rational growth = beta - alpha + 2;
  const Rational m = affine_divisor(eq);

  Surd lo = iv.lo, hi = iv.hi;
  if (growth == 0) {
    if (!(margin < 0)) return std::nullopt;  // constant exponent, never negative
  } else {
    const Surd t_crit{m * margin / (2 * growth)};
    if (growth > 0) {
      if (t_crit > lo) lo = t_crit;  // exponent negative for t > t_crit
    } else {
      if (t_crit < hi) hi = t_crit;  // exponent negative for t < t_crit
    }
    if (!(lo < hi)) return std::nullopt;
  }
  const Rational t = rational_inside(lo, hi);
  // feasible-interval membership already implies a negative exponent
  return t;
}

Surd sharp_threshold(const EquationKind& eq, const Rational& alpha, const Rational& beta) {
  const Rational growth = beta - alpha + 2;
  switch (eq.tag) {
    case EquationKind::Tag::G:
      return Surd(4 * growth);
    case EquationKind::Tag::L: {
      const Rational c = 2 * growth / (eq.p - 1);
      return Surd(c * eq.p, c, eq.p * (eq.p - 1));
    }
    case EquationKind::Tag::M: {
      const Rational c = 2 * growth / (eq.p + 1);
      return Surd(c * eq.p, c, eq.p * (eq.p + 1));
    }
  }
  throw std::logic_error("sharp_threshold: unreachable");
}

Classification classify(const ProblemInstance& inst) {
  const ExactReal N = exact_from_double(inst.N);
  const ExactReal alpha = exact_from_double(inst.weights.alpha);
  const ExactReal beta = exact_from_double(inst.weights.beta);
  const SolutionRole role = natural_role(inst.eq);

  Classification out;
  out.inputs_recognized = N.recognized && alpha.recognized && beta.recognized;
  out.margin = N.value + alpha.value - 2;
  out.threshold = sharp_threshold(inst.eq, alpha.value, beta.value);

  const Rational growth = beta.value - alpha.value + 2;

  auto nonexist = [&] {
    Nonexistence ne;
    ne.certificate_t = nonexistence_certificate(inst.eq, role, N.value, alpha.value, beta.value);
    if (ne.certificate_t)
      ne.exponent = growth_exponent(inst.eq, IJQuantity::I, N.value, alpha.value, beta.value,
                                    *ne.certificate_t);
    out.outcome = std::move(ne);
  };

  if (out.margin < 0) {  // trivial case
    nonexist();
    return out;
  }
  if (out.margin == 0) {
    out.outcome = Undetermined{UndeterminedReason::BoundaryEquality};
    return out;
  }
  // margin > 0: compare against the sharp threshold, exactly
  const int cmp = compare(Surd(out.margin), out.threshold);
  if (cmp < 0) {
    nonexist();
    return out;
  }
  if (cmp == 0 || growth == 0) {
    // equality cases are deliberately left open
    out.outcome = Undetermined{UndeterminedReason::BoundaryEquality};
    return out;
  }
  out.outcome = Existence{construct_witness(inst.eq, inst.N, inst.weights.alpha,
                                            inst.weights.beta)};
  return out;
}

Surd corollary_threshold(const EquationKind& eq, CorollaryPreset preset) {
  const bool mono = preset == CorollaryPreset::MonotoneBounded;
  switch (eq.tag) {
    case EquationKind::Tag::G:
      return Surd(Rational(mono ? 10 : 5));
    case EquationKind::Tag::L: {
      const Rational c = Rational(mono ? 4 : 2) / (eq.p - 1);
      return Surd(Rational(mono ? 2 : 1) + c * eq.p, c, eq.p * (eq.p - 1));
    }
    case EquationKind::Tag::M: {
      const Rational c = Rational(mono ? 4 : 2) / (eq.p + 1);
      return Surd(Rational(mono ? 2 : 1) + c * eq.p, c, eq.p * (eq.p + 1));
    }
  }
  throw std::logic_error("corollary_threshold: unreachable");
}

bool is_trivial_case(const Rational& N, const Rational& alpha) { return N + alpha - 2 < 0; }

bool is_trivial_case(double N, double alpha) {
  return is_trivial_case(exact_from_double(N).value, exact_from_double(alpha).value);
}

}  // namespace liouville
