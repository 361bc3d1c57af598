#pragma once

#include "liouville/exact.hpp"
#include "liouville/problem.hpp"
#include "liouville/witness.hpp"

#include <optional>
#include <variant>

namespace liouville {

// Open interval of admissible test exponents t, endpoints exact.
struct TInterval {
  Surd lo, hi;
};

// Admissible t range for the stability test-function substitution:
//   (G, sub):   (0, 2)
//   (L, sub):   (p - sqrt(p(p-1)), p + sqrt(p(p-1)))
//   (L, super): (0, 1/2)
//   (M, super): (0, p + sqrt(p(p+1)))
TInterval t_interval(const EquationKind& eq, SolutionRole role);

enum class IJQuantity { I, J };

// Exponent e with quantity ~ R^e as R -> infinity for the power-law
// weight family.  I and J share the exponent in all three cases.
Rational growth_exponent(const EquationKind& eq, IJQuantity q, const Rational& N,
                         const Rational& alpha, const Rational& beta, const Rational& t);
double growth_exponent(const EquationKind& eq, IJQuantity q, double N, double alpha,
                       double beta, double t);

// Exact rational t strictly inside the admissible interval with strictly
// negative growth exponent (midpoint of the feasible sub-interval when it
// is rational, otherwise a verified dyadic point near it); nullopt when
// the feasible set is empty.
std::optional<Rational> nonexistence_certificate(const EquationKind& eq, SolutionRole role,
                                                 const Rational& N, const Rational& alpha,
                                                 const Rational& beta);

// Sharp existence threshold on N + alpha - 2 for beta - alpha + 2 > 0:
//   (G):  4 (beta-alpha+2)
//   (L):  2(beta-alpha+2)/(p-1) (p + sqrt(p(p-1)))
//   (M):  2(beta-alpha+2)/(p+1) (p + sqrt(p(p+1)))
Surd sharp_threshold(const EquationKind& eq, const Rational& alpha, const Rational& beta);

enum class UndeterminedReason { BoundaryEquality, OutsideScope };

struct Nonexistence {
  std::optional<Rational> certificate_t;  // present except in some trivial-case corners
  std::optional<Rational> exponent;       // growth exponent at certificate_t
};
struct Existence {
  Witness witness;
};
struct Undetermined {
  UndeterminedReason reason = UndeterminedReason::BoundaryEquality;
};

struct Classification {
  std::variant<Nonexistence, Existence, Undetermined> outcome;
  Surd threshold;            // sharp threshold on N + alpha - 2
  Rational margin;           // N + alpha - 2
  bool inputs_recognized = true;  // all inputs recovered as small rationals

  bool is_nonexistence() const { return std::holds_alternative<Nonexistence>(outcome); }
  bool is_existence() const { return std::holds_alternative<Existence>(outcome); }
  bool is_undetermined() const { return std::holds_alternative<Undetermined>(outcome); }
};

// Sharp classifier of the power-law family (role implied by the equation:
// sub for G and L, super for M).
Classification classify(const ProblemInstance& inst);

enum class CorollaryPreset { MonotoneBounded, BoundedGradient };

// Dimension bound below which nonexistence holds under the abstract
// weight hypotheses: MonotoneBounded gives 10 (G) and
// 2 + 4/(p-+1)(p + sqrt(p(p-+1))) (L, M); BoundedGradient gives 5 (G)
// and 1 + 2/(p-+1)(p + sqrt(p(p-+1))).
Surd corollary_threshold(const EquationKind& eq, CorollaryPreset preset);

// true iff N + alpha - 2 < 0 (the annulus integral of omega_1 / R^2
// vanishes as R grows, so stable solutions are immediately ruled out)
bool is_trivial_case(double N, double alpha);
bool is_trivial_case(const Rational& N, const Rational& alpha);

}  // namespace liouville
