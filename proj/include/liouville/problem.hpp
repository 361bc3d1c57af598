#pragma once

#include "liouville/exact.hpp"
#include "liouville/weights.hpp"

#include <stdexcept>

namespace liouville {

// f(u) = e^u (G), u^p with p > 1 (L), -u^{-p} with p > 0 (M)
struct EquationKind {
  enum class Tag { G, L, M };

  Tag tag = Tag::G;
  Rational p{0};  // exact exponent, unused for G

  static EquationKind gelfand() { return {Tag::G, Rational(0)}; }
  static EquationKind lane_emden(const Rational& p) {
    if (p <= 1) throw std::invalid_argument("EquationKind: (L) requires p > 1");
    return {Tag::L, p};
  }
  static EquationKind mems(const Rational& p) {
    if (p <= 0) throw std::invalid_argument("EquationKind: (M) requires p > 0");
    return {Tag::M, p};
  }
  static EquationKind lane_emden(double p) { return lane_emden(exact_from_double(p).value); }
  static EquationKind mems(double p) { return mems(exact_from_double(p).value); }

  double p_double() const { return static_cast<double>(p); }

  double f(double u) const {
    switch (tag) {
      case Tag::G: return std::exp(u);
      case Tag::L: return std::pow(u, p_double());
      case Tag::M: return -std::pow(u, -p_double());
    }
    return 0.0;
  }
  double fprime(double u) const {
    const double pd = p_double();
    switch (tag) {
      case Tag::G: return std::exp(u);
      case Tag::L: return pd * std::pow(u, pd - 1.0);
      case Tag::M: return pd * std::pow(u, -pd - 1.0);
    }
    return 0.0;
  }
};

enum class SolutionRole { SubSolution, SuperSolution };

// G admits sub-solution analysis only; L both; M super-solution only.
inline bool role_admissible(const EquationKind& eq, SolutionRole role) {
  switch (eq.tag) {
    case EquationKind::Tag::G: return role == SolutionRole::SubSolution;
    case EquationKind::Tag::L: return true;
    case EquationKind::Tag::M: return role == SolutionRole::SuperSolution;
  }
  return false;
}

// the role the classifier argues about for each equation
inline SolutionRole natural_role(const EquationKind& eq) {
  return eq.tag == EquationKind::Tag::M ? SolutionRole::SuperSolution
                                        : SolutionRole::SubSolution;
}

struct ProblemInstance {
  EquationKind eq;
  double N = 3;  // real dimension >= 1
  WeightFamily weights;

  ProblemInstance(EquationKind e, double n, WeightFamily w)
      : eq(std::move(e)), N(n), weights(std::move(w)) {
    if (!(N >= 1)) throw std::invalid_argument("ProblemInstance: N must be >= 1");
  }
};

}  // namespace liouville
