#pragma once

#include <cstddef>
#include <vector>

#include "nilrad/linalg.hpp"

namespace nilrad {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RVector x;
  Rational value;
};

/// Maximizes c^T x subject to A x = b, x >= 0, by two-phase tableau simplex over the
/// rationals. Bland's rule is used for both entering and leaving variables.
LpSolution simplex_maximize(const RMatrix& a, const RVector& b, const RVector& c);

enum class SignConstraint { Free, NonNegative, Positive };

/// Linear feasibility question:
///   equalities * x = rhs,
///   x_i free / >= 0 / > 0 according to `signs`,
///   inequalities.row(r) * x <= 0, or < 0 when strict[r].
struct FeasibilityProblem {
  RMatrix equalities;
  RVector rhs;
  std::vector<SignConstraint> signs;
  RMatrix inequalities;
  std::vector<bool> strict;

  std::size_t variables() const { return signs.size(); }
};

struct FeasibilityResult {
  bool feasible = false;
  RVector witness;
  /// Positive-sign variables that are identically 0 on the non-strict solution set.
  std::vector<std::size_t> forced_zero_indices;
  /// Strict inequality rows that are identically 0 on the non-strict solution set.
  std::vector<std::size_t> forced_zero_rows;
  /// Left-kernel certificate when the equality system alone is inconsistent.
  RVector equality_certificate;
};

/// Decides feasibility exactly. Strict constraints are handled by maximizing a margin t
/// with x_i >= t and row <= -t, clamped to t <= 1; the problem is feasible iff the optimal
/// margin is positive.
FeasibilityResult lp_feasible(const FeasibilityProblem& problem);

/// Exact check that `x` satisfies every constraint of `problem` with the stated strictness.
bool satisfies(const FeasibilityProblem& problem, const RVector& x);

}  // namespace nilrad
