#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilrad/law.hpp"
#include "nilrad/linalg.hpp"

namespace nilrad {

using Grading = std::vector<long>;

/// Eigenvalue type (d_1 < ... < d_r; n_1, ..., n_r) with coprime positive d_i.
struct EigenType {
  std::vector<long> values;
  std::vector<int> multiplicities;

  int dimension() const;
  Grading expanded() const;  // d_1 repeated n_1 times, ...
  std::string to_string() const;  // "(1<2<3; 3,3,1)"
  bool operator==(const EigenType&) const = default;
};

/// Groups a positive grading into its eigenvalue type (dividing by the gcd).
EigenType eigen_type(const Grading& d);

struct PreEinsteinResult {
  RVector phi;                     // diagonal entries
  Grading profile;                 // phi = scale * profile, profile coprime integers
  Rational scale;
  std::optional<EigenType> type;   // present iff every entry of phi is positive

  /// "19/65(1,1,2,3,3,4,5)"; the scale is omitted when it is 1.
  std::string to_string() const;
};

/// Solves tr(phi D_j) = tr(D_j) over the diagonal torus, then verifies tr(phi psi) = tr(psi)
/// on the full derivation basis.
/// Throws RankZeroError, TorusNotMaximalError, NotNilpotentError, or Error for a singular
/// trace system.
PreEinsteinResult pre_einstein(const LieLaw& law);

/// Same as pre_einstein but reuses an already computed derivation basis.
PreEinsteinResult pre_einstein(const LieLaw& law, const std::vector<RMatrix>& derivation_basis);

/// (n - (sum n_i d_i)^2 / sum n_i d_i^2)^{-1}. Throws when the type is a single value
/// (phi proportional to the identity).
Rational min_value(const EigenType& type);

struct TargetMomentMap {
  RVector diagonal;
  Rational constant;  // coefficient of I, equal to -min_value
};

/// Moment map of a unit-norm soliton whose Einstein derivation is diag(d), entrywise in the
/// order of `d`.
TargetMomentMap target_moment_map(const Grading& d);
TargetMomentMap target_moment_map(const EigenType& type);

/// All (i, j, k), i < j, with d_i + d_j = d_k, in lexicographic order.
std::vector<Slot> graded_slots(const Grading& d);

struct NecessaryCheck {
  bool pass = true;
  std::string reason;
};

/// phi > 0. The ad_phi >= 0 half of the criterion is not checked.
NecessaryCheck necessary_conditions(const PreEinsteinResult& result);

}  // namespace nilrad
