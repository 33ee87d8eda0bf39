#pragma once

#include <string>
#include <vector>

#include "nilrad/law.hpp"
#include "nilrad/linalg.hpp"

namespace nilrad {

/// A pair of indices witnessing that a basis is not nice.
struct NiceViolation {
  enum class Kind {
    TwoTargets,  // [e_i, e_j] has more than one nonzero component; `others` lists the k
    TwoSources,  // e_k appears in [e_i, e_j] for several j; `others` lists the j
  };
  Kind kind;
  int first;   // i
  int second;  // j for TwoTargets, k for TwoSources
  std::vector<int> others;

  std::string to_string() const;
};

struct NiceReport {
  bool nice = true;
  std::vector<NiceViolation> violations;
};

NiceReport is_nice(const LieLaw& law);

/// E_kk - E_ii - E_jj as a vector of length n.
RVector weight(int n, const Slot& s);

/// U_pq = <F(p), F(q)> over the nonzero slots in lexicographic order.
RMatrix gram_matrix(const LieLaw& law);

enum class Einstein { Yes, No, NotApplicable };

std::string to_string(Einstein e);

struct CriterionVerdict {
  bool nice = false;
  Einstein einstein = Einstein::NotApplicable;
  std::vector<Slot> slots;   // order of the coordinates of x
  RVector witness;           // positive solution of U x = 1 (Yes)
  std::vector<std::size_t> forced_zero;  // coordinates vanishing on every nonnegative solution (No)
  RVector certificate;       // y with y^T U = 0, y^T 1 != 0 when U x = 1 is inconsistent (No)
};

/// Decides whether U x = [1] has a solution with positive coordinates. Non-nice laws get
/// NotApplicable.
CriterionVerdict nice_criterion(const LieLaw& law);

}  // namespace nilrad
