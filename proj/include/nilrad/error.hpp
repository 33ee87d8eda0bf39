#pragma once

#include <stdexcept>
#include <string>

namespace nilrad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by series and Einstein operations on laws whose descending central series
/// stabilizes above zero.
class NotNilpotentError : public Error {
 public:
  NotNilpotentError(int stabilized_dim)
      : Error("law is not nilpotent: descending central series stabilizes at dimension " +
              std::to_string(stabilized_dim)),
        stabilized_dim_(stabilized_dim) {}
  int stabilized_dim() const { return stabilized_dim_; }

 private:
  int stabilized_dim_;
};

/// No nonzero diagonal derivation exists in the given basis.
class RankZeroError : public Error {
 public:
  RankZeroError() : Error("diagonal rank is 0: no nonzero diagonal derivation in this basis") {}
};

/// The candidate computed over the diagonal torus fails tr(phi psi) = tr(psi) for some
/// derivation psi, so the diagonal torus is not a maximal torus.
class TorusNotMaximalError : public Error {
 public:
  TorusNotMaximalError() : Error("diagonal torus not maximal: trace condition fails on the full derivation algebra") {}
};

}  // namespace nilrad
