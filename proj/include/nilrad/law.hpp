#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilrad/linalg.hpp"
#include "nilrad/rational.hpp"

namespace nilrad {

/// Index triple (i, j, k), 1-based, i < j: the coefficient of e_k in [e_i, e_j].
struct Slot {
  int i = 0;
  int j = 0;
  int k = 0;
  auto operator<=>(const Slot&) const = default;
};

std::string to_string(const Slot& s);

/// Coefficient a*lambda + b, affine in the law's single parameter.
class ParamCoeff {
 public:
  ParamCoeff() = default;
  ParamCoeff(Rational constant) : b_(std::move(constant)) {}
  static ParamCoeff affine(Rational a, Rational b);

  bool uses_param() const { return a_ != 0; }
  const Rational& slope() const { return a_; }
  const Rational& constant() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  Rational at(const Rational& lambda) const { return a_ * lambda + b_; }

  ParamCoeff operator-() const { return affine(-a_, -b_); }
  bool operator==(const ParamCoeff&) const = default;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

struct Bracket {
  Slot slot;
  ParamCoeff coeff;
};

/// A bilinear antisymmetric bracket on R^n given by structure constants. Only i<j keys are
/// stored; zero coefficients are never stored. Immutable after construction.
class LieLaw {
 public:
  LieLaw() = default;
  /// Throws nilrad::Error on n < 1, out-of-range indices, i >= j, duplicate slots, or a
  /// parametric coefficient without a parameter name.
  LieLaw(int n, const std::vector<Bracket>& brackets, std::optional<std::string> param = std::nullopt);

  /// Convenience for rational laws: {i, j, k, c} entries.
  struct Entry {
    int i, j, k;
    Rational c;
  };
  static LieLaw rational(int n, const std::vector<Entry>& entries);

  int dim() const { return n_; }
  const std::map<Slot, ParamCoeff>& brackets() const { return brackets_; }
  const std::optional<std::string>& param_name() const { return param_; }
  bool uses_param() const;
  bool is_abelian() const { return brackets_.empty(); }

  /// Coefficient of e_k in [e_i, e_j] for any i, j (antisymmetric completion). 1-based.
  /// Throws if the coefficient depends on the parameter.
  Rational coeff(int i, int j, int k) const;
  ParamCoeff param_coeff(int i, int j, int k) const;

  std::vector<Slot> support() const;

  bool operator==(const LieLaw&) const = default;

 private:
  int n_ = 0;
  std::map<Slot, ParamCoeff> brackets_;
  std::optional<std::string> param_;
};

/// Dense antisymmetric structure tensor of an instantiated law, 0-based: at(i, j, k) = c_ij^k.
class StructureTensor {
 public:
  explicit StructureTensor(const LieLaw& law);
  int dim() const { return n_; }
  const Rational& at(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  RVector bracket(const RVector& x, const RVector& y) const;

 private:
  int n_;
  std::vector<Rational> c_;
};

/// Binds the parameter. A value supplied to a parameter-free law is ignored and a warning
/// is appended to `warnings` when given.
LieLaw instantiate(const LieLaw& law, const std::optional<Rational>& value,
                   std::vector<std::string>* warnings = nullptr);

struct JacobiViolation {
  int i, j, k;      // 1-based basis triple, i < j < k
  RVector residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

/// Empty result means the Jacobi identity holds.
std::vector<JacobiViolation> jacobi_check(const LieLaw& law);

using SeriesDims = std::vector<int>;

/// Dimensions n = dim n^0 > dim n^1 > ... > 0 with n^{k+1} = [n, n^k].
/// Throws NotNilpotentError when the series stabilizes above 0.
SeriesDims descending_central_series(const LieLaw& law);

/// Dimensions of n^(k+1) = [n^(k), n^(k)] down to 0. Rejects non-nilpotent laws.
SeriesDims derived_series(const LieLaw& law);

bool is_nilpotent(const LieLaw& law);

LieLaw direct_sum(const LieLaw& a, const LieLaw& b);

LieLaw abelian(int n);

/// Law with every coefficient multiplied by s.
LieLaw scaled(const LieLaw& law, const Rational& s);

/// Relabels basis vectors: e_i -> e_{perm[i-1]}; perm is a permutation of 1..n.
LieLaw permuted(const LieLaw& law, const std::vector<int>& perm);

/// Law with the given slots removed.
LieLaw without_slots(const LieLaw& law, const std::vector<Slot>& slots);

}  // namespace nilrad
