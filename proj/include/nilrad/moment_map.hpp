#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilrad/law.hpp"
#include "nilrad/linalg.hpp"
#include "nilrad/pre_einstein.hpp"

namespace nilrad {

/// A law with floating-point coefficients, used for soliton representatives whose
/// coefficients are square roots of rationals.
class NumericLaw {
 public:
  struct Entry {
    Slot slot;
    double value;
    std::string token;  // the coefficient as entered, e.g. "sqrt(611)/94"
  };

  NumericLaw(int n, std::vector<Entry> entries);

  /// Parses one coefficient token: "p/q", "sqrt(p/q)" or "sqrt(p)/q", each with an optional
  /// leading sign. The radicand is folded exactly before the single square root.
  static double parse_coefficient(std::string_view token);

  /// Text form: optional "dim N" line, then lines "[i,j] = COEF k" with terms joined by "+";
  /// "#" starts a comment.
  static NumericLaw parse(std::string_view text);

  int dim() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Dense antisymmetric tensor, 0-based index (i*n + j)*n + k.
  std::vector<double> tensor() const;
  /// The same bracket support with every coefficient set to 1.
  LieLaw support_law() const;

 private:
  int n_;
  std::vector<Entry> entries_;
};

/// 2 * sum over i<j, k of (c_ij^k)^2.
Rational norm_sq(const LieLaw& law);
double norm_sq(const NumericLaw& law);

/// m_rs = -2 sum_{j,k} c_rj^k c_sj^k + sum_{i,j} c_ij^r c_ij^s. Throws on the zero law.
RMatrix moment_map(const LieLaw& law);
std::vector<double> moment_map(const NumericLaw& law);  // row-major n*n

RMatrix normalized_moment(const LieLaw& law);
Rational functional_F(const LieLaw& law);
double functional_F(const NumericLaw& law);

/// tr(m(law) alpha).
Rational pairing(const LieLaw& law, const RMatrix& alpha);

/// Largest absolute Jacobi residual component.
double jacobi_residual(const NumericLaw& law);

struct SolitonVerdict {
  bool soliton = false;
  double c = 0;
  std::optional<Rational> c_exact;
  RMatrix derivation_exact;         // m - cI, exact mode only
  std::vector<double> derivation;   // m - cI, row-major
  double residual = 0;
};

/// Exact mode: projects m onto span{I, Der} and requires a zero remainder with c < 0.
/// `tol` only applies to reporting; exact residuals are either 0 or not.
SolitonVerdict verify_soliton(const LieLaw& law, double tol = 1e-10);

/// Numeric mode: c minimizes |L(m - cI)| where L is the Leibniz operator of the law, so
/// m - cI is a derivation exactly when the residual vanishes. Throws when the Jacobi
/// residual exceeds tol.
SolitonVerdict verify_soliton(const NumericLaw& law, double tol = 1e-10);

/// Quadratic form in the slot variables a_1..a_m: key (p, q) with p <= q, 1-based.
using Quadratic = std::map<std::pair<int, int>, Rational>;

struct SolitonSystem {
  Grading grading;
  std::vector<Slot> slots;  // a_s is the coefficient of slot s
  std::vector<Quadratic> jacobi;
  struct MomentEquation {
    int r, s;  // 1-based entry, r <= s
    Quadratic lhs;
    Rational rhs;
  };
  std::vector<MomentEquation> moment;

  std::string to_text() const;
};

/// Polynomial system for a soliton with Einstein derivation diag(d) supported on the graded
/// slots. Throws when d has no graded slot or a single eigenvalue.
SolitonSystem soliton_system(const Grading& d);
std::string emit_soliton_system(const Grading& d);

}  // namespace nilrad
