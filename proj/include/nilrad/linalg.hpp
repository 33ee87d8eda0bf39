#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilrad/rational.hpp"

namespace nilrad {

using RVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RMatrix identity(std::size_t n);
  static RMatrix diagonal(const RVector& d);
  /// All rows must have the same length; an empty list yields a 0x`cols` matrix.
  static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RVector row(std::size_t r) const;
  RVector column(std::size_t c) const;
  RVector diagonal_entries() const;
  void append_row(const RVector& row);

  RMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  RMatrix operator*(const RMatrix& other) const;
  RVector operator*(const RVector& v) const;
  RMatrix operator+(const RMatrix& other) const;
  RMatrix operator-(const RMatrix& other) const;
  RMatrix operator*(const Rational& s) const;

  bool operator==(const RMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(const RVector& a, const RVector& b);
/// Frobenius inner product tr(A^T B).
Rational frobenius(const RMatrix& a, const RMatrix& b);
bool is_zero(const RVector& v);

struct EchelonForm {
  RMatrix reduced;                         // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivot_columns;  // one per row of `reduced`
};

/// Reduced row echelon form. Elimination runs fraction-free on a row-wise integer scaling
/// of the input; pivots are chosen leftmost column first, then smallest row index.
EchelonForm reduced_echelon(const RMatrix& a);

std::size_t rank(const RMatrix& a);

/// Canonical nullspace basis: one vector per free column (in increasing order), with 1 at that
/// column and zeros at the other free columns.
std::vector<RVector> nullspace(const RMatrix& a);

/// Basis of the row space, as the nonzero rows of the reduced echelon form.
std::vector<RVector> row_space_basis(const std::vector<RVector>& rows, std::size_t cols);

struct AffineSolutionSet {
  RVector particular;
  std::vector<RVector> nullspace_basis;
};

struct SolveOutcome {
  std::optional<AffineSolutionSet> solution;
  /// Set when the system is inconsistent: y with y^T A = 0 and y^T b != 0.
  RVector certificate;

  explicit operator bool() const { return solution.has_value(); }
};

/// Exact general solution of A x = b. The particular solution has zeros at free columns.
SolveOutcome solve_affine(const RMatrix& a, const RVector& b);

/// Solution of a square nonsingular system, or nullopt when A is singular.
std::optional<RVector> solve_unique(const RMatrix& a, const RVector& b);

}  // namespace nilrad
