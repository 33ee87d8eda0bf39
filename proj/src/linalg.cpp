#include "nilrad/linalg.hpp"

#include <algorithm>
#include <utility>

#include "nilrad/error.hpp"

namespace nilrad {

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::diagonal(const RVector& d) {
  RMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RVector RMatrix::row(std::size_t r) const {
  return RVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RVector RMatrix::column(std::size_t c) const {
  RVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RVector RMatrix::diagonal_entries() const {
  RVector v(std::min(rows_, cols_));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)(i, i);
  return v;
}

void RMatrix::append_row(const RVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error("append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product: dimension mismatch");
  RMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

RVector RMatrix::operator*(const RVector& v) const {
  if (cols_ != v.size()) throw Error("matrix-vector product: dimension mismatch");
  RVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RMatrix RMatrix::operator+(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix sum: dimension mismatch");
  RMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += other.data_[i];
  return s;
}

RMatrix RMatrix::operator-(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix difference: dimension mismatch");
  RMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= other.data_[i];
  return s;
}

RMatrix RMatrix::operator*(const Rational& s) const {
  RMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Rational frobenius(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("frobenius: dimension mismatch");
  Rational s = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0 && b(r, c) != 0) s += a(r, c) * b(r, c);
  return s;
}

bool is_zero(const RVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

EchelonForm reduced_echelon(const RMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();

  // Scale every row to integers; this leaves the row space unchanged.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = lcm_of_denominators(a.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = a(r, c) * l;
      m[r][c] = scaled.get_num();
    }
  }

  // Bareiss forward elimination; every division below is exact.
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t p = k;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != k) std::swap(m[p], m[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m[k][c] * m[i][j] - m[i][c] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[k][c];
    pivots.push_back(c);
    ++k;
  }

  // Back substitution to the unique reduced form.
  EchelonForm out{RMatrix(pivots.size(), cols), pivots};
  RMatrix& red = out.reduced;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) red(r, c) = Rational(m[r][c]);
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    Rational inv = 1 / red(r, pc);
    for (std::size_t c = pc; c < cols; ++c) red(r, c) *= inv;
    for (std::size_t above = 0; above < r; ++above) {
      Rational f = red(above, pc);
      if (f == 0) continue;
      for (std::size_t c = pc; c < cols; ++c) red(above, c) -= f * red(r, c);
    }
  }
  return out;
}

std::size_t rank(const RMatrix& a) { return reduced_echelon(a).pivot_columns.size(); }

namespace {

std::vector<RVector> nullspace_from_echelon(const EchelonForm& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<RVector> nullspace(const RMatrix& a) {
  return nullspace_from_echelon(reduced_echelon(a), a.cols());
}

std::vector<RVector> row_space_basis(const std::vector<RVector>& rows, std::size_t cols) {
  EchelonForm e = reduced_echelon(RMatrix::from_rows(rows, cols));
  std::vector<RVector> basis;
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

SolveOutcome solve_affine(const RMatrix& a, const RVector& b) {
  if (a.rows() != b.size()) throw Error("solve_affine: A has " + std::to_string(a.rows()) +
                                        " rows but b has length " + std::to_string(b.size()));
  const std::size_t n = a.cols();
  RMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  EchelonForm e = reduced_echelon(aug);
  SolveOutcome out;
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == n) {
    // Inconsistent: find y with [A | b]^T y = e_last.
    RMatrix at = aug.transpose();
    RVector target(n + 1);
    target[n] = 1;
    SolveOutcome dual = solve_affine(at, target);
    if (!dual) throw Error("solve_affine: failed to build inconsistency certificate");
    out.certificate = dual.solution->particular;
    return out;
  }
  AffineSolutionSet s;
  s.particular.assign(n, Rational(0));
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) s.particular[e.pivot_columns[r]] = e.reduced(r, n);
  // Nullspace of A from the same echelon form, ignoring the augmented column.
  EchelonForm ea{RMatrix(e.reduced.rows(), n), e.pivot_columns};
  for (std::size_t r = 0; r < e.reduced.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) ea.reduced(r, c) = e.reduced(r, c);
  s.nullspace_basis = nullspace_from_echelon(ea, n);
  out.solution = std::move(s);
  return out;
}

std::optional<RVector> solve_unique(const RMatrix& a, const RVector& b) {
  if (a.rows() != a.cols()) throw Error("solve_unique: matrix is not square");
  SolveOutcome s = solve_affine(a, b);
  if (!s || !s.solution->nullspace_basis.empty()) return std::nullopt;
  return s.solution->particular;
}

}  // namespace nilrad
