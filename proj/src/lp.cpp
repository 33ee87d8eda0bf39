#include "nilrad/lp.hpp"

#include <optional>

#include "nilrad/error.hpp"

namespace nilrad {

namespace {

class Tableau {
 public:
  Tableau(std::vector<RVector> rows, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns), objective_(columns + 1) {}

  // Sets the objective row to the reduced costs of `c` for the current basis.
  void set_objective(const RVector& c) {
    for (std::size_t j = 0; j <= columns_; ++j) objective_[j] = j < columns_ ? c[j] : Rational(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) objective_[j] -= cb * rows_[i][j];
    }
  }

  // Runs Bland's-rule pivoting; columns >= `enterable` never enter. Returns false when unbounded.
  bool optimize(std::size_t enterable) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < enterable; ++j)
        if (objective_[j] > 0) {
          entering = j;
          break;
        }
      if (!entering) return true;
      const std::size_t q = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][q] <= 0) continue;
        Rational ratio = rows_[i][columns_] / rows_[i][q];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, q);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    RVector& prow = rows_[p];
    Rational inv = 1 / prow[q];
    for (auto& x : prow) x *= inv;
    auto eliminate = [&](RVector& row) {
      Rational f = row[q];
      if (f == 0) return;
      for (std::size_t j = 0; j <= columns_; ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != p) eliminate(rows_[i]);
    eliminate(objective_);
    basis_[p] = q;
  }

  void drop_row(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  Rational value() const { return -objective_[columns_]; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  RVector primal(std::size_t n) const {
    RVector x(n);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n) x[basis_[i]] = rows_[i][columns_];
    return x;
  }

 private:
  std::vector<RVector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
  RVector objective_;
};

}  // namespace

LpSolution simplex_maximize(const RMatrix& a, const RVector& b, const RVector& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw Error("simplex_maximize: dimension mismatch");

  // Phase 1 on [A | I] with artificial columns n..n+m-1, rows sign-normalized so b >= 0.
  const std::size_t cols = n + m;
  std::vector<RVector> rows(m, RVector(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rational(-a(i, j)) : a(i, j);
    rows[i][n + i] = 1;
    rows[i][cols] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(rows), std::move(basis), cols);
  RVector phase1(cols);
  for (std::size_t j = n; j < cols; ++j) phase1[j] = -1;
  tab.set_objective(phase1);
  tab.optimize(cols);

  LpSolution out;
  if (tab.value() < 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  // Drive remaining artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = tab.row_count(); i-- > 0;) {
    if (tab.basic(i) < n) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.entry(i, j) != 0) {
        col = j;
        break;
      }
    if (col)
      tab.pivot(i, *col);
    else
      tab.drop_row(i);
  }

  RVector phase2(cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tab.set_objective(phase2);
  if (!tab.optimize(n)) {
    out.status = LpStatus::Unbounded;
    out.x = tab.primal(n);
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x = tab.primal(n);
  out.value = tab.value();
  return out;
}

namespace {

void validate(const FeasibilityProblem& p) {
  const std::size_t n = p.variables();
  if (p.equalities.rows() != p.rhs.size()) throw Error("lp_feasible: equality rows and rhs length differ");
  if (p.equalities.rows() > 0 && p.equalities.cols() != n)
    throw Error("lp_feasible: equality matrix width differs from variable count");
  if (p.inequalities.rows() > 0 && p.inequalities.cols() != n)
    throw Error("lp_feasible: inequality matrix width differs from variable count");
  if (!p.strict.empty() && p.strict.size() != p.inequalities.rows())
    throw Error("lp_feasible: strict flags must match inequality rows");
}

bool is_strict_row(const FeasibilityProblem& p, std::size_t r) { return !p.strict.empty() && p.strict[r]; }

// Standard form  A y = b, y >= 0  for the problem, with an optional margin column.
struct StandardForm {
  RMatrix a;
  RVector b;
  std::vector<std::size_t> pos_col, neg_col;  // neg_col only meaningful for free variables
  std::optional<std::size_t> margin_col;
  std::vector<std::size_t> positive_slack;  // per variable (only for Positive)
  std::vector<std::size_t> row_slack;       // per inequality row
  std::size_t columns = 0;

  RVector extract(const FeasibilityProblem& p, const RVector& y) const {
    RVector x(p.variables());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = y[pos_col[i]];
      if (p.signs[i] == SignConstraint::Free) x[i] -= y[neg_col[i]];
    }
    return x;
  }
};

StandardForm build(const FeasibilityProblem& p, bool with_margin) {
  const std::size_t n = p.variables();
  StandardForm s;
  s.pos_col.resize(n);
  s.neg_col.resize(n);
  s.positive_slack.resize(n);
  s.row_slack.resize(p.inequalities.rows());
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s.pos_col[i] = col++;
    if (p.signs[i] == SignConstraint::Free) s.neg_col[i] = col++;
  }
  if (with_margin) s.margin_col = col++;
  for (std::size_t i = 0; i < n; ++i)
    if (p.signs[i] == SignConstraint::Positive) s.positive_slack[i] = col++;
  for (std::size_t r = 0; r < p.inequalities.rows(); ++r) s.row_slack[r] = col++;
  std::size_t clamp_slack = with_margin ? col++ : 0;
  s.columns = col;

  auto put_x = [&](RVector& row, std::size_t i, const Rational& v) {
    row[s.pos_col[i]] += v;
    if (p.signs[i] == SignConstraint::Free) row[s.neg_col[i]] -= v;
  };

  for (std::size_t r = 0; r < p.equalities.rows(); ++r) {
    RVector row(col);
    for (std::size_t i = 0; i < n; ++i)
      if (p.equalities(r, i) != 0) put_x(row, i, p.equalities(r, i));
    s.a.append_row(row);
    s.b.push_back(p.rhs[r]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.signs[i] != SignConstraint::Positive) continue;
    RVector row(col);  // x_i - t - slack = 0
    row[s.pos_col[i]] = 1;
    if (with_margin) row[*s.margin_col] = -1;
    row[s.positive_slack[i]] = -1;
    s.a.append_row(row);
    s.b.push_back(0);
  }
  for (std::size_t r = 0; r < p.inequalities.rows(); ++r) {
    RVector row(col);  // a.x (+ t) + slack = 0
    for (std::size_t i = 0; i < n; ++i)
      if (p.inequalities(r, i) != 0) put_x(row, i, p.inequalities(r, i));
    if (with_margin && is_strict_row(p, r)) row[*s.margin_col] = 1;
    row[s.row_slack[r]] = 1;
    s.a.append_row(row);
    s.b.push_back(0);
  }
  if (with_margin) {
    RVector row(col);
    row[*s.margin_col] = 1;
    row[clamp_slack] = 1;
    s.a.append_row(row);
    s.b.push_back(1);
  }
  if (s.a.rows() == 0) s.a = RMatrix(0, col);
  return s;
}

}  // namespace

FeasibilityResult lp_feasible(const FeasibilityProblem& problem) {
  validate(problem);
  const std::size_t n = problem.variables();
  bool needs_margin = false;
  for (auto sc : problem.signs) needs_margin |= sc == SignConstraint::Positive;
  for (std::size_t r = 0; r < problem.inequalities.rows(); ++r) needs_margin |= is_strict_row(problem, r);

  FeasibilityResult result;
  StandardForm s = build(problem, needs_margin);
  RVector objective(s.columns);
  if (s.margin_col) objective[*s.margin_col] = 1;
  LpSolution sol = simplex_maximize(s.a, s.b, objective);

  if (sol.status == LpStatus::Infeasible) {
    if (problem.equalities.rows() > 0) {
      SolveOutcome eq = solve_affine(problem.equalities, problem.rhs);
      if (!eq) result.equality_certificate = eq.certificate;
    }
    return result;
  }
  if (sol.status == LpStatus::Unbounded) throw Error("lp_feasible: margin program unbounded despite clamp");

  if (!s.margin_col || sol.value > 0) {
    result.feasible = true;
    result.witness = s.extract(problem, sol.x);
    return result;
  }

  // Optimal margin is 0: report which strict requirements are identically tight.
  StandardForm relaxed = build(problem, false);
  auto forced = [&](std::size_t column) {
    RVector c(relaxed.columns);
    c[column] = 1;
    LpSolution probe = simplex_maximize(relaxed.a, relaxed.b, c);
    return probe.status == LpStatus::Optimal && probe.value <= 0;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (problem.signs[i] == SignConstraint::Positive && forced(relaxed.pos_col[i]))
      result.forced_zero_indices.push_back(i);
  for (std::size_t r = 0; r < problem.inequalities.rows(); ++r)
    if (is_strict_row(problem, r) && forced(relaxed.row_slack[r])) result.forced_zero_rows.push_back(r);
  return result;
}

bool satisfies(const FeasibilityProblem& problem, const RVector& x) {
  if (x.size() != problem.variables()) return false;
  if (problem.equalities.rows() > 0 && problem.equalities * x != problem.rhs) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (problem.signs[i] == SignConstraint::NonNegative && x[i] < 0) return false;
    if (problem.signs[i] == SignConstraint::Positive && x[i] <= 0) return false;
  }
  for (std::size_t r = 0; r < problem.inequalities.rows(); ++r) {
    Rational v = dot(problem.inequalities.row(r), x);
    if (v > 0 || (is_strict_row(problem, r) && v == 0)) return false;
  }
  return true;
}

}  // namespace nilrad
