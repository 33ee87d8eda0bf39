#include "nilrad/derivations.hpp"

#include "nilrad/error.hpp"

namespace nilrad {

RMatrix leibniz_system(const LieLaw& law) {
  const int n = law.dim();
  StructureTensor c(law);
  const std::size_t vars = static_cast<std::size_t>(n * n);
  auto var = [n](int row, int col) { return static_cast<std::size_t>(row * n + col); };
  RMatrix sys(0, vars);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // sum_l c_ij^l D(k,l) - sum_p D(p,i) c_pj^k - sum_p D(p,j) c_ip^k = 0
        RVector eq(vars);
        for (int l = 0; l < n; ++l)
          if (c.at(i, j, l) != 0) eq[var(k, l)] += c.at(i, j, l);
        for (int p = 0; p < n; ++p) {
          if (c.at(p, j, k) != 0) eq[var(p, i)] -= c.at(p, j, k);
          if (c.at(i, p, k) != 0) eq[var(p, j)] -= c.at(i, p, k);
        }
        if (!is_zero(eq)) sys.append_row(eq);
      }
  return sys;
}

DerivationSpace derivation_space(const LieLaw& law) {
  const int n = law.dim();
  RMatrix sys = leibniz_system(law);
  DerivationSpace out;
  for (const auto& v : nullspace(sys)) {
    RMatrix d(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) d(r, c) = v[static_cast<std::size_t>(r * n + c)];
    out.basis.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const LieLaw& law, const RMatrix& d) {
  const int n = law.dim();
  if (static_cast<int>(d.rows()) != n || static_cast<int>(d.cols()) != n) return false;
  StructureTensor c(law);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RVector ei(n), ej(n);
      ei[i] = 1;
      ej[j] = 1;
      RVector lhs = d * c.bracket(ei, ej);
      RVector a = c.bracket(d.column(i), ej);
      RVector b = c.bracket(ei, d.column(j));
      for (int k = 0; k < n; ++k)
        if (lhs[k] != a[k] + b[k]) return false;
    }
  return true;
}

DiagonalTorus diagonal_derivations(const LieLaw& law) {
  const int n = law.dim();
  RMatrix sys(0, static_cast<std::size_t>(n));
  for (const auto& [slot, coeff] : law.brackets()) {
    if (coeff.uses_param()) throw Error("diagonal_derivations requires an instantiated law");
    RVector eq(n);
    eq[slot.k - 1] += 1;
    eq[slot.i - 1] -= 1;
    eq[slot.j - 1] -= 1;
    sys.append_row(eq);
  }
  DiagonalTorus t;
  // Echelon basis of the solution space: reduce the nullspace vectors.
  auto null = nullspace(sys);
  if (!null.empty()) t.generators = row_space_basis(null, static_cast<std::size_t>(n));
  return t;
}

int diagonal_rank(const LieLaw& law) { return diagonal_derivations(law).dim(); }

}  // namespace nilrad
