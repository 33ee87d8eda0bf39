#pragma once

#include <vector>

#include "nilrad/law.hpp"
#include "nilrad/linalg.hpp"

namespace nilrad {

struct DerivationSpace {
  std::vector<RMatrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Diagonal derivations {a : a_k = a_i + a_j whenever c_ij^k != 0}, as an echelon basis.
struct DiagonalTorus {
  std::vector<RVector> generators;
  int dim() const { return static_cast<int>(generators.size()); }
};

/// Linear system on the n^2 entries of D (row-major, D e_i = sum_p D(p,i) e_p) expressing
/// D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j] for all i < j.
RMatrix leibniz_system(const LieLaw& law);

DerivationSpace derivation_space(const LieLaw& law);

/// True iff D satisfies the Leibniz rule on every basis pair, checked directly on brackets.
bool is_derivation(const LieLaw& law, const RMatrix& d);

DiagonalTorus diagonal_derivations(const LieLaw& law);

/// Dimension of the diagonal torus: a lower bound on the rank, exact when some maximal torus
/// is diagonal in the given basis.
int diagonal_rank(const LieLaw& law);

}  // namespace nilrad
