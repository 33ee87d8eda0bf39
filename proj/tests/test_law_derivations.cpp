#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilrad/catalog.hpp"
#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"
#include "nilrad/law.hpp"

using namespace nilrad;

namespace {

LieLaw h3() { return LieLaw::rational(3, {{1, 2, 3, 1}}); }

/// Leibniz defect computed straight from the structure constants, with D e_i = sum_p D(p,i) e_p.
bool leibniz_holds(const LieLaw& law, const RMatrix& d) {
  const int n = law.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational lhs = 0, rhs = 0;
        for (int l = 1; l <= n; ++l) lhs += law.coeff(i, j, l) * d(k - 1, l - 1);
        for (int p = 1; p <= n; ++p) {
          rhs += d(p - 1, i - 1) * law.coeff(p, j, k);
          rhs += d(p - 1, j - 1) * law.coeff(i, p, k);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<LieLaw> sample_laws() {
  std::vector<LieLaw> out;
  for (const auto& e : bundled_catalog()) {
    LieLaw law = e.law();
    if (law.uses_param()) {
      for (int l : {-1, 0, 1, 2, 3}) out.push_back(instantiate(law, Rational(l)));
    } else {
      out.push_back(law);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates indices") {
  CHECK_THROWS_AS(LieLaw::rational(0, {}), Error);
  CHECK_THROWS_AS(LieLaw::rational(3, {{2, 1, 3, 1}}), Error);
  CHECK_THROWS_AS(LieLaw::rational(3, {{1, 2, 4, 1}}), Error);
  CHECK_THROWS_AS(LieLaw::rational(3, {{1, 2, 3, 1}, {1, 2, 3, 2}}), Error);
  LieLaw law = h3();
  CHECK(law.coeff(2, 1, 3) == -1);
  CHECK(law.coeff(1, 1, 3) == 0);
}

TEST_CASE("Jacobi violations are located") {
  // J(e1,e2,e3) = [e4,e1] - [e4,e2] = -e2
  LieLaw bad = LieLaw::rational(4, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 4, 1}, {1, 4, 2, 1}});
  auto v = jacobi_check(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().i == 1);
  for (const auto& law : sample_laws()) CHECK(jacobi_check(law).empty());
}

TEST_CASE("series of small laws") {
  CHECK(descending_central_series(h3()) == SeriesDims{3, 1, 0});
  CHECK(derived_series(h3()) == SeriesDims{3, 1, 0});
  CHECK(descending_central_series(abelian(3)) == SeriesDims{3, 0});
  LieLaw sl2_like = LieLaw::rational(3, {{1, 2, 3, 1}, {1, 3, 2, -1}, {2, 3, 1, 1}});
  CHECK_THROWS_AS(descending_central_series(sl2_like), NotNilpotentError);
  CHECK_FALSE(is_nilpotent(sl2_like));
}

TEST_CASE("dim Der of reference algebras") {
  CHECK(derivation_space(h3()).dim() == 6);
  CHECK(derivation_space(abelian(3)).dim() == 9);
  CHECK(derivation_space(direct_sum(h3(), abelian(1))).dim() == 10);
  CHECK(diagonal_rank(h3()) == 2);
}

TEST_CASE("every derivation basis element passes an independent Leibniz check") {
  for (const auto& law : sample_laws()) {
    auto basis = derivation_space(law).basis;
    for (const auto& d : basis) CHECK(leibniz_holds(law, d));
    // The identity is never a derivation of a non-abelian law.
    if (!law.is_abelian()) CHECK_FALSE(leibniz_holds(law, RMatrix::identity(static_cast<std::size_t>(law.dim()))));
  }
}

TEST_CASE("invariants survive relabeling and rescaling") {
  std::mt19937 rng(3);
  for (const auto& law : sample_laws()) {
    std::vector<int> perm(static_cast<std::size_t>(law.dim()));
    for (int i = 0; i < law.dim(); ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    LieLaw p = permuted(law, perm);
    LieLaw s = scaled(law, Rational(-3, 2));
    CHECK(derivation_space(p).dim() == derivation_space(law).dim());
    CHECK(derivation_space(s).dim() == derivation_space(law).dim());
    CHECK(descending_central_series(p) == descending_central_series(law));
    CHECK(derived_series(s) == derived_series(law));
    CHECK(jacobi_check(p).empty());
  }
}

TEST_CASE("parameter binding") {
  const auto* e = find_entry("3.1(i_l)");
  REQUIRE(e);
  LieLaw law = e->law();
  CHECK(law.uses_param());
  CHECK_THROWS_AS(law.coeff(3, 4, 7), Error);
  std::vector<std::string> warnings;
  LieLaw fixed = instantiate(h3(), Rational(2), &warnings);
  CHECK(fixed == h3());
  CHECK(warnings.size() == 1);
  LieLaw at1 = instantiate(law, Rational(1));
  CHECK(at1.coeff(3, 4, 7) == 0);
  CHECK(at1.support().size() == 5);
}
