#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nilrad/catalog.hpp"
#include "nilrad/degeneration.hpp"
#include "nilrad/derivations.hpp"
#include "nilrad/lp.hpp"
#include "nilrad/nice_basis.hpp"
#include "nilrad/pre_einstein.hpp"
#include "oracles.hpp"

using namespace nilrad;

namespace {

LieLaw entry(const std::string& name, std::optional<Rational> lambda = std::nullopt) {
  const auto* e = find_entry(name);
  REQUIRE(e);
  return instantiate(e->law(), lambda);
}

/// e_i -> s_i e_i changes c_ij^k into c_ij^k s_i s_j / s_k.
LieLaw rescaled(const LieLaw& law, const std::vector<Rational>& s) {
  std::vector<LieLaw::Entry> out;
  for (const auto& [slot, c] : law.brackets())
    out.push_back({slot.i, slot.j, slot.k,
                   c.constant() * s[static_cast<std::size_t>(slot.i - 1)] * s[static_cast<std::size_t>(slot.j - 1)] /
                       s[static_cast<std::size_t>(slot.k - 1)]});
  return LieLaw::rational(law.dim(), out);
}

RMatrix printed_u6() {
  return RMatrix::from_rows({{3, 1, 1, 1, 1, -1},
                             {1, 3, 1, 1, -1, 1},
                             {1, 1, 3, -1, 1, 1},
                             {1, 1, -1, 3, 1, 1},
                             {1, -1, 1, 1, 3, 1},
                             {-1, 1, 1, 1, 1, 3}});
}

RMatrix printed_u5() {
  return RMatrix::from_rows(
      {{3, 1, 1, 1, -1}, {1, 3, 1, 1, 1}, {1, 1, 3, -1, 1}, {1, 1, -1, 3, 1}, {-1, 1, 1, 1, 3}});
}

}  // namespace

TEST_CASE("nice basis detection") {
  CHECK(is_nice(entry("3.1(i_l)", Rational(2))).nice);
  CHECK(is_nice(LieLaw::rational(3, {{1, 2, 3, 1}})).nice);
  auto r = is_nice(entry("1.17"));
  CHECK_FALSE(r.nice);
  REQUIRE_FALSE(r.violations.empty());

  // [e1,e2] = e3 + e4: two targets.
  auto two = is_nice(LieLaw::rational(4, {{1, 2, 3, 1}, {1, 2, 4, 1}}));
  REQUIRE(two.violations.size() == 1);
  CHECK(two.violations[0].kind == NiceViolation::Kind::TwoTargets);
  CHECK(two.violations[0].others == std::vector<int>{3, 4});
  // [e1,e2] = e4 and [e1,e3] = e4: two sources for (1,4).
  auto src = is_nice(LieLaw::rational(4, {{1, 2, 4, 1}, {1, 3, 4, 1}}));
  REQUIRE_FALSE(src.violations.empty());
  CHECK(src.violations[0].kind == NiceViolation::Kind::TwoSources);
}

TEST_CASE("Gram matrices equal the printed ones") {
  for (int l : {2, -1, 3}) CHECK(gram_matrix(entry("3.1(i_l)", Rational(l))) == printed_u6());
  CHECK(gram_matrix(entry("3.1(i_l)", Rational(1, 2))) == printed_u6());
  CHECK(gram_matrix(entry("3.1(i_l)", Rational(0))) == printed_u5());
}

TEST_CASE("nice criterion on the curve") {
  for (Rational l : {Rational(2), Rational(-1), Rational(1, 2), Rational(3)}) {
    auto v = nice_criterion(entry("3.1(i_l)", l));
    CHECK(v.einstein == Einstein::Yes);
    CHECK(gram_matrix(entry("3.1(i_l)", l)) * v.witness == RVector(6, Rational(1)));
    for (const auto& x : v.witness) CHECK(x > 0);
  }
  auto zero = nice_criterion(entry("3.1(i_l)", Rational(0)));
  CHECK(zero.einstein == Einstein::No);
  CHECK(zero.forced_zero == std::vector<std::size_t>{1});  // second coordinate
  CHECK(nice_criterion(entry("3.1(i_l)", Rational(1))).einstein == Einstein::No);
  CHECK(nice_criterion(entry("1.17")).einstein == Einstein::NotApplicable);
}

TEST_CASE("nice criterion is invariant under permutation and rescaling") {
  LieLaw base = entry("3.1(i_l)", Rational(2));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(1, 7), den(1, 5);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Rational> s;
    for (int i = 0; i < 7; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      s.push_back(neg(rng) ? -q : q);
    }
    LieLaw t = rescaled(permuted(base, perm), s);
    CHECK(nice_criterion(t).einstein == Einstein::Yes);
  }
  LieLaw zero = entry("3.1(i_l)", Rational(0));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(nice_criterion(rescaled(permuted(zero, perm), std::vector<Rational>(7, Rational(num(rng))))).einstein ==
          Einstein::No);
  }
}

TEST_CASE("positive solution of U x = 1 iff the min-norm point is interior to the hull") {
  std::mt19937 rng(41);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 5)(rng);
    const int available = n * (n - 1) * (n - 2) / 2;
    const int m = std::uniform_int_distribution<int>(1, std::min(6, available))(rng);
    std::set<Slot> chosen;
    std::uniform_int_distribution<int> idx(1, n);
    while (static_cast<int>(chosen.size()) < m) {
      int i = idx(rng), j = idx(rng), k = idx(rng);
      if (i == j || k == i || k == j) continue;
      chosen.insert({std::min(i, j), std::max(i, j), k});
    }
    std::vector<LieLaw::Entry> entries;
    std::vector<oracle::Vec> pts;
    for (const auto& s : chosen) {
      entries.push_back({s.i, s.j, s.k, 1});
      oracle::Vec w(static_cast<std::size_t>(n));
      w[static_cast<std::size_t>(s.k - 1)] += 1;
      w[static_cast<std::size_t>(s.i - 1)] -= 1;
      w[static_cast<std::size_t>(s.j - 1)] -= 1;
      pts.push_back(w);
    }
    RMatrix u = gram_matrix(LieLaw::rational(n, entries));
    FeasibilityProblem p;
    p.equalities = u;
    p.rhs = RVector(u.rows(), Rational(1));
    p.signs.assign(u.rows(), SignConstraint::Positive);
    const bool lp = lp_feasible(p).feasible;
    const bool hull = oracle::in_relative_interior(pts, oracle::min_norm_point(pts));
    CHECK(lp == hull);
    (lp ? yes : no)++;
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}

TEST_CASE("g_phi diagonal constraints") {
  auto g = gphi_diag({Rational(2, 3), Rational(2, 3), Rational(4, 3)});
  REQUIRE(g.equalities.rows() == 2);
  CHECK(g.equalities.row(0) == RVector{1, 1, 1});
  CHECK(g.equalities.row(1) == RVector{Rational(2, 3), Rational(2, 3), Rational(4, 3)});
  CHECK(exponent({1, -1, 0}, Slot{1, 2, 3}) == 0);
}

TEST_CASE("degeneration of 2.2") {
  LieLaw law = entry("2.2");
  auto phi = pre_einstein(law).phi;
  auto cert = find_degeneration(law, phi);
  REQUIRE(cert);
  CHECK(cert->before.dim_der == 15);
  CHECK(cert->after.dim_der == 17);
  CHECK(derivation_space(cert->limit).dim() == 17);
  CHECK(assess(*cert) == Assessment::NotEinstein);
  for (const auto& s : law.support()) CHECK(exponent(cert->x, s) >= 0);
  CHECK(dot(cert->x, phi) == 0);

  auto printed = check_certificate(law, phi, {1, -1, 0, -1, 0, 1, 0});
  REQUIRE(printed.certificate);
  CHECK(assess(*printed.certificate) == Assessment::NotEinstein);
}

TEST_CASE("certificate for 3.1 at lambda 0") {
  LieLaw law = entry("3.1(i_l)", Rational(0));
  auto phi = pre_einstein(law).phi;
  auto check = check_certificate(law, phi, {1, 1, 1, 2, -10, 2, 3});
  REQUIRE(check.certificate);
  CHECK(check.certificate->dropped == std::vector<Slot>{{1, 3, 5}});
  CHECK(check.certificate->limit == without_slots(law, {{1, 3, 5}}));

  CHECK_FALSE(check_certificate(law, phi, {1, 0, 0, 0, 0, 0, 0}).certificate);  // trace
  CHECK_FALSE(check_certificate(law, phi, {0, 0, 0, 0, 0, 0, 0}).certificate);  // nothing dropped
  CHECK_FALSE(check_certificate(law, phi, {-1, -1, -1, -2, 10, -2, -3}).certificate);  // negative exponent
}

TEST_CASE("no degeneration for the Heisenberg algebra") {
  LieLaw h3 = LieLaw::rational(3, {{1, 2, 3, 1}});
  CHECK_FALSE(find_degeneration(h3, pre_einstein(h3).phi));
}

TEST_CASE("invariant-preserving limits stay indeterminate") {
  DegenerationCertificate c;
  c.before = {6, {3, 1, 0}, {3, 1, 0}};
  c.after = c.before;
  CHECK(assess(c) == Assessment::Indeterminate);
  CHECK(to_string(Assessment::Indeterminate) == "indeterminate");
}
