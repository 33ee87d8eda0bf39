#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "nilrad/catalog.hpp"
#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"
#include "nilrad/moment_map.hpp"
#include "nilrad/pre_einstein.hpp"

using namespace nilrad;

namespace {

LieLaw entry(const std::string& name, std::optional<Rational> lambda = std::nullopt) {
  const auto* e = find_entry(name);
  REQUIRE(e);
  return instantiate(e->law(), lambda);
}

RVector scaled_profile(const Rational& s, const Grading& d) {
  RVector out;
  for (long v : d) out.push_back(s * v);
  return out;
}

/// Parses "-2 a1^2 - 2 a2 a7 + ..." into the same keyed form the library uses.
Quadratic parse_display(const std::string& text) {
  Quadratic q;
  std::istringstream in(text);
  std::string tok;
  Rational sign = 1, coef = 1;
  std::vector<int> vars;
  auto flush = [&] {
    if (vars.empty()) return;
    if (vars.size() == 1) vars.push_back(vars[0]);
    auto key = std::minmax(vars[0], vars[1]);
    q[{key.first, key.second}] += sign * coef;
    vars.clear();
    sign = 1;
    coef = 1;
  };
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      flush();
      sign = tok == "-" ? -1 : 1;
    } else if (tok[0] == 'a') {
      auto caret = tok.find('^');
      int v = std::stoi(tok.substr(1, caret));
      vars.push_back(v);
      if (caret != std::string::npos) vars.push_back(v);
    } else {
      coef = parse_rational(tok);
    }
  }
  flush();
  return q;
}

}  // namespace

TEST_CASE("pre-Einstein derivations of the printed laws") {
  auto p117 = pre_einstein(entry("1.17"));
  CHECK(p117.phi == scaled_profile(Rational(19, 65), {1, 1, 2, 3, 3, 4, 5}));
  CHECK(p117.to_string() == "19/65(1,1,2,3,3,4,5)");
  CHECK(p117.type->to_string() == "(1<2<3<4<5; 2,1,2,1,1)");

  CHECK(pre_einstein(entry("2.2")).phi == scaled_profile(Rational(1, 2), {1, 1, 1, 2, 2, 2, 3}));
  CHECK(pre_einstein(entry("3.1(i_l)", Rational(2))).phi == scaled_profile(Rational(1, 2), {1, 1, 1, 2, 2, 2, 3}));
  CHECK(pre_einstein(entry("1.3(i_l)", Rational(2))).phi == scaled_profile(Rational(5, 17), {1, 2, 2, 3, 3, 4, 5}));
}

TEST_CASE("pre-Einstein derivation of the Heisenberg algebra") {
  LieLaw h3 = LieLaw::rational(3, {{1, 2, 3, 1}});
  auto p = pre_einstein(h3);
  CHECK(p.phi == RVector{Rational(2, 3), Rational(2, 3), Rational(4, 3)});
  CHECK(p.scale == Rational(2, 3));
  // tr(phi psi) = tr(psi) for the whole derivation algebra.
  for (const auto& psi : derivation_space(h3).basis) {
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += p.phi[i] * psi(i, i);
    CHECK(s == psi.trace());
  }
  CHECK_THROWS_AS(pre_einstein(LieLaw::rational(3, {{1, 2, 3, 1}, {1, 3, 2, -1}, {2, 3, 1, 1}})), Error);
}

TEST_CASE("tr(phi^2) = tr(phi) across the catalog") {
  for (const auto& e : bundled_catalog()) {
    LieLaw law = e.law();
    if (law.uses_param()) law = instantiate(law, Rational(2));
    auto p = pre_einstein(law);
    Rational t1 = 0, t2 = 0;
    for (const auto& x : p.phi) {
      t1 += x;
      t2 += x * x;
    }
    CHECK_MESSAGE(t1 == t2, e.name);
  }
}

TEST_CASE("necessary conditions flag a non-positive phi") {
  PreEinsteinResult r;
  r.phi = {0, 1, 0, 1, 1, 1, 1};
  auto check = necessary_conditions(r);
  CHECK_FALSE(check.pass);
  CHECK(check.reason.find("entry 1") != std::string::npos);
  CHECK(necessary_conditions(pre_einstein(entry("1.17"))).pass);
}

TEST_CASE("Min values") {
  CHECK(min_value(eigen_type({1, 1, 2, 3, 3, 4, 5})) == Rational(65, 94));
  CHECK(min_value(eigen_type({1, 2, 2, 3, 3, 4, 5})) == Rational(17, 19));
  CHECK(min_value(eigen_type({1, 1, 1, 2, 2, 2, 3})) == 1);
  CHECK(min_value(eigen_type({2, 2, 4})) == min_value(eigen_type({1, 1, 2})));
  CHECK_THROWS_AS(min_value(eigen_type({3, 3})), Error);
}

TEST_CASE("target moment map") {
  auto t = target_moment_map(eigen_type({1, 1, 2, 3, 3, 4, 5}));
  CHECK(t.diagonal == RVector{Rational(-23, 47), Rational(-23, 47), Rational(-27, 94), Rational(-4, 47),
                              Rational(-4, 47), Rational(11, 94), Rational(15, 47)});
  CHECK(t.constant == Rational(-65, 94));
  auto h = target_moment_map(Grading{1, 1, 2});
  CHECK(h.diagonal == RVector{-1, -1, 1});
  CHECK(h.constant == -3);
  // Trace -1 normalization and c = -Min.
  Rational tr = 0;
  for (const auto& x : t.diagonal) tr += x;
  CHECK(tr == -1);
}

TEST_CASE("graded slots in lexicographic order") {
  auto slots = graded_slots({1, 1, 2, 3, 3, 4, 5});
  REQUIRE(slots.size() == 13);
  CHECK(slots.front() == Slot{1, 2, 3});
  CHECK(slots[5] == Slot{1, 6, 7});
  CHECK(slots.back() == Slot{3, 5, 7});
}

TEST_CASE("moment map of the Heisenberg algebra") {
  LieLaw h3 = LieLaw::rational(3, {{1, 2, 3, 1}});
  CHECK(moment_map(h3) == RMatrix::diagonal({-2, -2, 2}));
  CHECK(norm_sq(h3) == 2);
  CHECK(functional_F(h3) == 3);
  CHECK(normalized_moment(h3) == RMatrix::diagonal({-1, -1, 1}));
  CHECK_THROWS_AS(moment_map(abelian(2)), Error);
}

TEST_CASE("tr m = -|mu|^2 on random sparse skew laws") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::bernoulli_distribution use(0.25);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    std::vector<LieLaw::Entry> entries;
    Rational direct = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (use(rng)) {
            Rational c(num(rng), den(rng));
            c.canonicalize();
            if (c == 0) continue;
            entries.push_back({i, j, k, c});
            direct += 2 * c * c;
          }
    if (entries.empty()) entries.push_back({1, 2, 1, 1}), direct = 2;
    LieLaw law = LieLaw::rational(n, entries);
    CHECK(norm_sq(law) == direct);
    CHECK(moment_map(law).trace() == -direct);
    CHECK(moment_map(law).is_symmetric());
  }
}

TEST_CASE("m(mu) is orthogonal to every derivation") {
  for (const auto& e : bundled_catalog()) {
    LieLaw law = e.law();
    std::vector<LieLaw> laws;
    if (law.uses_param())
      for (int l : {-1, 0, 1, 2}) laws.push_back(instantiate(law, Rational(l)));
    else
      laws.push_back(law);
    for (const auto& l : laws) {
      if (l.is_abelian()) continue;
      for (const auto& d : derivation_space(l).basis) CHECK_MESSAGE(pairing(l, d) == 0, e.name);
    }
  }
}

TEST_CASE("F is bounded below by 1/n") {
  for (const auto& e : bundled_catalog()) {
    LieLaw law = e.law();
    if (law.uses_param()) law = instantiate(law, Rational(2));
    if (law.is_abelian()) continue;
    CHECK(functional_F(law) >= Rational(1, law.dim()));
  }
}

TEST_CASE("numeric coefficient tokens") {
  CHECK(NumericLaw::parse_coefficient("3/4") == doctest::Approx(0.75));
  CHECK(NumericLaw::parse_coefficient("-sqrt(9/4)") == doctest::Approx(-1.5));
  CHECK(NumericLaw::parse_coefficient("sqrt(611)/94") == doctest::Approx(std::sqrt(611.0) / 94));
  CHECK_THROWS_AS(NumericLaw::parse_coefficient("sqrt(-1)"), Error);
  CHECK_THROWS_AS(NumericLaw::parse_coefficient("pi"), Error);
}

TEST_CASE("soliton verification") {
  LieLaw h3 = LieLaw::rational(3, {{1, 2, 3, 1}});
  auto exact = verify_soliton(h3);
  CHECK(exact.soliton);
  CHECK(exact.c_exact == Rational(-6));
  CHECK(is_derivation(h3, exact.derivation_exact));

  const auto* e = find_entry("1.17");
  REQUIRE(e->soliton);
  NumericLaw fixture = NumericLaw::parse(*e->soliton);
  CHECK(norm_sq(fixture) == doctest::Approx(1.0).epsilon(1e-12));
  auto v = verify_soliton(fixture, 1e-10);
  CHECK(v.soliton);
  CHECK(v.residual < 1e-10);
  CHECK(std::abs(v.c + 65.0 / 94.0) < 1e-10);

  // The same support with unit coefficients is not a soliton.
  CHECK_FALSE(verify_soliton(entry("1.17")).soliton);
}

TEST_CASE("soliton system matches the displayed equations") {
  SolitonSystem sys = soliton_system({1, 1, 2, 3, 3, 4, 5});
  REQUIRE(sys.slots.size() == 13);
  REQUIRE(sys.jacobi.size() == 3);
  REQUIRE(sys.moment.size() == 9);

  const std::vector<std::string> jacobi = {
      "- 1 a10 a6 + 1 a5 a11 + 1 a1 a13",
      "- 1 a9 a6 + 1 a4 a11 + 1 a1 a12",
      "- 1 a8 a5 + 1 a3 a10 - 1 a7 a4 + 1 a2 a9",
  };
  auto negate = [](Quadratic q) {
    for (auto& [k, v] : q) v = -v;
    return q;
  };
  for (const auto& text : jacobi) {
    Quadratic q = parse_display(text);
    bool found = false;
    for (const auto& j : sys.jacobi) found = found || j == q || j == negate(q);
    CHECK_MESSAGE(found, text);
  }

  struct Row {
    int r, s;
    const char* lhs;
    Rational rhs;
  };
  const std::vector<Row> moment = {
      {1, 1, "- 2 a1^2 - 2 a2^2 - 2 a3^2 - 2 a4^2 - 2 a5^2 - 2 a6^2", Rational(-23, 47)},
      {1, 2, "- 2 a2 a7 - 2 a3 a8 - 2 a4 a9 - 2 a5 a10 - 2 a6 a11", 0},
      {2, 2, "- 2 a1^2 - 2 a7^2 - 2 a8^2 - 2 a9^2 - 2 a10^2 - 2 a11^2", Rational(-23, 47)},
      {3, 3, "2 a1^2 - 2 a2^2 - 2 a3^2 - 2 a7^2 - 2 a8^2 - 2 a12^2 - 2 a13^2", Rational(-27, 94)},
      {4, 4, "2 a2^2 - 2 a4^2 + 2 a7^2 - 2 a9^2 - 2 a12^2", Rational(-4, 47)},
      {4, 5, "2 a2 a3 - 2 a4 a5 + 2 a7 a8 - 2 a9 a10 - 2 a12 a13", 0},
      {5, 5, "2 a3^2 - 2 a5^2 + 2 a8^2 - 2 a10^2 - 2 a13^2", Rational(-4, 47)},
      {6, 6, "2 a4^2 + 2 a5^2 - 2 a6^2 + 2 a9^2 + 2 a10^2 - 2 a11^2", Rational(11, 94)},
      {7, 7, "2 a6^2 + 2 a11^2 + 2 a12^2 + 2 a13^2", Rational(15, 47)},
  };
  for (std::size_t i = 0; i < moment.size(); ++i) {
    CHECK(sys.moment[i].r == moment[i].r);
    CHECK(sys.moment[i].s == moment[i].s);
    CHECK(sys.moment[i].lhs == parse_display(moment[i].lhs));
    CHECK(sys.moment[i].rhs == moment[i].rhs);
  }
  CHECK(emit_soliton_system({1, 1, 2, 3, 3, 4, 5}) == sys.to_text());
  CHECK_THROWS_AS(soliton_system({1, 1, 1}), Error);
}
