#include <doctest.h>

#include <random>

#include "nilrad/catalog.hpp"
#include "nilrad/error.hpp"
#include "nilrad/format.hpp"
#include "nilrad/rational.hpp"

using namespace nilrad;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0692") == 692);
  CHECK(to_string(Rational(19, 65)) == "19/65");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("significant-digit rounding is half-to-even") {
  CHECK(round_significant(Rational(65, 94), 3) == "0.691");  // 0.69148... single stage
  CHECK(min_decimal(Rational(65, 94)) == "0.692");           // 0.6915 -> 0.692
  CHECK(min_decimal(Rational(17, 19)) == "0.895");
  CHECK(min_decimal(Rational(1)) == "1.00");
  CHECK(round_significant(Rational(125, 100), 2) == "1.2");
  CHECK(round_significant(Rational(135, 100), 2) == "1.4");
  CHECK(round_significant(Rational(3, 2), 3) == "1.50");
}

namespace {

/// "0.692" -> 692/1000. The tables sometimes drop trailing zeros ("0.9", "1").
Rational decimal_value(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  std::string frac = s.substr(dot + 1);
  Rational q = parse_rational(s.substr(0, dot) + frac + "/1" + std::string(frac.size(), '0'));
  return q;
}

}  // namespace

TEST_CASE("every published Min is reproduced from its pre-Einstein profile") {
  int checked = 0;
  for (const auto& rec : table_records()) {
    if (rec.min.empty()) continue;
    Rational m = min_value(eigen_type(rec.phi_profile()));
    CHECK_MESSAGE(decimal_value(min_decimal(m)) == decimal_value(rec.min), rec.name << " " << rec.condition);
    if (rec.min.size() >= 4) CHECK_MESSAGE(min_decimal(m) == rec.min, rec.name);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("pre-Einstein scale equals tr(phi)/tr(phi^2) of the profile for every record") {
  // tr(phi^2) = tr(phi) forces scale = sum d / sum d^2.
  for (const auto& rec : table_records()) {
    Rational s1 = 0, s2 = 0;
    for (long d : rec.phi_profile()) {
      s1 += d;
      s2 += Rational(d) * d;
    }
    CHECK_MESSAGE(rec.phi_scale() == s1 / s2, rec.name);
  }
}

TEST_CASE("law parser accepts the documented grammar") {
  LieLaw law = parse_law(
      "# example\n"
      "dim 7 param L\n"
      "[1,2] = 4\n"
      "[1,4] = 2*7 + 1/2*5   # trailing comment\n"
      "[3,4] = (L - 1)*7\n");
  CHECK(law.dim() == 7);
  CHECK(law.param_name() == std::optional<std::string>("L"));
  CHECK(law.coeff(1, 2, 4) == 1);
  CHECK(law.coeff(1, 4, 7) == 2);
  CHECK(law.coeff(4, 1, 5) == Rational(-1, 2));
  CHECK(law.param_coeff(3, 4, 7) == ParamCoeff::affine(1, -1));
  CHECK(instantiate(law, Rational(3)).coeff(3, 4, 7) == 2);
}

TEST_CASE("law parser reports line and column") {
  auto fails = [](const char* text, int line) {
    try {
      parse_law(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() >= 1);
      return true;
    }
    return false;
  };
  CHECK(fails("[1,2] = 3\n", 1));                // missing header
  CHECK(fails("dim 0\n", 1));                    // zero dimension
  CHECK(fails("dim 3\n[2,1] = 3\n", 2));         // i >= j
  CHECK(fails("dim 3\n[1,2] = 3\n[1,2] = 3\n", 3));  // duplicate
  CHECK(fails("dim 3\n[1,2] = 4\n", 2));         // out of range
  CHECK(fails("dim 3\n[1,2] = q*3\n", 2));       // unknown identifier
  CHECK(fails("dim 3 param q\n[1,2] = q*q*3\n", 2));  // not affine
  CHECK(fails("dim 3\n[1,2 = 3\n", 2));
}

TEST_CASE("serialize round-trips catalog and random laws") {
  for (const auto& e : bundled_catalog()) {
    LieLaw law = e.law();
    CHECK_MESSAGE(parse_law(serialize(law)) == law, e.name);
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<Bracket> br;
    std::bernoulli_distribution use(0.3), param(0.2);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (use(rng)) {
            Rational b(num(rng), den(rng)), a(param(rng) ? num(rng) : 0, den(rng));
            b.canonicalize();
            a.canonicalize();
            auto c = ParamCoeff::affine(a, b);
            if (!c.is_zero()) br.push_back({{i, j, k}, c});
          }
    LieLaw law(n, br, std::optional<std::string>("t"));
    CHECK(parse_law(serialize(law)) == law);
  }
}
