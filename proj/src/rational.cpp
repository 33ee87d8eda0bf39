#include "nilrad/rational.hpp"

#include <cctype>
#include <utility>

#include "nilrad/error.hpp"

namespace nilrad {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

Rational pow10q(int e) {
  return e >= 0 ? Rational(pow10(e)) : Rational(Integer(1), pow10(-e));
}

Integer round_half_even(const Rational& v) {
  // v >= 0
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  Integer twice = 2 * r;
  int cmp = mpz_cmp(twice.get_mpz_t(), v.get_den_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

// q > 0. Returns (digits integer r, shift s) with q ~= r * 10^-s and r having `digits` digits.
std::pair<Integer, int> round_sig(const Rational& q, int digits) {
  int e = 0;
  while (q >= pow10q(e + 1)) ++e;
  while (q < pow10q(e)) --e;
  int s = digits - 1 - e;
  Integer r = round_half_even(q * pow10q(s));
  if (r == pow10(digits)) {
    r = pow10(digits - 1);
    --s;
  }
  return {r, s};
}

std::string format_fixed(const Integer& r, int s) {
  std::string digits = r.get_str();
  if (s <= 0) return digits + std::string(static_cast<size_t>(-s), '0');
  if (static_cast<int>(digits.size()) <= s)
    digits = std::string(static_cast<size_t>(s) - digits.size() + 1, '0') + digits;
  return digits.substr(0, digits.size() - s) + "." + digits.substr(digits.size() - s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw Error("malformed rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q{Integer(std::string(num), 10), d};
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string round_significant(const Rational& q, int digits) {
  if (q == 0) return "0";
  if (q < 0) return "-" + round_significant(-q, digits);
  auto [r, s] = round_sig(q, digits);
  return format_fixed(r, s);
}

std::string min_decimal(const Rational& q) {
  if (q <= 0) return round_significant(q, 3);
  auto [r4, s4] = round_sig(q, 4);
  return round_significant(Rational(r4) * pow10q(-s4), 3);
}

double to_double(const Rational& q) { return q.get_d(); }

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace nilrad
