#include "nilrad/pre_einstein.hpp"

#include <map>
#include <numeric>

#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"

namespace nilrad {

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer profile entry does not fit in a machine word");
  return z.get_si();
}

std::string join(const Grading& d, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(d[i]);
  }
  return s;
}

}  // namespace

int EigenType::dimension() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

Grading EigenType::expanded() const {
  Grading d;
  for (std::size_t i = 0; i < values.size(); ++i) d.insert(d.end(), static_cast<std::size_t>(multiplicities[i]), values[i]);
  return d;
}

std::string EigenType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += "<";
    s += std::to_string(values[i]);
  }
  s += "; ";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(multiplicities[i]);
  }
  return s + ")";
}

EigenType eigen_type(const Grading& d) {
  if (d.empty()) throw Error("empty grading");
  long g = 0;
  for (long v : d) {
    if (v <= 0) throw Error("eigenvalue type requires positive entries");
    g = std::gcd(g, v);
  }
  std::map<long, int> counts;
  for (long v : d) ++counts[v / g];
  EigenType t;
  for (const auto& [v, m] : counts) {
    t.values.push_back(v);
    t.multiplicities.push_back(m);
  }
  return t;
}

std::string PreEinsteinResult::to_string() const {
  if (profile.empty()) return "0";
  std::string body = "(" + join(profile) + ")";
  return scale == 1 ? body : nilrad::to_string(scale) + body;
}

PreEinsteinResult pre_einstein(const LieLaw& law) { return pre_einstein(law, derivation_space(law).basis); }

PreEinsteinResult pre_einstein(const LieLaw& law, const std::vector<RMatrix>& derivation_basis) {
  descending_central_series(law);
  const DiagonalTorus torus = diagonal_derivations(law);
  if (torus.dim() == 0) throw RankZeroError();
  const std::size_t r = static_cast<std::size_t>(torus.dim());
  const std::size_t n = static_cast<std::size_t>(law.dim());

  RMatrix gram(r, r);
  RVector traces(r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) gram(a, b) = dot(torus.generators[a], torus.generators[b]);
    for (const auto& x : torus.generators[a]) traces[a] += x;
  }
  auto coeffs = solve_unique(gram, traces);
  if (!coeffs) throw Error("trace system over the diagonal torus is singular");

  PreEinsteinResult out;
  out.phi.assign(n, Rational(0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t i = 0; i < n; ++i) out.phi[i] += (*coeffs)[a] * torus.generators[a][i];

  for (const auto& psi : derivation_basis) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < n; ++i) lhs += out.phi[i] * psi(i, i);
    if (lhs != psi.trace()) throw TorusNotMaximalError();
  }

  if (is_zero(out.phi)) {
    out.scale = 0;
    return out;
  }
  const Integer l = lcm_of_denominators(out.phi);
  Integer g = 0;
  std::vector<Integer> ints;
  for (const auto& x : out.phi) {
    Integer v = x.get_num() * (l / x.get_den());
    ints.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  for (const auto& v : ints) out.profile.push_back(to_long(v / g));
  out.scale = Rational(g, l);
  out.scale.canonicalize();

  bool positive = true;
  for (const auto& x : out.phi) positive = positive && x > 0;
  if (positive) out.type = eigen_type(out.profile);
  return out;
}

Rational min_value(const EigenType& type) {
  Rational n = type.dimension(), s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < type.values.size(); ++i) {
    Rational d = type.values[i];
    s1 += type.multiplicities[i] * d;
    s2 += type.multiplicities[i] * d * d;
  }
  Rational denom = n * s2 - s1 * s1;
  if (denom == 0) throw Error("Min is undefined for a type with a single eigenvalue");
  return s2 / denom;
}

TargetMomentMap target_moment_map(const Grading& d) {
  if (d.empty()) throw Error("empty grading");
  Rational n = static_cast<long>(d.size()), s1 = 0, s2 = 0;
  for (long v : d) {
    s1 += v;
    s2 += Rational(v) * v;
  }
  Rational denom = n * s2 - s1 * s1;
  if (denom == 0) throw Error("no soliton target for a grading with a single eigenvalue");
  TargetMomentMap t;
  t.constant = -s2 / denom;
  for (long v : d) t.diagonal.push_back((s1 * v - s2) / denom);
  return t;
}

TargetMomentMap target_moment_map(const EigenType& type) { return target_moment_map(type.expanded()); }

std::vector<Slot> graded_slots(const Grading& d) {
  const int n = static_cast<int>(d.size());
  std::vector<Slot> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (d[i - 1] + d[j - 1] == d[k - 1]) out.push_back({i, j, k});
  return out;
}

NecessaryCheck necessary_conditions(const PreEinsteinResult& result) {
  for (std::size_t i = 0; i < result.phi.size(); ++i)
    if (result.phi[i] <= 0)
      return {false, "phi is not positive: entry " + std::to_string(i + 1) + " is " + to_string(result.phi[i])};
  return {};
}

}  // namespace nilrad
