#include "nilrad/nice_basis.hpp"

#include <algorithm>
#include <map>

#include "nilrad/error.hpp"
#include "nilrad/lp.hpp"

namespace nilrad {

std::string NiceViolation::to_string() const {
  std::string list;
  for (std::size_t a = 0; a < others.size(); ++a) list += (a ? "," : "") + std::to_string(others[a]);
  if (kind == Kind::TwoTargets)
    return "[e" + std::to_string(first) + ",e" + std::to_string(second) + "] has components along k in {" + list + "}";
  return "e" + std::to_string(second) + " appears in [e" + std::to_string(first) + ",e_j] for j in {" + list + "}";
}

NiceReport is_nice(const LieLaw& law) {
  if (law.uses_param()) throw Error("is_nice requires an instantiated law");
  std::map<std::pair<int, int>, std::vector<int>> targets, sources;
  for (const auto& [s, c] : law.brackets()) {
    targets[{s.i, s.j}].push_back(s.k);
    sources[{s.i, s.k}].push_back(s.j);
    sources[{s.j, s.k}].push_back(s.i);
  }
  NiceReport r;
  for (const auto& [key, ks] : targets)
    if (ks.size() > 1) r.violations.push_back({NiceViolation::Kind::TwoTargets, key.first, key.second, ks});
  for (auto& [key, js] : sources)
    if (js.size() > 1) {
      std::sort(js.begin(), js.end());
      r.violations.push_back({NiceViolation::Kind::TwoSources, key.first, key.second, js});
    }
  r.nice = r.violations.empty();
  return r;
}

RVector weight(int n, const Slot& s) {
  RVector w(static_cast<std::size_t>(n));
  w[static_cast<std::size_t>(s.k - 1)] += 1;
  w[static_cast<std::size_t>(s.i - 1)] -= 1;
  w[static_cast<std::size_t>(s.j - 1)] -= 1;
  return w;
}

RMatrix gram_matrix(const LieLaw& law) {
  std::vector<RVector> ws;
  for (const auto& s : law.support()) ws.push_back(weight(law.dim(), s));
  RMatrix u(ws.size(), ws.size());
  for (std::size_t p = 0; p < ws.size(); ++p)
    for (std::size_t q = 0; q < ws.size(); ++q) u(p, q) = dot(ws[p], ws[q]);
  return u;
}

std::string to_string(Einstein e) {
  switch (e) {
    case Einstein::Yes: return "yes";
    case Einstein::No: return "no";
    case Einstein::NotApplicable: return "not-applicable";
  }
  return "?";
}

CriterionVerdict nice_criterion(const LieLaw& law) {
  if (law.is_abelian()) throw Error("nice criterion requires a nonzero law");
  CriterionVerdict v;
  v.nice = is_nice(law).nice;
  v.slots = law.support();
  if (!v.nice) return v;

  FeasibilityProblem p;
  p.equalities = gram_matrix(law);
  p.rhs.assign(v.slots.size(), Rational(1));
  p.signs.assign(v.slots.size(), SignConstraint::Positive);
  p.inequalities = RMatrix(0, v.slots.size());
  FeasibilityResult r = lp_feasible(p);
  if (r.feasible) {
    v.einstein = Einstein::Yes;
    v.witness = r.witness;
  } else {
    v.einstein = Einstein::No;
    v.forced_zero = r.forced_zero_indices;
    v.certificate = r.equality_certificate;
  }
  return v;
}

}  // namespace nilrad
