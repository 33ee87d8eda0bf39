#include "nilrad/degeneration.hpp"

#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"
#include "nilrad/lp.hpp"

namespace nilrad {

GPhiDiagonal gphi_diag(const RVector& phi) {
  GPhiDiagonal g;
  g.equalities = RMatrix::from_rows({RVector(phi.size(), Rational(1)), phi}, phi.size());
  return g;
}

InvariantSummary invariant_summary(const LieLaw& law) {
  return {derivation_space(law).dim(), descending_central_series(law), derived_series(law)};
}

Rational exponent(const RVector& x, const Slot& s) {
  return x[static_cast<std::size_t>(s.i - 1)] + x[static_cast<std::size_t>(s.j - 1)] - x[static_cast<std::size_t>(s.k - 1)];
}

CertificateCheck check_certificate(const LieLaw& law, const RVector& phi, const RVector& x) {
  const auto n = static_cast<std::size_t>(law.dim());
  if (x.size() != n || phi.size() != n) return {std::nullopt, "X and phi must have length n"};
  RMatrix g = gphi_diag(phi).equalities;
  if (!is_zero(g * x)) return {std::nullopt, "X violates tr(X) = 0 or tr(X phi) = 0"};
  DegenerationCertificate c;
  c.x = x;
  for (const auto& s : law.support()) {
    Rational e = exponent(x, s);
    if (e < 0) return {std::nullopt, "slot " + to_string(s) + " has negative exponent; the limit does not exist"};
    if (e > 0) c.dropped.push_back(s);
  }
  if (c.dropped.empty()) return {std::nullopt, "X fixes every slot; the limit is the law itself"};
  c.limit = without_slots(law, c.dropped);
  if (!jacobi_check(c.limit).empty()) return {std::nullopt, "limit law fails the Jacobi identity"};
  c.before = invariant_summary(law);
  c.after = invariant_summary(c.limit);
  return {std::move(c), ""};
}

namespace {

// Exponent constraints written as rows r with r * a <= 0 (i.e. exponent >= 0).
RVector negated_weight(std::size_t n, const Slot& s) {
  RVector r(n);
  r[static_cast<std::size_t>(s.i - 1)] -= 1;
  r[static_cast<std::size_t>(s.j - 1)] -= 1;
  r[static_cast<std::size_t>(s.k - 1)] += 1;
  return r;
}

std::optional<RVector> search(const LieLaw& law, const RVector& phi, std::size_t strict_slot, bool single) {
  const auto n = static_cast<std::size_t>(law.dim());
  const auto slots = law.support();
  FeasibilityProblem p;
  std::vector<RVector> eq{RVector(n, Rational(1)), phi};
  std::vector<RVector> ineq;
  for (std::size_t q = 0; q < slots.size(); ++q) {
    RVector r = negated_weight(n, slots[q]);
    if (q == strict_slot) {
      ineq.push_back(r);
      p.strict.push_back(true);
    } else if (single) {
      eq.push_back(r);
    } else {
      ineq.push_back(r);
      p.strict.push_back(false);
    }
  }
  p.equalities = RMatrix::from_rows(eq, n);
  p.rhs.assign(eq.size(), Rational(0));
  p.signs.assign(n, SignConstraint::Free);
  p.inequalities = RMatrix::from_rows(ineq, n);
  FeasibilityResult r = lp_feasible(p);
  if (!r.feasible) return std::nullopt;
  // Clear denominators so X has integer eigenvalues.
  Integer l = lcm_of_denominators(r.witness);
  for (auto& v : r.witness) v *= l;
  return r.witness;
}

}  // namespace

std::optional<DegenerationCertificate> find_degeneration(const LieLaw& law, const RVector& phi) {
  const auto slots = law.support();
  std::optional<DegenerationCertificate> first;
  for (bool single : {true, false})
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto x = search(law, phi, s, single);
      if (!x) continue;
      CertificateCheck chk = check_certificate(law, phi, *x);
      if (!chk.certificate) continue;
      if (assess(*chk.certificate) == Assessment::NotEinstein) return chk.certificate;
      if (!first) first = std::move(chk.certificate);
    }
  return first;
}

std::string to_string(Assessment a) { return a == Assessment::NotEinstein ? "not-EN" : "indeterminate"; }

Assessment assess(const DegenerationCertificate& certificate) {
  return certificate.before == certificate.after ? Assessment::Indeterminate : Assessment::NotEinstein;
}

}  // namespace nilrad
