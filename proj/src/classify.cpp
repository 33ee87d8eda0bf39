#include "nilrad/classify.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"

namespace nilrad {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Einstein: return "EN";
    case Verdict::NotEinstein: return "not-EN";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string dcs_text(const SeriesDims& dims) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] == 0) break;
    s += (first ? "" : ",") + std::to_string(dims[i]);
    first = false;
  }
  return s + ")";
}

Report classify(const LieLaw& law, const ClassifyOptions& options) {
  if (law.uses_param()) throw Error("bind the parameter before classifying");
  auto violations = jacobi_check(law);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error("Jacobi identity fails on (e" + std::to_string(v.i) + ",e" + std::to_string(v.j) + ",e" +
                std::to_string(v.k) + ")");
  }
  Report r;
  r.dimension = law.dim();
  r.dcs = descending_central_series(law);
  r.derived = derived_series(law);
  DerivationSpace der = derivation_space(law);
  r.dim_der = der.dim();
  r.diagonal_rank = diagonal_rank(law);

  if (law.is_abelian()) {
    r.diagnostics.push_back("abelian law: the criteria need a nonzero bracket");
    return r;
  }

  try {
    r.phi = pre_einstein(law, der.basis);
  } catch (const RankZeroError& e) {
    if (options.torus_adapted) {
      r.verdict = Verdict::NotEinstein;
      r.certificate = "rank-zero";
    } else {
      r.diagnostics.push_back("inconclusive (possible rank 0): " + std::string(e.what()));
    }
    return r;
  } catch (const Error& e) {
    r.diagnostics.push_back(e.what());
    return r;
  }
  if (r.phi->type) r.min = min_value(*r.phi->type);

  NecessaryCheck nc = necessary_conditions(*r.phi);
  if (!nc.pass) {
    r.verdict = Verdict::NotEinstein;
    r.certificate = "phi-not-positive";
    r.diagnostics.push_back(nc.reason);
    return r;
  }

  NiceReport nice = is_nice(law);
  r.nice_violations = nice.violations;
  if (nice.nice) {
    r.criterion = nice_criterion(law);
    r.verdict = r.criterion->einstein == Einstein::Yes ? Verdict::Einstein : Verdict::NotEinstein;
    r.certificate = "nice-criterion";
    return r;
  }

  r.degeneration = find_degeneration(law, r.phi->phi);
  if (r.degeneration && assess(*r.degeneration) == Assessment::NotEinstein) {
    r.verdict = Verdict::NotEinstein;
    r.certificate = "degeneration";
    return r;
  }
  r.diagnostics.push_back(r.degeneration ? "diagonal degeneration found but its limit has the same invariants"
                                         : "no diagonal degeneration in G_phi");
  r.soliton_system = emit_soliton_system(r.phi->profile);
  return r;
}

namespace {

// True when D is diagonal and proportional to diag(d) with a positive factor.
bool matches_grading(const std::vector<double>& d_matrix, const Grading& d, double tol) {
  const std::size_t n = d.size();
  double ratio = d_matrix[0] / static_cast<double>(d[0]);
  if (!(ratio > tol)) return false;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      double want = r == s ? ratio * static_cast<double>(d[r]) : 0.0;
      if (std::abs(d_matrix[r * n + s] - want) > tol) return false;
    }
  return true;
}

Rational decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Integer den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  Rational q{Integer(digits, 10), den};
  q.canonicalize();
  return q;
}

}  // namespace

Report classify_entry(const CatalogEntry& entry, const std::optional<Rational>& lambda, const ClassifyOptions& options) {
  LieLaw generic = entry.law();
  std::vector<std::string> warnings;
  LieLaw law = instantiate(generic, lambda, &warnings);
  Report r = classify(law, options);
  r.name = entry.name;
  if (generic.uses_param()) r.lambda = lambda;
  for (auto& w : warnings) r.diagnostics.push_back(std::move(w));

  if (r.verdict == Verdict::Inconclusive && entry.soliton && r.phi && r.phi->type) {
    NumericLaw rep = NumericLaw::parse(*entry.soliton);
    r.soliton = verify_soliton(rep, options.tol);
    if (r.soliton->soliton && matches_grading(r.soliton->derivation, r.phi->profile, 1e-8)) {
      r.verdict = Verdict::Einstein;
      r.certificate = "soliton-fixture";
      r.diagnostics.push_back(
          "bundled soliton representative verified; its identification with this algebra rests on uniqueness of "
          "the eigenvalue type among indecomposable algebras");
    } else {
      r.diagnostics.push_back("bundled soliton representative failed verification");
    }
  }
  if (const ExpectedRecord* rec = expected_record(entry.name, lambda)) compare_with(r, *rec);
  return r;
}

void compare_with(Report& r, const ExpectedRecord& rec) {
  r.expected = &rec;
  if (r.verdict != Verdict::Inconclusive && (r.verdict == Verdict::Einstein) != rec.einstein)
    r.mismatches.push_back("EN: expected " + std::string(rec.einstein ? "yes" : "no"));
  if (r.phi) {
    Grading want = rec.phi_profile();
    Rational scale = rec.phi_scale();
    bool same = want.size() == r.phi->phi.size();
    for (std::size_t i = 0; same && i < want.size(); ++i) same = r.phi->phi[i] == scale * want[i];
    if (!same) r.mismatches.push_back("phi: expected " + rec.phi);
    if (!rec.min.empty() && r.min) {
      Rational expected_exact = min_value(eigen_type(want));
      if (*r.min != expected_exact) r.mismatches.push_back("Min: expected exact " + to_string(expected_exact));
      if (decimal(min_decimal(*r.min)) != decimal(rec.min)) r.mismatches.push_back("Min: expected " + rec.min);
    }
  }
  if (r.dim_der != rec.dim_der) r.mismatches.push_back("dim Der: expected " + std::to_string(rec.dim_der));
  std::vector<int> dcs;
  for (std::size_t i = 1; i < r.dcs.size() && r.dcs[i] != 0; ++i) dcs.push_back(r.dcs[i]);
  if (dcs != rec.dcs_values()) r.mismatches.push_back("DCS: expected " + rec.dcs);
}

namespace {

std::string en_mark(Verdict v) {
  switch (v) {
    case Verdict::Einstein: return "✓";
    case Verdict::NotEinstein: return "-";
    case Verdict::Inconclusive: return "?";
  }
  return "?";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string min_text(const Report& r) {
  return r.verdict == Verdict::Einstein && r.min ? min_decimal(*r.min) : "-";
}

nlohmann::json rvector_json(const RVector& v) {
  auto a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json j;
  j["name"] = r.name;
  j["lambda"] = r.lambda ? json(to_string(*r.lambda)) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["certificate"] = r.certificate;
  j["dimension"] = r.dimension;
  j["dim_der"] = r.dim_der;
  j["diagonal_rank"] = r.diagonal_rank;
  j["dcs"] = r.dcs;
  j["derived_series"] = r.derived;
  if (r.phi) {
    j["phi"] = rvector_json(r.phi->phi);
    j["phi_text"] = r.phi->to_string();
    j["phi_scale"] = to_string(r.phi->scale);
    j["eigenvalue_type"] = r.phi->type ? json(r.phi->type->to_string()) : json(nullptr);
  } else {
    j["phi"] = nullptr;
  }
  if (r.min) {
    j["min"] = to_string(*r.min);
    j["min_decimal"] = min_decimal(*r.min);
  } else {
    j["min"] = nullptr;
  }
  if (r.criterion) {
    json c;
    c["einstein"] = to_string(r.criterion->einstein);
    auto slots = json::array();
    for (const auto& s : r.criterion->slots) slots.push_back(to_string(s));
    c["slots"] = slots;
    c["witness"] = rvector_json(r.criterion->witness);
    c["forced_zero"] = r.criterion->forced_zero;
    c["certificate"] = rvector_json(r.criterion->certificate);
    j["nice_criterion"] = c;
  }
  if (!r.nice_violations.empty()) {
    auto v = json::array();
    for (const auto& x : r.nice_violations) v.push_back(x.to_string());
    j["nice_violations"] = v;
  }
  if (r.degeneration) {
    json d;
    d["x"] = rvector_json(r.degeneration->x);
    auto dropped = json::array();
    for (const auto& s : r.degeneration->dropped) dropped.push_back(to_string(s));
    d["dropped"] = dropped;
    d["dim_der"] = {r.degeneration->before.dim_der, r.degeneration->after.dim_der};
    d["dcs"] = {r.degeneration->before.dcs, r.degeneration->after.dcs};
    d["assessment"] = to_string(assess(*r.degeneration));
    j["degeneration"] = d;
  }
  if (r.soliton) {
    j["soliton"] = {{"soliton", r.soliton->soliton}, {"c", r.soliton->c}, {"residual", r.soliton->residual}};
  }
  if (!r.soliton_system.empty()) j["soliton_system"] = r.soliton_system;
  j["diagnostics"] = r.diagnostics;
  j["mismatches"] = r.mismatches;
  if (r.expected) {
    j["expected"] = {{"einstein", r.expected->einstein}, {"phi", r.expected->phi}, {"min", r.expected->min},
                     {"dim_der", r.expected->dim_der}, {"dcs", r.expected->dcs}};
  }
  return j;
}

}  // namespace

std::string table_tsv(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << "name\tlambda\tEN\tpre-Einstein derivation\tMin\tdim Der\tDCS\tcertificate\tmismatches\n";
  for (const auto& r : reports) {
    out << r.name << "\t" << (r.lambda ? to_string(*r.lambda) : "") << "\t" << en_mark(r.verdict) << "\t"
        << (r.phi ? r.phi->to_string() : "-") << "\t" << min_text(r) << "\t" << r.dim_der << "\t" << dcs_text(r.dcs)
        << "\t" << r.certificate << "\t" << (r.mismatches.empty() ? "" : "MISMATCH: " + join(r.mismatches, "; "))
        << "\n";
  }
  return out.str();
}

std::string table_json(const std::vector<Report>& reports) {
  auto a = nlohmann::json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return a.dump(2) + "\n";
}

std::string report_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string report_text(const Report& r) {
  std::ostringstream out;
  if (!r.name.empty()) out << "name: " << r.name << (r.lambda ? " at l=" + to_string(*r.lambda) : "") << "\n";
  out << "verdict: " << to_string(r.verdict) << " (" << r.certificate << ")\n";
  out << "dim Der: " << r.dim_der << "   diagonal rank: " << r.diagonal_rank << "\n";
  out << "DCS: " << dcs_text(r.dcs) << "   derived series: " << dcs_text(r.derived) << "\n";
  if (r.phi) {
    out << "pre-Einstein derivation: " << r.phi->to_string();
    if (r.phi->type) out << "   type " << r.phi->type->to_string();
    out << "\n";
  }
  if (r.min) out << "Min: " << to_string(*r.min) << " = " << min_decimal(*r.min) << "\n";
  if (!r.nice_violations.empty()) {
    out << "basis is not nice:\n";
    for (const auto& v : r.nice_violations) out << "  " << v.to_string() << "\n";
  }
  if (r.criterion) {
    out << "nice criterion: " << to_string(r.criterion->einstein);
    if (!r.criterion->witness.empty()) {
      out << "  witness x = (";
      for (std::size_t i = 0; i < r.criterion->witness.size(); ++i)
        out << (i ? ", " : "") << to_string(r.criterion->witness[i]);
      out << ")";
    }
    for (auto i : r.criterion->forced_zero) out << "  coordinate " << i + 1 << " " << to_string(r.criterion->slots[i]) << " forced to 0";
    out << "\n";
  }
  if (r.degeneration) {
    const auto& d = *r.degeneration;
    out << "degeneration X = diag(";
    for (std::size_t i = 0; i < d.x.size(); ++i) out << (i ? "," : "") << to_string(d.x[i]);
    out << ") drops";
    for (const auto& s : d.dropped) out << " " << to_string(s);
    out << "; dim Der " << d.before.dim_der << " -> " << d.after.dim_der << ", DCS " << dcs_text(d.before.dcs) << " -> "
        << dcs_text(d.after.dcs) << "\n";
  }
  if (r.soliton)
    out << "soliton representative: " << (r.soliton->soliton ? "verified" : "rejected") << ", c = " << r.soliton->c
        << ", residual " << r.soliton->residual << "\n";
  for (const auto& d : r.diagnostics) out << "note: " << d << "\n";
  for (const auto& m : r.mismatches) out << "MISMATCH: " << m << "\n";
  return out.str();
}

}  // namespace nilrad
