// Command-line front end for the nilrad library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nilrad/classify.hpp"
#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"
#include "nilrad/format.hpp"

using namespace nilrad;

namespace {

const char* kContinuityCaveat =
    "EN status is not a property which depends continuously on the structure constants, so a curve has to be "
    "classified value by value; pass --param NAME=RAT.";

struct Source {
  std::string name;
  std::string text;
  const CatalogEntry* entry = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// An existing path wins; otherwise the argument names a bundled catalog entry.
Source load(const std::string& arg) {
  if (std::filesystem::exists(arg)) return {arg, read_file(arg), nullptr};
  if (const CatalogEntry* e = find_entry(arg)) return {e->name, e->text, e};
  throw Error("'" + arg + "' is neither a file nor a catalog entry (see 'catalog list')");
}

struct ParamValue {
  std::string name;
  Rational value;
};

ParamValue parse_param(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw Error("--param expects NAME=RAT, got '" + s + "'");
  return {s.substr(0, eq), parse_rational(s.substr(eq + 1))};
}

// Binds the law's parameter from the --param list. Refuses symbolic classification.
std::optional<Rational> bind_value(const LieLaw& law, const std::vector<std::string>& params) {
  std::optional<Rational> value;
  for (const auto& p : params) {
    ParamValue v = parse_param(p);
    if (law.param_name() && v.name != *law.param_name())
      throw Error("law parameter is '" + *law.param_name() + "', not '" + v.name + "'");
    value = v.value;
  }
  if (law.uses_param() && !value)
    throw Error("law depends on parameter '" + *law.param_name() + "'. " + kContinuityCaveat);
  return value;
}

LieLaw bound_law(const Source& src, const std::vector<std::string>& params, std::optional<Rational>* lambda = nullptr) {
  LieLaw law = parse_law(src.text);
  std::vector<std::string> warnings;
  auto value = bind_value(law, params);
  LieLaw out = instantiate(law, value, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  if (lambda) *lambda = law.uses_param() ? value : std::nullopt;
  return out;
}

std::string vec_text(const RVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

void print_matrix(const RMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? "\t" : "  ") << to_string(m(r, c));
    std::cout << "\n";
  }
}

Grading parse_grading(const std::string& s) {
  Grading d;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) d.push_back(std::stol(item));
  if (d.empty()) throw Error("empty grading");
  return d;
}

RVector parse_vector(const std::string& s) {
  RVector v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
  return v;
}

bool looks_numeric(const std::string& text) { return text.find("sqrt") != std::string::npos; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of nilpotent Lie algebras and Einstein nilradicals"};
  app.require_subcommand(1);

  std::vector<std::string> params;
  double tol = 1e-10;
  bool json = false;
  unsigned jobs = 1;
  bool torus_adapted = false;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--param", params, "Parameter value NAME=RAT (repeatable for table)");
    cmd->add_option("--tol", tol, "Numeric tolerance for Jacobi and soliton residuals")->capture_default_str();
    cmd->add_flag("--json", json, "Emit JSON");
  };

  std::string input;
  std::vector<std::string> inputs;

  auto* validate = app.add_subcommand("validate", "Parse a law and check the Jacobi identity and nilpotency");
  validate->add_option("law", input, "Algebra file or catalog name")->required();
  common(validate);

  auto* invariants = app.add_subcommand("invariants", "dim Der, diagonal rank, central and derived series");
  invariants->add_option("law", input)->required();
  common(invariants);

  auto* pre = app.add_subcommand("pre-einstein", "Pre-Einstein derivation, eigenvalue type, Min, target moment map");
  pre->add_option("law", input)->required();
  common(pre);

  auto* nice = app.add_subcommand("nice", "Nice-basis test, Gram matrix and positive-solution criterion");
  nice->add_option("law", input)->required();
  common(nice);

  auto* moment = app.add_subcommand("moment-map", "Moment map, norm and the functional F");
  moment->add_option("law", input)->required();
  common(moment);

  std::string x_text;
  auto* degen = app.add_subcommand("degenerate", "Search for a diagonal degeneration in G_phi");
  degen->add_option("law", input)->required();
  degen->add_option("--x", x_text, "Check this diagonal X (comma-separated) instead of searching");
  common(degen);

  bool force_numeric = false;
  bool use_representative = false;
  auto* verify = app.add_subcommand("verify-soliton", "Test m(mu) = cI + D with D a derivation and c < 0");
  verify->add_option("law", input)->required();
  verify->add_flag("--numeric", force_numeric, "Read coefficients as p/q or sqrt(p/q) tokens");
  verify->add_flag("--representative", use_representative, "Use the catalog entry's bundled soliton representative");
  common(verify);

  std::string grading_text;
  auto* system = app.add_subcommand("soliton-system", "Export the soliton polynomial system for a grading");
  auto* grading_opt = system->add_option("--grading", grading_text, "Comma-separated positive integers");
  system->add_option("law", input, "Use the eigenvalue profile of this law's pre-Einstein derivation")
      ->excludes(grading_opt);
  common(system);

  auto* classify_cmd = app.add_subcommand("classify", "Run the full EN pipeline");
  classify_cmd->add_option("law", input)->required();
  classify_cmd->add_flag("--torus-adapted", torus_adapted, "Treat diagonal rank 0 as rank 0");
  common(classify_cmd);

  auto* table = app.add_subcommand("table", "Classify several laws (default: the bundled catalog)");
  table->add_option("laws", inputs, "Algebra files or catalog names");
  table->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  table->add_flag("--torus-adapted", torus_adapted, "Treat diagonal rank 0 as rank 0");
  common(table);

  auto* catalog = app.add_subcommand("catalog", "Bundled laws and published table records");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List bundled laws");
  auto* cat_show = catalog->add_subcommand("show", "Print a bundled law in file format");
  cat_show->add_option("name", input)->required();
  bool records = false;
  cat_list->add_flag("--records", records, "List the published table records instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      Source src = load(input);
      LieLaw law = bound_law(src, params);
      auto bad = jacobi_check(law);
      for (const auto& v : bad)
        std::cout << "Jacobi fails on (e" << v.i << ",e" << v.j << ",e" << v.k << "): residual " << vec_text(v.residual)
                  << "\n";
      bool nil = is_nilpotent(law);
      std::cout << (bad.empty() ? "Jacobi identity holds" : "not a Lie algebra") << "; "
                << (nil ? "nilpotent" : "not nilpotent") << "\n";
      return bad.empty() && nil ? 0 : 1;
    }

    if (invariants->parsed()) {
      LieLaw law = bound_law(load(input), params);
      auto dcs = descending_central_series(law);
      auto der = derived_series(law);
      std::cout << "dim " << law.dim() << "\ndim Der " << derivation_space(law).dim() << "\ndiagonal rank "
                << diagonal_rank(law) << "\nDCS " << dcs_text(dcs) << "\nderived series " << dcs_text(der) << "\n";
      return 0;
    }

    if (pre->parsed()) {
      LieLaw law = bound_law(load(input), params);
      PreEinsteinResult r = pre_einstein(law);
      std::cout << "phi " << r.to_string() << "\n";
      NecessaryCheck nc = necessary_conditions(r);
      if (!nc.pass) {
        std::cout << "necessary condition fails: " << nc.reason << "\n";
        return 0;
      }
      std::cout << "type " << r.type->to_string() << "\n";
      Rational m = min_value(*r.type);
      std::cout << "Min " << to_string(m) << " = " << min_decimal(m) << "\n";
      TargetMomentMap t = target_moment_map(r.profile);
      std::cout << "target moment map diag" << vec_text(t.diagonal) << ", c = " << to_string(t.constant) << "\n";
      return 0;
    }

    if (nice->parsed()) {
      LieLaw law = bound_law(load(input), params);
      NiceReport nr = is_nice(law);
      std::cout << (nr.nice ? "basis is nice" : "basis is not nice") << "\n";
      for (const auto& v : nr.violations) std::cout << "  " << v.to_string() << "\n";
      std::cout << "Gram matrix over";
      for (const auto& s : law.support()) std::cout << " " << to_string(s);
      std::cout << "\n";
      print_matrix(gram_matrix(law));
      CriterionVerdict cv = nice_criterion(law);
      std::cout << "criterion: " << to_string(cv.einstein) << "\n";
      if (!cv.witness.empty()) std::cout << "  positive solution x = " << vec_text(cv.witness) << "\n";
      for (auto i : cv.forced_zero)
        std::cout << "  coordinate " << i + 1 << " " << to_string(cv.slots[i]) << " vanishes on every solution\n";
      if (!cv.certificate.empty()) std::cout << "  U x = 1 is inconsistent: y = " << vec_text(cv.certificate) << "\n";
      return 0;
    }

    if (moment->parsed()) {
      Source src = load(input);
      if (looks_numeric(src.text)) {
        NumericLaw nl = NumericLaw::parse(src.text);
        auto m = moment_map(nl);
        std::cout.precision(15);
        for (int r = 0; r < nl.dim(); ++r) {
          for (int c = 0; c < nl.dim(); ++c) std::cout << (c ? "\t" : "  ") << m[static_cast<std::size_t>(r * nl.dim() + c)];
          std::cout << "\n";
        }
        std::cout << "norm^2 " << norm_sq(nl) << "\nF " << functional_F(nl) << "\n";
        return 0;
      }
      LieLaw law = bound_law(src, params);
      print_matrix(moment_map(law));
      std::cout << "norm^2 " << to_string(norm_sq(law)) << "\nF " << to_string(functional_F(law)) << "\n";
      return 0;
    }

    if (degen->parsed()) {
      LieLaw law = bound_law(load(input), params);
      PreEinsteinResult phi = pre_einstein(law);
      std::optional<DegenerationCertificate> cert;
      if (!x_text.empty()) {
        CertificateCheck chk = check_certificate(law, phi.phi, parse_vector(x_text));
        if (!chk.certificate) {
          std::cout << "invalid: " << chk.reason << "\n";
          return 1;
        }
        cert = chk.certificate;
      } else {
        cert = find_degeneration(law, phi.phi);
      }
      if (!cert) {
        std::cout << "no diagonal degeneration in G_phi (inconclusive)\n";
        return 0;
      }
      std::cout << "X = diag" << vec_text(cert->x) << "\ndropped";
      for (const auto& s : cert->dropped) std::cout << " " << to_string(s);
      std::cout << "\ndim Der " << cert->before.dim_der << " -> " << cert->after.dim_der << "\nDCS "
                << dcs_text(cert->before.dcs) << " -> " << dcs_text(cert->after.dcs) << "\nderived "
                << dcs_text(cert->before.derived) << " -> " << dcs_text(cert->after.derived) << "\nassessment "
                << to_string(assess(*cert)) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      Source src = load(input);
      std::string text = src.text;
      if (use_representative) {
        if (!src.entry || !src.entry->soliton) throw Error("'" + input + "' has no bundled soliton representative");
        text = *src.entry->soliton;
      }
      SolitonVerdict v;
      if (force_numeric || looks_numeric(text)) {
        v = verify_soliton(NumericLaw::parse(text), tol);
      } else {
        v = verify_soliton(bound_law(src, params), tol);
      }
      std::cout.precision(15);
      std::cout << (v.soliton ? "soliton" : "not a soliton") << "\nc " << v.c;
      if (v.c_exact) std::cout << " = " << to_string(*v.c_exact);
      std::cout << "\nresidual " << v.residual << "\n";
      return v.soliton ? 0 : 1;
    }

    if (system->parsed()) {
      Grading d;
      if (!grading_text.empty()) {
        d = parse_grading(grading_text);
      } else if (!input.empty()) {
        PreEinsteinResult r = pre_einstein(bound_law(load(input), params));
        if (!r.type) throw Error("pre-Einstein derivation is not positive; no soliton type");
        d = r.profile;
      } else {
        throw Error("give --grading or a law");
      }
      std::cout << emit_soliton_system(d);
      return 0;
    }

    ClassifyOptions opts;
    opts.tol = tol;
    opts.torus_adapted = torus_adapted;

    if (classify_cmd->parsed()) {
      Source src = load(input);
      std::optional<Rational> lambda;
      LieLaw law = parse_law(src.text);
      lambda = bind_value(law, params);
      Report r;
      if (src.entry) {
        r = classify_entry(*src.entry, law.uses_param() ? lambda : std::nullopt, opts);
      } else {
        r = classify(instantiate(law, lambda), opts);
        r.name = src.name;
        if (law.uses_param()) r.lambda = lambda;
      }
      std::cout << (json ? report_json(r) : report_text(r));
      if (r.verdict == Verdict::Inconclusive && !r.soliton_system.empty() && !json)
        std::cout << "\nsoliton system for manual follow-up:\n" << r.soliton_system;
      return 0;
    }

    if (table->parsed()) {
      std::vector<Source> sources;
      if (inputs.empty())
        for (const auto& e : bundled_catalog()) sources.push_back({e.name, e.text, &e});
      else
        for (const auto& a : inputs) sources.push_back(load(a));

      // One job per (source, parameter value).
      struct Job {
        const Source* src;
        std::optional<Rational> lambda;
      };
      std::vector<Job> work;
      for (const auto& s : sources) {
        LieLaw law = parse_law(s.text);
        if (!law.uses_param()) {
          work.push_back({&s, std::nullopt});
          continue;
        }
        bool any = false;
        for (const auto& p : params) {
          ParamValue v = parse_param(p);
          if (v.name != *law.param_name()) continue;
          work.push_back({&s, v.value});
          any = true;
        }
        if (!any) std::cerr << "skipping " << s.name << ": " << kContinuityCaveat << "\n";
      }

      std::vector<Report> reports(work.size());
      std::vector<std::string> errors(work.size());
      std::size_t next = 0;
      std::mutex mu;
      auto worker = [&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= work.size()) return;
            i = next++;
          }
          try {
            const Job& job = work[i];
            if (job.src->entry) {
              reports[i] = classify_entry(*job.src->entry, job.lambda, opts);
            } else {
              reports[i] = classify(instantiate(parse_law(job.src->text), job.lambda), opts);
              reports[i].name = job.src->name;
              reports[i].lambda = job.lambda;
            }
          } catch (const std::exception& e) {
            errors[i] = e.what();
            reports[i].name = work[i].src->name;
            reports[i].lambda = work[i].lambda;
            reports[i].diagnostics.push_back(std::string("error: ") + e.what());
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty()) std::cerr << "error in " << work[i].src->name << ": " << errors[i] << "\n";
      std::cout << (json ? table_json(reports) : table_tsv(reports));
      return 0;
    }

    if (cat_list->parsed()) {
      if (records) {
        for (const auto& r : table_records())
          std::cout << r.name << (r.condition.empty() ? "" : " [" + r.condition + "]") << "\t"
                    << (r.einstein ? "✓" : "-") << "\t" << r.phi << "\t" << (r.min.empty() ? "-" : r.min) << "\t"
                    << r.dim_der << "\t" << r.dcs << "\n";
        return 0;
      }
      for (const auto& e : bundled_catalog())
        std::cout << e.name << "\t" << e.description << (e.soliton ? " [soliton representative]" : "") << "\n";
      return 0;
    }

    if (cat_show->parsed()) {
      const CatalogEntry* e = find_entry(input);
      if (!e) throw Error("no catalog entry '" + input + "'");
      std::cout << serialize(e->law());
      if (e->soliton) std::cout << "\n# soliton representative\n" << *e->soliton;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
