#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilrad/catalog.hpp"
#include "nilrad/degeneration.hpp"
#include "nilrad/moment_map.hpp"
#include "nilrad/nice_basis.hpp"
#include "nilrad/pre_einstein.hpp"

namespace nilrad {

enum class Verdict { Einstein, NotEinstein, Inconclusive };

std::string to_string(Verdict v);

struct ClassifyOptions {
  double tol = 1e-10;
  /// Treat diagonal rank 0 as true rank 0 (and hence not EN).
  bool torus_adapted = false;
};

struct Report {
  std::string name;
  std::optional<Rational> lambda;
  Verdict verdict = Verdict::Inconclusive;
  /// How the verdict was reached: "nice-criterion", "degeneration", "phi-not-positive",
  /// "rank-zero", "soliton-fixture", or "none".
  std::string certificate = "none";

  int dimension = 0;
  int dim_der = 0;
  int diagonal_rank = 0;
  SeriesDims dcs;
  SeriesDims derived;
  std::optional<PreEinsteinResult> phi;
  std::optional<Rational> min;

  std::optional<CriterionVerdict> criterion;
  std::vector<NiceViolation> nice_violations;
  std::optional<DegenerationCertificate> degeneration;
  std::optional<SolitonVerdict> soliton;
  std::string soliton_system;  // exported when the pipeline stays inconclusive

  std::vector<std::string> diagnostics;
  std::vector<std::string> mismatches;  // computed values contradicting the expected record
  const ExpectedRecord* expected = nullptr;
};

/// Runs Jacobi, series, pre-Einstein, necessary conditions, nice criterion, then the
/// degeneration search. Throws on Jacobi failure or a non-nilpotent law.
Report classify(const LieLaw& law, const ClassifyOptions& options = {});

/// classify() plus the entry's soliton representative (which can upgrade an inconclusive
/// verdict to EN) and a comparison against the published record.
Report classify_entry(const CatalogEntry& entry, const std::optional<Rational>& lambda,
                      const ClassifyOptions& options = {});

/// Fills report.mismatches from the record.
void compare_with(Report& report, const ExpectedRecord& record);

/// Table columns: name, lambda, EN, pre-Einstein derivation, Min, dim Der, DCS, certificate,
/// mismatches. EN is rendered as the published marks: a check mark, "-", or "?".
std::string table_tsv(const std::vector<Report>& reports);
std::string table_json(const std::vector<Report>& reports);
std::string report_json(const Report& report);
std::string report_text(const Report& report);

/// "(5,4,2,1)": the series without the leading n and trailing 0.
std::string dcs_text(const SeriesDims& dims);

}  // namespace nilrad
