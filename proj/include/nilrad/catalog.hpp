#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilrad/law.hpp"
#include "nilrad/pre_einstein.hpp"

namespace nilrad {

/// One row of the published classification tables, stored as printed.
struct ExpectedRecord {
  std::string name;       // "1.17", "3.1(i_l)"
  std::string condition;  // "", "l=0", "l!=0,1"
  bool einstein;
  std::string phi;        // "19/65(1,1,2,3,3,4,5)"
  std::string min;        // "0.692", empty when not EN
  int dim_der;
  std::string dcs;        // "(5,4,2,1)": series dimensions after n, before 0
  int rank;

  /// Whether the row's parameter condition holds at lambda (rows without a condition
  /// always apply).
  bool applies(const std::optional<Rational>& lambda) const;
  Rational phi_scale() const;
  Grading phi_profile() const;
  std::vector<int> dcs_values() const;  // empty entries ("(4,2,)") are skipped
};

const std::vector<ExpectedRecord>& table_records();

/// The record for `name` whose condition holds at lambda, if any.
const ExpectedRecord* expected_record(const std::string& name, const std::optional<Rational>& lambda);

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string text;                      // algebra file contents
  std::optional<std::string> soliton;    // numeric soliton representative, same format
  LieLaw law() const;
};

const std::vector<CatalogEntry>& bundled_catalog();
const CatalogEntry* find_entry(const std::string& name);

}  // namespace nilrad
