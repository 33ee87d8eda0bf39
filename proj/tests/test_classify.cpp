#include <doctest.h>
#include <json.hpp>

#include "nilrad/catalog.hpp"
#include "nilrad/classify.hpp"
#include "nilrad/error.hpp"

using namespace nilrad;

namespace {

Report run(const std::string& name, std::optional<Rational> lambda = std::nullopt) {
  const auto* e = find_entry(name);
  REQUIRE(e);
  return classify_entry(*e, lambda);
}

}  // namespace

TEST_CASE("verdicts for the bundled laws") {
  auto r117 = run("1.17");
  CHECK(r117.verdict == Verdict::Einstein);
  CHECK(r117.certificate == "soliton-fixture");
  CHECK(r117.mismatches.empty());
  CHECK(r117.dim_der == 11);
  CHECK(dcs_text(r117.dcs) == "(5,4,2,1)");
  REQUIRE(r117.min);
  CHECK(*r117.min == Rational(65, 94));

  auto r22 = run("2.2");
  CHECK(r22.verdict == Verdict::NotEinstein);
  CHECK(r22.certificate == "degeneration");
  CHECK(r22.mismatches.empty());

  auto r13 = run("1.3(i_l)", Rational(2));
  CHECK(r13.verdict == Verdict::Inconclusive);
  CHECK(r13.dim_der == 13);
  CHECK(dcs_text(r13.dcs) == "(4,2,1)");
  CHECK(r13.mismatches.empty());
  CHECK_FALSE(r13.soliton_system.empty());

  for (int l : {0, 1}) {
    auto r = run("3.1(i_l)", Rational(l));
    CHECK(r.verdict == Verdict::NotEinstein);
    CHECK(r.certificate == "nice-criterion");
  }
  auto r31 = run("3.1(i_l)", Rational(3));
  CHECK(r31.verdict == Verdict::Einstein);
  CHECK(r31.dim_der == 15);
  CHECK(r31.mismatches.empty());
}

TEST_CASE("a disagreement with a record is reported, not hidden") {
  auto r = run("3.1(i_l)", Rational(2));
  CHECK(r.verdict == Verdict::Einstein);
  CHECK(r.dim_der == 17);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].find("dim Der") != std::string::npos);
}

TEST_CASE("records match parameter conditions") {
  CHECK(expected_record("3.1(i_l)", Rational(0))->condition == "l=0");
  CHECK(expected_record("3.1(i_l)", Rational(5))->einstein);
  CHECK(expected_record("1.17", std::nullopt)->dim_der == 11);
  CHECK(expected_record("9.99", std::nullopt) == nullptr);
  CHECK(table_records().size() == 124);
}

TEST_CASE("classify rejects invalid laws") {
  CHECK_THROWS_AS(classify(LieLaw::rational(3, {{1, 2, 3, 1}, {1, 3, 2, -1}, {2, 3, 1, 1}})), Error);
  CHECK_THROWS_AS(classify(LieLaw::rational(4, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 4, 1}, {1, 4, 2, 1}})), Error);
}

TEST_CASE("small laws") {
  auto h = classify(LieLaw::rational(3, {{1, 2, 3, 1}}));
  CHECK(h.verdict == Verdict::Einstein);
  CHECK(h.certificate == "nice-criterion");
  auto f4 = run("filiform4");
  CHECK(f4.verdict == Verdict::Einstein);
}

TEST_CASE("table and JSON output") {
  std::vector<Report> reports{run("1.17"), run("2.2")};
  std::string tsv = table_tsv(reports);
  CHECK(tsv.rfind("name\tlambda\tEN", 0) == 0);
  CHECK(tsv.find("19/65(1,1,2,3,3,4,5)") != std::string::npos);
  CHECK(tsv.find("0.692") != std::string::npos);

  auto j = nlohmann::json::parse(table_json(reports));
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  auto one = nlohmann::json::parse(report_json(reports[1]));
  CHECK(one["verdict"] == "not-EN");
  CHECK(report_text(reports[0]).find("EN") != std::string::npos);
}
