#include "nilrad/catalog.hpp"

#include <sstream>

#include "nilrad/error.hpp"
#include "nilrad/format.hpp"

namespace nilrad {

namespace {

// name, condition, EN, pre-Einstein derivation, Min, dim Der, DCS, rank
const std::vector<ExpectedRecord> kRecords = {
    {"1.01(i)", "", false, "(0,1,0,1,1,1,1)", "", 11, "(4,3,2,1)", 1},
    {"1.01(ii)", "", false, "(0,1,0,1,1,1,1)", "", 12, "(4,3,2,1)", 1},
    {"1.02", "", false, "1/2(0,1,1,1,2,2,3)", "", 11, "(5,4,2,1)", 1},
    {"1.03", "", false, "2/3(0,1,1,1,1,2,2)", "", 11, "(5,4,2,1)", 1},
    {"1.1(i_l)", "l!=0,1", true, "1/5(1,2,3,4,5,6,7)", "0.714", 10, "(5,4,3,2,1)", 1},
    {"1.1(i_l)", "l=0", false, "1/5(1,2,3,4,5,6,7)", "", 10, "(5,4,3,2,1)", 1},
    {"1.1(i_l)", "l=1", false, "1/5(1,2,3,4,5,6,7)", "", 11, "(5,4,3,2,1)", 1},
    {"1.1(ii)", "", false, "1/5(1,2,3,4,5,6,7)", "", 11, "(5,4,3,2,1)", 1},
    {"1.1(iii)", "", true, "1/5(1,2,3,4,5,6,7)", "0.714", 10, "(5,4,3,2)", 1},
    {"1.1(iv)", "", false, "1/5(1,2,3,4,5,6,7)", "", 11, "(5,4,2,1)", 1},
    {"1.1(v)", "", false, "1/5(1,2,3,4,5,6,7)", "", 10, "(4,3,2,1)", 1},
    {"1.1(vi)", "", false, "1/5(1,2,3,4,5,6,7)", "", 11, "(4,3,2,1)", 1},
    {"1.2(i_l)", "l!=0,1", true, "4/11(1,1,2,2,3,3,4)", "0.846", 12, "(4,3,1)", 1},
    {"1.2(i_l)", "l=0", true, "4/11(1,1,2,2,3,3,4)", "0.846", 12, "(4,3,1)", 1},
    {"1.2(i_l)", "l=1", true, "4/11(1,1,2,2,3,3,4)", "0.846", 12, "(4,3,1)", 1},
    {"1.2(ii)", "", false, "4/11(1,1,2,2,3,3,4)", "", 12, "(4,3,1)", 1},
    {"1.2(iii)", "", false, "4/11(1,1,2,2,3,3,4)", "", 12, "(4,3,1)", 1},
    {"1.2(iv)", "", false, "4/11(1,1,2,2,3,3,4)", "", 12, "(4,2,1)", 1},
    {"1.3(i_l)", "l!=0", true, "5/17(1,2,2,3,3,4,5)", "0.895", 13, "(4,2,1)", 1},
    {"1.3(i_l)", "l=0", false, "5/17(1,2,2,3,3,4,5)", "", 13, "(4,2,1)", 1},
    {"1.3(ii)", "", false, "5/17(1,2,2,3,3,4,5)", "", 14, "(4,2,1)", 1},
    {"1.3(iii)", "", true, "5/17(1,2,2,3,3,4,5)", "0.895", 13, "(4,2,1)", 1},
    {"1.3(iv)", "", false, "5/17(1,2,2,3,3,4,5)", "", 13, "(4,2)", 1},
    {"1.3(v)", "", false, "5/17(1,2,2,3,3,4,5)", "", 13, "(3,2,1)", 1},
    {"1.4", "", true, "17/100(1,3,4,5,6,7,8)", "0.820", 12, "(5,4,3,2,1)", 1},
    {"1.5", "", true, "5/31(1,3,4,5,6,7,9)", "0.738", 11, "(5,4,3,2)", 1},
    {"1.6", "", true, "5/34(1,4,5,6,7,8,9)", "0.895", 12, "(5,4,3,2,1)", 1},
    {"1.7", "", true, "5/29(2,3,4,5,6,7,8)", "1.04", 15, "(4,2)", 1},
    {"1.8", "", false, "20/139(2,4,3,6,7,8,10)", "", 11, "(4,2,1)", 1},
    {"1.9", "", false, "10/67(2,3,6,5,7,8,9)", "", 14, "(4,3,1)", 1},
    {"1.10", "", true, "45/353(2,3,5,7,8,9,11)", "0.792", 11, "(5,4,2,1)", 1},
    {"1.11", "", true, "6/25(1,2,3,3,4,5,6)", "0.806", 11, "(4,3,2,1)", 1},
    {"1.12", "", true, "25/107(1,2,4,3,4,5,6)", "0.863", 12, "(4,3,2,1)", 1},
    {"1.13", "", true, "13/58(1,2,3,4,5,5,6)", "0.853", 12, "(5,4,2,1)", 1},
    {"1.14", "", true, "9/43(1,2,3,4,5,5,7)", "0.741", 11, "(5,4,2,1)", 1},
    {"1.15", "", true, "15/76(1,3,4,4,5,6,7)", "0.927", 13, "(4,3,2,1)", 1},
    {"1.16", "", true, "11/40(1,2,3,3,4,4,5)", "1.05", 15, "(4,2,1)", 1},
    {"1.17", "", true, "19/65(1,1,2,3,3,4,5)", "0.692", 11, "(5,4,2,1)", 1},
    {"1.18", "", true, "23/89(1,2,3,3,4,5,5)", "0.947", 13, "(4,3,1)", 1},
    {"1.19", "", true, "13/29(1,1,1,2,2,3,3)", "0.853", 11, "(4,2)", 1},
    {"1.20", "", false, "8/47(1,2,3,5,6,7,8)", "", 11, "(4,3,2,1)", 1},
    {"1.21", "", false, "25/113(1,2,3,3,4,5,7)", "", 11, "(4,3,2,1)", 1},
    {"2.1(i_l)", "l!=0,1", true, "2/19(3,5,6,8,9,11,14)", "0.905", 14, "(4,2,1)", 2},
    {"2.1(i_l)", "l=0", false, "2/19(3,5,6,8,9,11,14)", "", 14, "(4,2,1)", 2},
    {"2.1(i_l)", "l=1", true, "2/19(3,5,6,8,9,11,14)", "0.905", 14, "(4,2,1)", 2},
    {"2.1(ii)", "", true, "2/19(3,5,6,8,9,11,14)", "0.905", 14, "(4,2,1)", 2},
    {"2.1(iii)", "", true, "2/19(3,5,6,8,9,11,14)", "0.905", 14, "(3,2,1)", 2},
    {"2.1(iv)", "", false, "2/19(3,5,6,8,9,11,14)", "", 14, "(3,1)", 2},
    {"2.1(v)", "", false, "2/19(3,5,6,8,9,11,14)", "", 14, "(4,2)", 2},
    {"2.2", "", false, "1/2(1,1,1,2,2,2,3)", "", 15, "(4,1)", 2},
    {"2.3", "", true, "2/37(1,16,17,18,19,20,21)", "1.06", 13, "(5,4,3,2,1)", 2},
    {"2.4", "", true, "7/52(1,4,5,6,7,8,11)", "0.743", 12, "(5,4,3,2)", 2},
    {"2.5", "", true, "1/5(1,2,3,4,5,6,7)", "0.714", 12, "(5,4,2,1)", 2},
    {"2.6", "", true, "1/52(10,23,33,43,56,53,76)", "0.743", 12, "(5,4,2,1)", 2},
    {"2.7", "", true, "1/18(3,10,13,16,23,19,22)", "0.9", 13, "(5,4,2,1)", 2},
    {"2.8", "", true, "1/12(3,5,8,11,13,14,16)", "0.857", 13, "(5,4,2)", 2},
    {"2.9", "", true, "9/28(1,1,2,3,3,4,4)", "0.824", 12, "(5,4,2)", 2},
    {"2.10", "", false, "1/5(1,2,6,3,4,5,7)", "", 12, "(4,3,2,1)", 2},
    {"2.11", "", true, "1/36(9,19,28,28,37,47,46)", "0.947", 14, "(4,3,1)", 2},
    {"2.12", "", true, "1/9(3,5,5,8,8,11,13)", "0.9", 14, "(4,2)", 2},
    {"2.13", "", true, "1/60(16,21,48,37,53,69,90)", "0.698", 12, "(4,3,2,1)", 2},
    {"2.14", "", true, "1/5(1,3,2,4,5,6,7)", "0.714", 12, "(4,3,2,1)", 2},
    {"2.15", "", true, "1/5(1,3,3,4,5,6,7)", "0.833", 13, "(4,3,2,1)", 2},
    {"2.16", "", true, "1/27(5,17,20,22,27,32,37)", "0.931", 14, "(4,3,2,1)", 2},
    {"2.17", "", true, "1/12(4,5,8,9,13,14,17)", "0.857", 13, "(4,3,1)", 2},
    {"2.18", "", true, "1/68(20,31,60,51,71,82,91)", "0.971", 15, "(4,3,1)", 2},
    {"2.19", "", false, "1/4(1,2,4,3,4,5,5)", "", 15, "(4,3,1)", 2},
    {"2.20", "", true, "2/37(5,16,10,21,15,20,25)", "1.06", 16, "(4,2,1)", 2},
    {"2.21", "", true, "1/31(8,19,24,27,32,35,43)", "1.07", 16, "(4,2,1)", 2},
    {"2.22", "", true, "1/19(5,14,10,15,24,20,25)", "0.950", 14, "(4,2,1)", 2},
    {"2.23", "", false, "4/11(1,1,2,2,3,3,4)", "", 13, "(3,1)", 2},
    {"2.24", "", true, "1/17(5,9,10,14,19,19,24)", "0.895", 13, "(4,2,1)", 2},
    {"2.25", "", true, "5/17(1,2,2,3,3,4,5)", "0.895", 14, "(3,2,1)", 2},
    {"2.26", "", true, "1/17(7,10,7,17,14,21,24)", "0.895", 13, "(4,2)", 2},
    {"2.27", "", true, "1/15(6,7,14,13,13,19,20)", "1.15", 17, "(3,2)", 2},
    {"2.28", "", true, "4/37(4,5,6,8,9,10,14)", "1.06", 16, "(3,1)", 2},
    {"2.29", "", false, "1/41(15,22,30,29,37,52,59)", "", 14, "(3,2)", 2},
    {"2.30", "", true, "4/27(2,4,5,5,6,8,10)", "0.931", 15, "(3,2,1)", 2},
    {"2.31", "", true, "1/39(14,15,27,29,42,43,57)", "0.848", 13, "(4,2,1)", 2},
    {"2.32", "", true, "2/27(3,10,8,13,11,16,19)", "0.931", 14, "(4,2,1)", 2},
    {"2.33", "", true, "1/33(10,18,15,28,33,38,48)", "0.805", 12, "(4,2,1)", 2},
    {"2.34", "", true, "1/47(22,20,21,42,43,62,64)", "0.854", 12, "(4,2)", 2},
    {"2.35", "", true, "1/13(5,6,7,11,12,17,18)", "0.867", 12, "(4,2)", 2},
    {"2.36", "", true, "1/23(18,13,10,15,28,23,33)", "1.10", 16, "(3,1)", 2},
    {"2.37", "", true, "4/11(1,1,2,2,3,3,4)", "0.846", 13, "(4,3,1)", 2},
    {"2.38", "", true, "7/16(1,1,2,2,2,3,3)", "1.14", 16, "(3,2)", 2},
    {"2.39", "", true, "1/16(5,11,10,16,15,21,20)", "1.14", 17, "(4,2)", 2},
    {"2.40", "", true, "1/23(9,10,19,18,28,29,27)", "1.10", 16, "(4,2)", 2},
    {"2.41", "", true, "1/7(2,3,5,6,7,8,10)", "0.875", 13, "(4,3,1)", 2},
    {"2.42", "", false, "1/41(11,22,30,33,41,52,55)", "", 14, "(4,2)", 2},
    {"2.43", "", true, "1/37(11,29,20,40,31,42,51)", "1.06", 16, "(4,2)", 2},
    {"2.44", "", true, "1/37(15,19,23,34,38,42,53)", "1.06", 16, "(4,1)", 2},
    {"2.45", "", true, "1/14(6,7,11,12,13,19,18)", "1.17", 17, "(3,1)", 2},
    {"3.1(i_l)", "l!=0,1", true, "1/2(1,1,1,2,2,2,3)", "1", 15, "(4,1)", 3},
    {"3.1(i_l)", "l=0", false, "1/2(1,1,1,2,2,2,3)", "", 15, "(4,1)", 3},
    {"3.1(i_l)", "l=1", false, "1/2(1,1,1,2,2,2,3)", "", 15, "(4,1)", 3},
    {"3.1(iii)", "", false, "1/2(1,1,1,2,2,2,3)", "", 15, "(3,1)", 3},
    {"3.2", "", true, "2/13(1,5,6,6,7,7,8)", "1.18", 17, "(4,2,1)", 3},
    {"3.3", "", true, "1/21(5,12,15,17,27,22,27)", "0.954", 15, "(4,2,1)", 3},
    {"3.4", "", true, "1/12(6,5,5,11,11,16,16)", "0.857", 13, "(4,2,)", 3},
    {"3.5", "", true, "1/20(10,7,11,17,21,24,28)", "0.909", 14, "(4,2)", 3},
    {"3.6", "", true, "1/13(5,9,7,14,12,16,17)", "1.18", 18, "(4,1)", 3},
    {"3.7", "", false, "1/3(1,2,2,2,3,4,4)", "", 15, "(3,1)", 3},
    {"3.8", "", true, "1/5(2,3,4,4,5,6,7)", "1.25", 19, "(3,1)", 3},
    {"3.9", "", true, "2/13(3,3,5,6,6,8,9)", "1.18", 18, "(3,1)", 3},
    {"3.10", "", true, "1/20(12,7,11,16,19,23,30)", "0.909", 15, "(3,1)", 3},
    {"3.11", "", true, "1/13(5,7,12,10,12,17,17)", "1.18", 18, "(3,1)", 3},
    {"3.12", "", true, "5/8(1,1,1,1,2,2,2)", "1.33", 19, "(3)", 3},
    {"3.13", "", true, "1/21(8,11,15,15,19,27,30)", "0.954", 16, "(3,2)", 3},
    {"3.14", "", true, "1/13(5,9,9,10,14,14,19)", "1.18", 18, "(3,1)", 3},
    {"3.15", "", true, "1/11(6,5,7,9,11,13,16)", "1.10", 17, "(3,1)", 3},
    {"3.16", "", true, "1/12(5,8,5,8,13,13,18)", "0.857", 14, "(3,1)", 3},
    {"3.17", "", true, "5/21(1,3,3,3,4,5,6)", "0.954", 16, "(3,2,1)", 3},
    {"3.18", "", true, "2/13(3,4,5,5,6,7,10)", "1.18", 19, "(2,1)", 3},
    {"3.19", "", true, "1/8(5,6,6,5,6,11,11)", "1.33", 19, "(2)", 3},
    {"3.20", "", true, "1/5(1,4,4,5,5,6,6)", "1.25", 19, "(4,2)", 3},
    {"3.21", "", true, "1/21(6,15,11,21,17,27,28)", "0.954", 15, "(4,2)", 3},
    {"3.22", "", true, "1/20(7,12,10,19,17,29,24)", "0.909", 15, "(4,2)", 3},
    {"3.23", "", true, "1/11(4,5,9,9,13,14,13)", "1.10", 17, "(4,2)", 3},
    {"3.24", "", true, "1/6(5,3,4,4,8,7,7)", "1.50", 22, "(3)", 3},
    {"4.1", "", true, "1/7(4,5,4,5,9,8,9)", "1.4", 20, "(3)", 4},
    {"4.2", "", true, "2/5(1,2,2,2,3,3,3)", "1.67", 25, "(3)", 4},
    {"4.3", "", true, "1/7(5,5,6,5,4,10,9)", "1.4", 21, "(2)", 4},
    {"4.4", "", true, "4/5(1,1,1,1,1,1,2)", "1.67", 28, "(1)", 4},
};

const std::vector<CatalogEntry> kCatalog = {
    {"1.17", "rank one; pre-Einstein type (1<2<3<4<5; 2,1,2,1,1)",
     "dim 7\n"
     "[1,2] = 3\n"
     "[1,3] = 4\n"
     "[1,4] = 6\n"
     "[1,6] = 7\n"
     "[2,3] = 5\n"
     "[2,5] = 6\n"
     "[2,6] = 7\n"
     "[3,4] = -7\n"
     "[3,5] = 7\n",
     "dim 7\n"
     "# unit-norm soliton representative of the same eigenvalue type\n"
     "[1,2] = sqrt(611)/94*3\n"
     "[1,3] = sqrt(235)/47*5\n"
     "[1,5] = sqrt(611)/94*6\n"
     "[2,3] = sqrt(235)/94*4\n"
     "[2,4] = sqrt(611)/94*6\n"
     "[2,6] = sqrt(705)/94*7\n"
     "[3,5] = -sqrt(705)/94*7\n"},
    {"1.3(i_l)", "rank one curve; EN exactly for l != 0",
     "dim 7 param l\n"
     "[1,2] = 4\n"
     "[1,3] = 5\n"
     "[1,4] = 6\n"
     "[1,6] = 7\n"
     "[2,3] = 6\n"
     "[2,4] = l*7\n"
     "[2,5] = 7\n"
     "[3,5] = 7\n",
     std::nullopt},
    {"2.2", "rank two; not written in a nice basis",
     "dim 7\n"
     "[1,2] = 5\n"
     "[1,3] = 6\n"
     "[1,4] = 2*7\n"
     "[2,3] = 4\n"
     "[2,6] = 7\n"
     "[3,5] = -7\n"
     "[3,6] = 7\n",
     std::nullopt},
    {"3.1(i_l)", "rank three curve in a nice basis",
     "dim 7 param l\n"
     "[1,2] = 4\n"
     "[1,3] = 5\n"
     "[1,6] = 7\n"
     "[2,3] = 6\n"
     "[2,5] = l*7\n"
     "[3,4] = (l - 1)*7\n",
     std::nullopt},
    {"abelian3", "abelian, dimension 3", "dim 3\n", std::nullopt},
    {"h3", "Heisenberg algebra", "dim 3\n[1,2] = 3\n", std::nullopt},
    {"h3+R", "Heisenberg plus a central line", "dim 4\n[1,2] = 3\n", std::nullopt},
    {"filiform4", "filiform, dimension 4", "dim 4\n[1,2] = 3\n[1,3] = 4\n", std::nullopt},
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

bool ExpectedRecord::applies(const std::optional<Rational>& lambda) const {
  if (condition.empty()) return true;
  if (!lambda) return false;
  auto neq = condition.find("!=");
  bool negate = neq != std::string::npos;
  auto rhs = condition.substr(negate ? neq + 2 : condition.find('=') + 1);
  bool member = false;
  for (const auto& v : split_commas(rhs)) member = member || parse_rational(v) == *lambda;
  return negate ? !member : member;
}

Rational ExpectedRecord::phi_scale() const {
  auto paren = phi.find('(');
  return paren == 0 ? Rational(1) : parse_rational(phi.substr(0, paren));
}

Grading ExpectedRecord::phi_profile() const {
  auto open = phi.find('(');
  Grading d;
  for (const auto& v : split_commas(phi.substr(open + 1, phi.size() - open - 2))) d.push_back(std::stol(v));
  return d;
}

std::vector<int> ExpectedRecord::dcs_values() const {
  std::vector<int> out;
  for (const auto& v : split_commas(dcs.substr(1, dcs.size() - 2)))
    if (!v.empty()) out.push_back(std::stoi(v));
  return out;
}

const std::vector<ExpectedRecord>& table_records() { return kRecords; }

const ExpectedRecord* expected_record(const std::string& name, const std::optional<Rational>& lambda) {
  for (const auto& r : kRecords)
    if (r.name == name && r.applies(lambda)) return &r;
  return nullptr;
}

LieLaw CatalogEntry::law() const { return parse_law(text); }

const std::vector<CatalogEntry>& bundled_catalog() { return kCatalog; }

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace nilrad
