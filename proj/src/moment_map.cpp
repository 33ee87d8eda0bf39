#include "nilrad/moment_map.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "nilrad/derivations.hpp"
#include "nilrad/error.hpp"

namespace nilrad {

namespace {

template <class T>
std::vector<T> moment_dense(int n, const std::vector<T>& c) {
  auto at = [&](int i, int j, int k) -> const T& { return c[static_cast<std::size_t>((i * n + j) * n + k)]; };
  std::vector<T> m(static_cast<std::size_t>(n * n), T(0));
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      T v(0);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (at(r, j, k) != 0 && at(s, j, k) != 0) v -= 2 * at(r, j, k) * at(s, j, k);
          if (at(j, k, r) != 0 && at(j, k, s) != 0) v += at(j, k, r) * at(j, k, s);
        }
      m[static_cast<std::size_t>(r * n + s)] = v;
      m[static_cast<std::size_t>(s * n + r)] = v;
    }
  return m;
}

std::vector<Rational> dense(const LieLaw& law) {
  const int n = law.dim();
  StructureTensor t(law);
  std::vector<Rational> c(static_cast<std::size_t>(n * n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[static_cast<std::size_t>((i * n + j) * n + k)] = t.at(i, j, k);
  return c;
}

void require_nonzero(const LieLaw& law) {
  if (law.is_abelian()) throw Error("moment map undefined for the zero law");
}

// Components of L(X) indexed by (i<j, k): the Leibniz defect of X on [e_i, e_j].
std::vector<double> leibniz_apply(int n, const std::vector<double>& c, const std::vector<double>& x) {
  auto at = [&](int i, int j, int k) { return c[static_cast<std::size_t>((i * n + j) * n + k)]; };
  auto X = [&](int r, int s) { return x[static_cast<std::size_t>(r * n + s)]; };
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = 0;
        for (int l = 0; l < n; ++l) v += at(i, j, l) * X(k, l);
        for (int p = 0; p < n; ++p) v -= X(p, i) * at(p, j, k) + X(p, j) * at(i, p, k);
        out.push_back(v);
      }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

NumericLaw::NumericLaw(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw Error("dimension must be positive");
  for (const auto& e : entries_) {
    const auto& s = e.slot;
    if (s.i < 1 || s.j < 1 || s.k < 1 || s.i > n || s.j > n || s.k > n)
      throw Error("index out of range in bracket " + to_string(s));
    if (s.i >= s.j) throw Error("indices must satisfy i < j in bracket " + to_string(s));
  }
  for (std::size_t a = 0; a < entries_.size(); ++a)
    for (std::size_t b = a + 1; b < entries_.size(); ++b)
      if (entries_[a].slot == entries_[b].slot) throw Error("duplicate slot " + to_string(entries_[a].slot));
}

double NumericLaw::parse_coefficient(std::string_view token) {
  std::string t = trim(token);
  bool negative = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    negative = t[0] == '-';
    t = trim(std::string_view(t).substr(1));
  }
  double value;
  if (t.rfind("sqrt(", 0) == 0) {
    auto close = t.find(')');
    if (close == std::string::npos) throw Error("unterminated sqrt( in coefficient '" + std::string(token) + "'");
    Rational q = parse_rational(trim(std::string_view(t).substr(5, close - 5)));
    std::string rest = trim(std::string_view(t).substr(close + 1));
    if (!rest.empty()) {
      // sqrt(p)/q form
      if (rest[0] != '/') throw Error("malformed coefficient '" + std::string(token) + "'");
      Rational divisor = parse_rational(trim(std::string_view(rest).substr(1)));
      if (divisor == 0) throw Error("zero divisor in '" + std::string(token) + "'");
      q /= divisor * divisor;
    }
    if (q < 0) throw Error("sqrt of a negative rational in '" + std::string(token) + "'");
    value = std::sqrt(to_double(q));
  } else {
    value = to_double(parse_rational(t));
  }
  return negative ? -value : value;
}

NumericLaw NumericLaw::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0, lineno = 0;
  std::vector<Entry> entries;
  auto fail = [&](const std::string& msg) { throw Error("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("dim", 0) == 0) {
      try {
        n = std::stoi(line.substr(3));
      } catch (const std::exception&) {
        fail("malformed dim line");
      }
      continue;
    }
    if (line[0] != '[') fail("expected '[i,j] = ...'");
    auto close = line.find(']');
    auto eq = line.find('=');
    if (close == std::string::npos || eq == std::string::npos || eq < close) fail("expected '[i,j] = ...'");
    int i = 0, j = 0;
    if (std::sscanf(line.substr(1, close - 1).c_str(), "%d , %d", &i, &j) != 2) fail("malformed index pair");
    // Split the right side into signed terms at top-level '+' and '-'.
    std::string rhs = line.substr(eq + 1);
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char ch : rhs) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && !trim(cur).empty() && trim(cur).back() != '*') {
        terms.push_back(cur);
        cur.clear();
        if (ch == '+') continue;
      }
      cur += ch;
    }
    terms.push_back(cur);
    for (const auto& raw : terms) {
      std::string term = trim(raw);
      if (term.empty()) fail("empty term");
      auto star = term.rfind('*');
      std::string coef = star == std::string::npos ? "1" : term.substr(0, star);
      std::string target = trim(star == std::string::npos ? term : term.substr(star + 1));
      if (star == std::string::npos && (target[0] == '-' || target[0] == '+')) {
        coef = target[0] == '-' ? "-1" : "1";
        target = trim(target.substr(1));
      }
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(target, &used);
        if (used != target.size()) fail("malformed target index '" + target + "'");
      } catch (const std::invalid_argument&) {
        fail("malformed target index '" + target + "'");
      }
      double value = parse_coefficient(coef);
      if (value != 0) entries.push_back({{i, j, k}, value, trim(coef)});
    }
  }
  if (n == 0)
    for (const auto& e : entries) n = std::max({n, e.slot.i, e.slot.j, e.slot.k});
  return NumericLaw(n, std::move(entries));
}

std::vector<double> NumericLaw::tensor() const {
  std::vector<double> c(static_cast<std::size_t>(n_ * n_ * n_), 0.0);
  for (const auto& e : entries_) {
    const int i = e.slot.i - 1, j = e.slot.j - 1, k = e.slot.k - 1;
    c[static_cast<std::size_t>((i * n_ + j) * n_ + k)] += e.value;
    c[static_cast<std::size_t>((j * n_ + i) * n_ + k)] -= e.value;
  }
  return c;
}

LieLaw NumericLaw::support_law() const {
  std::vector<LieLaw::Entry> e;
  for (const auto& x : entries_) e.push_back({x.slot.i, x.slot.j, x.slot.k, 1});
  return LieLaw::rational(n_, e);
}

Rational norm_sq(const LieLaw& law) {
  Rational s = 0;
  for (const auto& [slot, coeff] : law.brackets()) {
    if (coeff.uses_param()) throw Error("norm requires an instantiated law");
    s += coeff.constant() * coeff.constant();
  }
  return 2 * s;
}

double norm_sq(const NumericLaw& law) {
  double s = 0;
  for (const auto& e : law.entries()) s += e.value * e.value;
  return 2 * s;
}

RMatrix moment_map(const LieLaw& law) {
  require_nonzero(law);
  const auto n = static_cast<std::size_t>(law.dim());
  auto m = moment_dense<Rational>(law.dim(), dense(law));
  RMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) out(r, s) = m[r * n + s];
  return out;
}

std::vector<double> moment_map(const NumericLaw& law) {
  if (law.entries().empty()) throw Error("moment map undefined for the zero law");
  return moment_dense<double>(law.dim(), law.tensor());
}

RMatrix normalized_moment(const LieLaw& law) {
  RMatrix m = moment_map(law);
  return m * (Rational(1) / norm_sq(law));
}

Rational functional_F(const LieLaw& law) {
  RMatrix m = normalized_moment(law);
  return frobenius(m, m);
}

double functional_F(const NumericLaw& law) {
  auto m = moment_map(law);
  double ns = norm_sq(law), f = 0;
  for (double x : m) f += (x / ns) * (x / ns);
  return f;
}

Rational pairing(const LieLaw& law, const RMatrix& alpha) {
  const auto n = static_cast<std::size_t>(law.dim());
  if (alpha.rows() != n || alpha.cols() != n) throw Error("pairing: dimension mismatch");
  return (moment_map(law) * alpha).trace();
}

double jacobi_residual(const NumericLaw& law) {
  const int n = law.dim();
  auto c = law.tensor();
  auto at = [&](int i, int j, int k) { return c[static_cast<std::size_t>((i * n + j) * n + k)]; };
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double v = 0;
          for (int l = 0; l < n; ++l) v += at(i, j, l) * at(l, k, m) + at(j, k, l) * at(l, i, m) + at(k, i, l) * at(l, j, m);
          worst = std::max(worst, std::abs(v));
        }
  return worst;
}

SolitonVerdict verify_soliton(const LieLaw& law, double tol) {
  (void)tol;
  require_nonzero(law);
  const auto n = static_cast<std::size_t>(law.dim());
  RMatrix m = moment_map(law);
  std::vector<RMatrix> span{RMatrix::identity(n)};
  for (auto& d : derivation_space(law).basis) span.push_back(std::move(d));
  const std::size_t k = span.size();
  RMatrix gram(k, k);
  RVector rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = frobenius(span[a], span[b]);
    rhs[a] = frobenius(span[a], m);
  }
  auto x = solve_unique(gram, rhs);
  if (!x) throw Error("derivation basis and identity are linearly dependent");
  RMatrix proj(n, n);
  for (std::size_t a = 0; a < k; ++a) proj = proj + span[a] * (*x)[a];
  RMatrix rest = m - proj;

  SolitonVerdict v;
  v.c_exact = (*x)[0];
  v.c = to_double((*x)[0]);
  v.derivation_exact = m - RMatrix::identity(n) * (*x)[0];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) v.derivation.push_back(to_double(v.derivation_exact(r, s)));
  v.residual = std::sqrt(to_double(frobenius(rest, rest)));
  v.soliton = rest.is_zero() && *v.c_exact < 0;
  return v;
}

SolitonVerdict verify_soliton(const NumericLaw& law, double tol) {
  if (law.entries().empty()) throw Error("soliton test undefined for the zero law");
  const double jac = jacobi_residual(law);
  if (jac > tol) throw Error("numeric Jacobi residual " + std::to_string(jac) + " exceeds tolerance");
  const int n = law.dim();
  auto c = law.tensor();
  auto m = moment_map(law);
  std::vector<double> id(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
  auto lm = leibniz_apply(n, c, m);
  auto li = leibniz_apply(n, c, id);
  double num = 0, den = 0;
  for (std::size_t a = 0; a < lm.size(); ++a) {
    num += lm[a] * li[a];
    den += li[a] * li[a];
  }
  if (den == 0) throw Error("identity is a derivation: zero law");
  SolitonVerdict v;
  v.c = num / den;
  double r2 = 0;
  for (std::size_t a = 0; a < lm.size(); ++a) r2 += (lm[a] - v.c * li[a]) * (lm[a] - v.c * li[a]);
  v.residual = std::sqrt(r2);
  v.derivation = m;
  for (int i = 0; i < n; ++i) v.derivation[static_cast<std::size_t>(i * n + i)] -= v.c;
  v.soliton = v.residual <= tol && v.c < 0;
  return v;
}

namespace {

// Symbolic structure constant: +-a_var, var 0 meaning zero.
struct Sym {
  int var = 0;
  int sign = 0;
};

void add_product(Quadratic& q, const Sym& x, const Sym& y, int factor) {
  if (x.var == 0 || y.var == 0) return;
  auto key = std::minmax(x.var, y.var);
  Rational& slot = q[{key.first, key.second}];
  slot += factor * x.sign * y.sign;
  if (slot == 0) q.erase({key.first, key.second});
}

std::string quadratic_text(const Quadratic& q) {
  if (q.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [vars, coef] : q) {
    Rational a = abs(coef);
    if (first)
      s += coef < 0 ? "-" : "";
    else
      s += coef < 0 ? " - " : " + ";
    s += to_string(a) + "*a" + std::to_string(vars.first) + "*a" + std::to_string(vars.second);
    first = false;
  }
  return s;
}

}  // namespace

SolitonSystem soliton_system(const Grading& d) {
  SolitonSystem sys;
  sys.grading = d;
  sys.slots = graded_slots(d);
  if (sys.slots.empty()) throw Error("grading admits no bracket slots");
  TargetMomentMap target = target_moment_map(d);

  const int n = static_cast<int>(d.size());
  std::vector<Sym> c(static_cast<std::size_t>(n * n * n));
  auto at = [&](int i, int j, int k) -> Sym& { return c[static_cast<std::size_t>((i * n + j) * n + k)]; };
  for (std::size_t s = 0; s < sys.slots.size(); ++s) {
    const auto& sl = sys.slots[s];
    at(sl.i - 1, sl.j - 1, sl.k - 1) = {static_cast<int>(s + 1), 1};
    at(sl.j - 1, sl.i - 1, sl.k - 1) = {static_cast<int>(s + 1), -1};
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Quadratic q;
          for (int l = 0; l < n; ++l) {
            add_product(q, at(i, j, l), at(l, k, m), 1);
            add_product(q, at(j, k, l), at(l, i, m), 1);
            add_product(q, at(k, i, l), at(l, j, m), 1);
          }
          if (!q.empty()) sys.jacobi.push_back(std::move(q));
        }

  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      Quadratic q;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          add_product(q, at(r, j, k), at(s, j, k), -2);
          add_product(q, at(j, k, r), at(j, k, s), 1);
        }
      if (q.empty()) continue;
      Rational rhs = r == s ? target.diagonal[static_cast<std::size_t>(r)] : Rational(0);
      sys.moment.push_back({r + 1, s + 1, std::move(q), rhs});
    }
  return sys;
}

std::string SolitonSystem::to_text() const {
  std::ostringstream out;
  out << "# type ";
  for (std::size_t i = 0; i < grading.size(); ++i) out << (i ? "," : "") << grading[i];
  out << "\n# variables\n";
  for (std::size_t s = 0; s < slots.size(); ++s) out << "# a" << s + 1 << " = " << to_string(slots[s]) << "\n";
  out << "# jacobi\n";
  for (const auto& q : jacobi) out << quadratic_text(q) << " = 0\n";
  out << "# moment\n";
  for (const auto& e : moment) out << quadratic_text(e.lhs) << " = " << to_string(e.rhs) << "\n";
  return out.str();
}

std::string emit_soliton_system(const Grading& d) { return soliton_system(d).to_text(); }

}  // namespace nilrad
