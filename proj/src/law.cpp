#include "nilrad/law.hpp"

#include <algorithm>

#include "nilrad/error.hpp"

namespace nilrad {

std::string to_string(const Slot& s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + "," + std::to_string(s.k) + ")";
}

ParamCoeff ParamCoeff::affine(Rational a, Rational b) {
  ParamCoeff p;
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  return p;
}

LieLaw::LieLaw(int n, const std::vector<Bracket>& brackets, std::optional<std::string> param)
    : n_(n), param_(std::move(param)) {
  if (n < 1) throw Error("dimension must be positive");
  for (const auto& [slot, coeff] : brackets) {
    auto [i, j, k] = slot;
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
      throw Error("index out of range in bracket " + to_string(slot) + " for dimension " + std::to_string(n));
    if (i >= j) throw Error("indices must satisfy i < j in bracket " + to_string(slot));
    if (brackets_.count(slot)) throw Error("duplicate slot " + to_string(slot));
    if (coeff.uses_param() && !param_) throw Error("coefficient of " + to_string(slot) + " uses an undeclared parameter");
    if (coeff.is_zero()) continue;
    brackets_.emplace(slot, coeff);
  }
}

LieLaw LieLaw::rational(int n, const std::vector<Entry>& entries) {
  std::vector<Bracket> b;
  b.reserve(entries.size());
  for (const auto& e : entries) b.push_back({{e.i, e.j, e.k}, ParamCoeff(e.c)});
  return LieLaw(n, b);
}

bool LieLaw::uses_param() const {
  return std::any_of(brackets_.begin(), brackets_.end(), [](const auto& kv) { return kv.second.uses_param(); });
}

ParamCoeff LieLaw::param_coeff(int i, int j, int k) const {
  if (i == j) return {};
  bool flip = i > j;
  auto it = brackets_.find(flip ? Slot{j, i, k} : Slot{i, j, k});
  if (it == brackets_.end()) return {};
  return flip ? -it->second : it->second;
}

Rational LieLaw::coeff(int i, int j, int k) const {
  ParamCoeff p = param_coeff(i, j, k);
  if (p.uses_param()) throw Error("coefficient depends on the parameter; instantiate the law first");
  return p.constant();
}

std::vector<Slot> LieLaw::support() const {
  std::vector<Slot> s;
  s.reserve(brackets_.size());
  for (const auto& kv : brackets_) s.push_back(kv.first);
  return s;
}

StructureTensor::StructureTensor(const LieLaw& law) : n_(law.dim()), c_(static_cast<size_t>(n_ * n_ * n_)) {
  for (const auto& [slot, coeff] : law.brackets()) {
    if (coeff.uses_param()) throw Error("structure tensor requires an instantiated law");
    const int i = slot.i - 1, j = slot.j - 1, k = slot.k - 1;
    c_[(i * n_ + j) * n_ + k] = coeff.constant();
    c_[(j * n_ + i) * n_ + k] = -coeff.constant();
  }
}

RVector StructureTensor::bracket(const RVector& x, const RVector& y) const {
  RVector out(n_);
  for (int a = 0; a < n_; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < n_; ++b) {
      if (y[b] == 0 || a == b) continue;
      Rational w = x[a] * y[b];
      for (int k = 0; k < n_; ++k)
        if (at(a, b, k) != 0) out[k] += w * at(a, b, k);
    }
  }
  return out;
}

LieLaw instantiate(const LieLaw& law, const std::optional<Rational>& value, std::vector<std::string>* warnings) {
  if (!law.uses_param()) {
    if (value && warnings) warnings->push_back("parameter value supplied for a parameter-free law; ignored");
    std::vector<Bracket> b;
    for (const auto& [slot, coeff] : law.brackets()) b.push_back({slot, coeff});
    return LieLaw(law.dim(), b);
  }
  if (!value)
    throw Error("law uses parameter '" + law.param_name().value_or("?") + "' but no value was supplied");
  std::vector<Bracket> b;
  for (const auto& [slot, coeff] : law.brackets()) b.push_back({slot, ParamCoeff(coeff.at(*value))});
  return LieLaw(law.dim(), b);
}

std::vector<JacobiViolation> jacobi_check(const LieLaw& law) {
  const int n = law.dim();
  StructureTensor c(law);
  std::vector<JacobiViolation> out;
  // [[e_a,e_b],e_d] = sum_l c_ab^l c_ld^m e_m
  auto double_bracket = [&](int a, int b, int d, RVector& acc) {
    for (int l = 0; l < n; ++l) {
      const Rational& x = c.at(a, b, l);
      if (x == 0) continue;
      for (int m = 0; m < n; ++m)
        if (c.at(l, d, m) != 0) acc[m] += x * c.at(l, d, m);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        RVector r(n);
        double_bracket(i, j, k, r);
        double_bracket(j, k, i, r);
        double_bracket(k, i, j, r);
        if (!is_zero(r)) out.push_back({i + 1, j + 1, k + 1, std::move(r)});
      }
  return out;
}

namespace {

RVector unit(int n, int i) {
  RVector v(n);
  v[i] = 1;
  return v;
}

std::vector<RVector> bracket_span(const StructureTensor& c, const std::vector<RVector>& left,
                                  const std::vector<RVector>& right) {
  std::vector<RVector> products;
  for (const auto& x : left)
    for (const auto& y : right) {
      RVector z = c.bracket(x, y);
      if (!is_zero(z)) products.push_back(std::move(z));
    }
  if (products.empty()) return {};
  return row_space_basis(products, c.dim());
}

}  // namespace

SeriesDims descending_central_series(const LieLaw& law) {
  const int n = law.dim();
  StructureTensor c(law);
  std::vector<RVector> whole;
  for (int i = 0; i < n; ++i) whole.push_back(unit(n, i));
  SeriesDims dims{n};
  std::vector<RVector> current = whole;
  while (!current.empty()) {
    std::vector<RVector> next = bracket_span(c, whole, current);
    if (next.size() == current.size()) throw NotNilpotentError(static_cast<int>(next.size()));
    current = std::move(next);
    dims.push_back(static_cast<int>(current.size()));
  }
  return dims;
}

SeriesDims derived_series(const LieLaw& law) {
  descending_central_series(law);
  const int n = law.dim();
  StructureTensor c(law);
  std::vector<RVector> current;
  for (int i = 0; i < n; ++i) current.push_back(unit(n, i));
  SeriesDims dims{n};
  while (!current.empty()) {
    current = bracket_span(c, current, current);
    dims.push_back(static_cast<int>(current.size()));
  }
  return dims;
}

bool is_nilpotent(const LieLaw& law) {
  try {
    descending_central_series(law);
    return true;
  } catch (const NotNilpotentError&) {
    return false;
  }
}

LieLaw direct_sum(const LieLaw& a, const LieLaw& b) {
  if (a.uses_param() || b.uses_param()) throw Error("direct_sum requires instantiated laws");
  std::vector<Bracket> out;
  for (const auto& [slot, coeff] : a.brackets()) out.push_back({slot, coeff});
  const int shift = a.dim();
  for (const auto& [slot, coeff] : b.brackets())
    out.push_back({{slot.i + shift, slot.j + shift, slot.k + shift}, coeff});
  return LieLaw(a.dim() + b.dim(), out);
}

LieLaw abelian(int n) { return LieLaw(n, {}); }

LieLaw scaled(const LieLaw& law, const Rational& s) {
  std::vector<Bracket> out;
  for (const auto& [slot, coeff] : law.brackets())
    out.push_back({slot, ParamCoeff::affine(coeff.slope() * s, coeff.constant() * s)});
  return LieLaw(law.dim(), out, law.param_name());
}

LieLaw permuted(const LieLaw& law, const std::vector<int>& perm) {
  const int n = law.dim();
  if (static_cast<int>(perm.size()) != n) throw Error("permutation length differs from dimension");
  std::vector<bool> seen(n + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p]) throw Error("not a permutation of 1..n");
    seen[p] = true;
  }
  std::vector<Bracket> out;
  for (const auto& [slot, coeff] : law.brackets()) {
    int i = perm[slot.i - 1], j = perm[slot.j - 1], k = perm[slot.k - 1];
    if (i < j)
      out.push_back({{i, j, k}, coeff});
    else
      out.push_back({{j, i, k}, -coeff});
  }
  return LieLaw(n, out, law.param_name());
}

LieLaw without_slots(const LieLaw& law, const std::vector<Slot>& slots) {
  std::vector<Bracket> out;
  for (const auto& [slot, coeff] : law.brackets())
    if (std::find(slots.begin(), slots.end(), slot) == slots.end()) out.push_back({slot, coeff});
  return LieLaw(law.dim(), out, law.param_name());
}

}  // namespace nilrad
