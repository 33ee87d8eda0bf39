#include "nilrad/format.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace nilrad {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

// Recursive-descent reader over one line.
class LineReader {
 public:
  LineReader(std::string_view text, int line, const std::optional<std::string>& param)
      : s_(text), line_(line), param_(param) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, static_cast<int>(pos_) + 1, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    if (pos_ + w.size() < s_.size() && ident_char(s_[pos_ + w.size()])) return false;
    pos_ += w.size();
    return true;
  }

  std::string integer_text() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(s_.substr(start, pos_ - start));
  }
  int small_int() {
    std::string t = integer_text();
    if (t.size() > 6) fail("index too large");
    return std::stoi(t);
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected an identifier");
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // Unsigned number "p" or "p/q". `plain_int` reports whether it had no slash.
  Rational number(bool* plain_int = nullptr) {
    std::size_t at = pos_;
    std::string num = integer_text();
    bool slash = false;
    std::string den = "1";
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      slash = true;
      den = integer_text();
    }
    if (plain_int) *plain_int = !slash;
    Integer d(den, 10);
    if (d == 0) {
      pos_ = at;
      fail("zero denominator");
    }
    Rational q{Integer(num, 10), d};
    q.canonicalize();
    return q;
  }

  ParamCoeff param_ref() {
    std::size_t at = pos_;
    std::string id = identifier();
    if (!param_ || id != *param_) {
      pos_ = at;
      fail("unknown identifier '" + id + "'" + (param_ ? "" : " (declare it with 'param' in the dim line)"));
    }
    return ParamCoeff::affine(1, 0);
  }

  static ParamCoeff multiply(const ParamCoeff& a, const ParamCoeff& b, const LineReader& r) {
    if (a.uses_param() && b.uses_param()) r.fail("coefficient is not affine in the parameter");
    return ParamCoeff::affine(a.slope() * b.constant() + b.slope() * a.constant(), a.constant() * b.constant());
  }
  static ParamCoeff add(const ParamCoeff& a, const ParamCoeff& b) {
    return ParamCoeff::affine(a.slope() + b.slope(), a.constant() + b.constant());
  }

  // atom := NUMBER | IDENT | NUMBER '*' IDENT   (inside parentheses)
  ParamCoeff paren_atom() {
    if (ident_start(peek())) return param_ref();
    ParamCoeff c(number());
    std::size_t save = pos_;
    if (accept('*')) {
      if (!ident_start(peek())) {
        pos_ = save;
        fail("expected the parameter after '*'");
      }
      c = multiply(c, param_ref(), *this);
    }
    return c;
  }

  ParamCoeff paren_body() {
    ParamCoeff sum;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (accept('-'))
        sign = -1;
      else if (!first && !accept('+'))
        break;
      else if (first)
        accept('+');
      ParamCoeff a = paren_atom();
      sum = add(sum, sign < 0 ? -a : a);
      first = false;
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    return sum;
  }

  struct Term {
    ParamCoeff coeff;
    int target;
  };

  // term := '-'* factor ('*' factor)*, last factor a plain integer
  Term term() {
    int sign = 1;
    while (accept('-')) sign = -sign;
    ParamCoeff coeff(Rational(1));
    // A plain-integer factor that may turn out to be the target.
    bool has_pending = false;
    int pending = 0;
    for (;;) {
      if (has_pending) coeff = multiply(coeff, ParamCoeff(Rational(pending)), *this);
      has_pending = false;
      char c = peek();
      if (c == '(') {
        ++pos_;
        ParamCoeff inner = paren_body();
        expect(')');
        coeff = multiply(coeff, inner, *this);
      } else if (ident_start(c)) {
        coeff = multiply(coeff, param_ref(), *this);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        bool plain = false;
        Rational q = number(&plain);
        if (plain && q.get_num().fits_sint_p()) {
          has_pending = true;
          pending = static_cast<int>(q.get_num().get_si());
        }
        else
          coeff = multiply(coeff, ParamCoeff(q), *this);
      } else {
        fail("expected a coefficient or target index");
      }
      if (!accept('*')) break;
    }
    if (!has_pending) fail("term must end with a target index");
    return {sign < 0 ? -coeff : coeff, pending};
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  const std::optional<std::string>& param_;
};

std::string strip_comment(std::string_view line) {
  auto h = line.find('#');
  return std::string(line.substr(0, h));
}

}  // namespace

LieLaw parse_law(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::optional<int> n;
  std::optional<std::string> param;
  std::vector<Bracket> brackets;
  std::vector<int> bracket_lines;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    LineReader r(line, lineno, param);
    if (r.at_end()) continue;
    if (!n) {
      if (!r.accept_word("dim")) r.fail("file must start with 'dim N'");
      std::size_t at = r.pos();
      int d = r.small_int();
      if (d == 0) {
        r.set_pos(at);
        r.fail("zero dimension");
      }
      n = d;
      if (r.accept_word("param")) param = r.identifier();
      if (!r.at_end()) r.fail("unexpected text after header");
      continue;
    }
    r.expect('[');
    std::size_t at_i = r.pos();
    int i = r.small_int();
    r.expect(',');
    int j = r.small_int();
    r.expect(']');
    r.expect('=');
    if (i < 1 || j < 1 || i > *n || j > *n) {
      r.set_pos(at_i);
      r.fail("index out of range for dimension " + std::to_string(*n));
    }
    if (i >= j) {
      r.set_pos(at_i);
      r.fail("indices must satisfy i < j");
    }
    bool first = true;
    for (;;) {
      int sign = 1;
      if (!first) {
        if (r.accept('+'))
          sign = 1;
        else if (r.accept('-'))
          sign = -1;
        else
          r.fail("expected '+' or end of line");
      }
      std::size_t at_term = r.pos();
      auto t = r.term();
      if (t.target < 1 || t.target > *n) {
        r.set_pos(at_term);
        r.fail("target index " + std::to_string(t.target) + " out of range");
      }
      Slot s{i, j, t.target};
      for (std::size_t b = 0; b < brackets.size(); ++b)
        if (brackets[b].slot == s) {
          r.set_pos(at_term);
          r.fail("duplicate slot " + to_string(s) + " (first given on line " + std::to_string(bracket_lines[b]) + ")");
        }
      brackets.push_back({s, sign < 0 ? -t.coeff : t.coeff});
      bracket_lines.push_back(lineno);
      first = false;
      if (r.at_end()) break;
    }
  }
  if (!n) throw ParseError(lineno + 1, 1, "missing 'dim N' header");
  return LieLaw(*n, brackets, param);
}

namespace {

std::string coeff_text(const ParamCoeff& c, const std::string& param) {
  const Rational& a = c.slope();
  const Rational& b = c.constant();
  if (a == 0) return to_string(b);
  std::string lin = a == 1 ? param : a == -1 ? "-" + param : to_string(a) + "*" + param;
  if (b == 0) return lin;
  return "(" + lin + (b < 0 ? " - " : " + ") + to_string(abs(b)) + ")";
}

std::string term_text(const ParamCoeff& c, int k, const std::string& param) {
  std::string ks = std::to_string(k);
  if (!c.uses_param()) {
    if (c.constant() == 1) return ks;
    if (c.constant() == -1) return "-" + ks;
  }
  return coeff_text(c, param) + "*" + ks;
}

}  // namespace

std::string serialize(const LieLaw& law) {
  std::ostringstream out;
  const std::string param = law.param_name().value_or("L");
  out << "dim " << law.dim();
  if (law.param_name()) out << " param " << *law.param_name();
  out << "\n";
  const auto& br = law.brackets();
  for (auto it = br.begin(); it != br.end();) {
    const int i = it->first.i, j = it->first.j;
    out << "[" << i << "," << j << "] = ";
    bool first = true;
    for (; it != br.end() && it->first.i == i && it->first.j == j; ++it) {
      std::string t = term_text(it->second, it->first.k, param);
      if (first)
        out << t;
      else if (t[0] == '-')
        out << " - " << t.substr(1);
      else
        out << " + " << t;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nilrad
