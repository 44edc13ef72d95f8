#include <cctype>
#include <sstream>

#include "mmp3/error.hpp"
#include "mmp3/ring.hpp"

namespace mmp3 {

namespace {

// recursive-descent parser for the canonical polynomial text form:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := variable | field generator | uint ['/' uint] | '(' expr ')'
// errors carry the 1-based column of the offending character.
struct Parser {
  const RingPtr& R;
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& what, size_t at) const {
    fail(errc::parse_error,
         "column " + std::to_string(at + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  std::string read_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected a number", start);
    return s.substr(start, pos - start);
  }

  Poly parse_base() {
    char c = peek();
    size_t at = pos;
    if (c == '(') {
      ++pos;
      Poly p = parse_expr();
      if (!eat(')')) err("expected ')'", pos);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_uint();
      Rat q(num);
      if (peek() == '/') {
        ++pos;
        size_t dat = pos;
        std::string den = read_uint();
        Rat d(den);
        if (d == 0) err("zero denominator", dat);
        q /= d;
      }
      q.canonicalize();
      return Poly(R, Scalar(q, R->field()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int vi = R->var_index(name);
      if (vi >= 0) return Poly::var(R, vi);
      if (R->field() && R->field()->gen == name)
        return Poly(R, Scalar::generator(R->field()));
      err("unknown variable '" + name + "'", start);
    }
    if (c == '\0') err("unexpected end of input", pos);
    err(std::string("unexpected character '") + c + "'", at);
  }

  Poly parse_factor() {
    Poly p = parse_base();
    if (eat('^')) {
      size_t at = pos;
      std::string e = read_uint();
      if (e.size() > 6) err("exponent too large", at);
      p = p.pow(std::stoi(e));
    }
    return p;
  }

  Poly parse_term() {
    Poly p = parse_factor();
    while (eat('*')) p *= parse_factor();
    return p;
  }

  Poly parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly p = parse_term();
    if (neg) p = -p;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        p += parse_term();
      } else if (c == '-') {
        ++pos;
        p -= parse_term();
      } else {
        return p;
      }
    }
  }

  Poly run() {
    if (peek() == '\0') err("empty polynomial", 0);
    Poly p = parse_expr();
    if (peek() != '\0') err("trailing input", pos);
    return p;
  }
};

std::string mono_str(const Ring& R, const Mono& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < R.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << R.name(i);
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  return os.str();
}

}  // namespace

Poly parse_poly(const RingPtr& R, const std::string& text) {
  Parser p{R, text};
  return p.run();
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  const Ring& R = *p.ring();
  std::ostringstream os;
  for (int i = 0; i < p.nterms(); ++i) {
    const Scalar& c = p.coeff(i);
    std::string mono = mono_str(R, p.mono(i));
    bool neg = false;
    std::string cs;
    if (c.is_rational()) {
      Rat q = c.rational_part();
      neg = q < 0;
      Rat a = abs(q);
      if (a != 1 || mono.empty()) cs = a.get_str();
    } else {
      bool atomic = false;
      std::string direct = c.str(&atomic);
      if (atomic) {
        cs = direct;
      } else {
        bool neg_atomic = false;
        std::string flipped = (-c).str(&neg_atomic);
        if (neg_atomic) {
          neg = true;
          cs = flipped;
        } else {
          cs = "(" + direct + ")";
        }
      }
    }
    if (i == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (!cs.empty() && !mono.empty())
      os << cs << "*" << mono;
    else if (!cs.empty())
      os << cs;
    else
      os << mono;
  }
  return os.str();
}

}  // namespace mmp3
