#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mahler/laurent.hpp"

namespace mahler {

namespace {

enum class Tok { Number, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  double number = 0;
  int var = -1;
  std::size_t pos = 0;
};

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& msg) {
  throw UsageError("cannot parse polynomial \"" + std::string(text) + "\" at offset " +
                   std::to_string(pos) + ": " + msg);
}

std::vector<Token> tokenize(std::string_view s, bool& indexed, bool& lettered) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Token t{Tok::End};
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      auto digit = [&](std::size_t j) {
        return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]));
      };
      std::size_t j = i;
      while (digit(j)) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        while (digit(j)) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (digit(k)) {
          while (digit(k)) ++k;
          j = k;
        }
      }
      std::string buf(s.substr(i, j - i));
      if (buf == ".") fail(s, i, "bad number");
      t.kind = Tok::Number;
      t.number = std::strtod(buf.c_str(), nullptr);
      i = j;
      out.push_back(t);
      continue;
    }
    if (ch == 'i') {
      t.kind = Tok::Imag;
      ++i;
    } else if (ch == 'x' || ch == 'y' || ch == 'z' || ch == 'w') {
      t.kind = Tok::Var;
      if (ch == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        std::size_t j = i + 1;
        int idx = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          idx = idx * 10 + (s[j] - '0');
          if (idx > kMaxVars) fail(s, i, "variable index too large");
          ++j;
        }
        if (idx < 1) fail(s, i, "variables are numbered from x1");
        t.var = idx - 1;
        indexed = true;
        i = j;
      } else {
        t.var = ch == 'x' ? 0 : ch == 'y' ? 1 : ch == 'z' ? 2 : 3;
        lettered = true;
        ++i;
      }
    } else {
      switch (ch) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        default: fail(s, i, std::string("unexpected character '") + ch + "'");
      }
      ++i;
    }
    out.push_back(t);
  }
  Token end{Tok::End};
  end.pos = s.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<Token> toks, int n)
      : text_(text), toks_(std::move(toks)), n_(n) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    if (peek().kind != Tok::End) fail(text_, peek().pos, "trailing input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_++]; }
  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++k_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        acc = acc + term();
      } else if (accept(Tok::Minus)) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Number || k == Tok::Imag || k == Tok::Var || k == Tok::LParen;
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    for (;;) {
      if (accept(Tok::Star)) {
        acc = acc * unary();
      } else if (peek().kind == Tok::Slash) {
        std::size_t pos = next().pos;
        LaurentPoly d = unary();
        acc = acc * invert_monomial(d, pos);
      } else if (starts_atom(peek().kind)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly unary() {
    if (accept(Tok::Minus)) return -unary();
    if (accept(Tok::Plus)) return unary();
    return power();
  }

  int signed_int() {
    bool neg = false;
    bool paren = accept(Tok::LParen);
    while (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      if (next().kind == Tok::Minus) neg = !neg;
    }
    const Token& t = next();
    if (t.kind != Tok::Number || t.number != std::floor(t.number) ||
        std::abs(t.number) > kMaxDegree) {
      fail(text_, t.pos, "exponent must be an integer of magnitude at most " +
                             std::to_string(kMaxDegree));
    }
    if (paren && !accept(Tok::RParen)) fail(text_, peek().pos, "expected ')'");
    int v = static_cast<int>(t.number);
    return neg ? -v : v;
  }

  LaurentPoly power() {
    std::size_t pos = peek().pos;
    LaurentPoly base = atom();
    if (!accept(Tok::Caret)) return base;
    int e = signed_int();
    if (e >= 0) return pow(base, e);
    return pow(invert_monomial(base, pos), -e);
  }

  LaurentPoly invert_monomial(const LaurentPoly& p, std::size_t pos) {
    if (p.size() != 1) fail(text_, pos, "only monomials can be inverted");
    const auto& [e, c] = p.terms().front();
    Exponent f{};
    for (int i = 0; i < n_; ++i) f[i] = detail::checked_exponent(-long{e[i]});
    return LaurentPoly::from_terms(n_, {{f, Complex{1.0, 0.0} / c}});
  }

  LaurentPoly atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: return LaurentPoly::constant(n_, Complex{t.number, 0.0});
      case Tok::Imag: return LaurentPoly::constant(n_, Complex{0.0, 1.0});
      case Tok::Var: return LaurentPoly::variable(n_, t.var, 1);
      case Tok::LParen: {
        LaurentPoly inner = expr();
        if (!accept(Tok::RParen)) fail(text_, peek().pos, "expected ')'");
        return inner;
      }
      default: fail(text_, t.pos, "expected a number, variable, 'i' or '('");
    }
  }

  std::string_view text_;
  std::vector<Token> toks_;
  int n_;
  std::size_t k_ = 0;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string var_name(int i, int n) {
  if (n <= 4) return std::string(1, "xyzw"[i]);
  return "x" + std::to_string(i + 1);
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, int n_vars) {
  bool indexed = false, lettered = false;
  auto toks = tokenize(text, indexed, lettered);
  if (indexed && lettered) {
    throw UsageError("cannot mix x1..xn with x, y, z, w in \"" + std::string(text) + "\"");
  }
  int needed = 1;
  for (const auto& t : toks) {
    if (t.kind == Tok::Var) needed = std::max(needed, t.var + 1);
  }
  if (n_vars == 0) n_vars = needed;
  if (n_vars < needed) {
    throw UsageError("polynomial \"" + std::string(text) + "\" uses " + std::to_string(needed) +
                     " variables, expected " + std::to_string(n_vars));
  }
  if (toks.size() == 1) throw UsageError("empty polynomial text");
  return Parser(text, std::move(toks), n_vars).parse();
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const int n = p.n_vars();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i, n);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.imag() == 0.0) {
      double re = c.real();
      negative = std::signbit(re);
      double mag = std::abs(re);
      if (!(mag == 1.0 && !mono.empty())) coeff = fmt_double(mag);
    } else if (c.real() == 0.0) {
      negative = std::signbit(c.imag());
      coeff = fmt_double(std::abs(c.imag())) + "*i";
    } else {
      coeff = "(" + fmt_double(c.real()) + (std::signbit(c.imag()) ? " - " : " + ") +
              fmt_double(std::abs(c.imag())) + "*i)";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

}  // namespace mahler
