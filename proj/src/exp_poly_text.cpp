#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "overshear/error.hpp"
#include "overshear/exp_poly.hpp"

namespace overshear {
namespace {

bool is_negative(const GaussianRational& c) {
  return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

// Coefficient known to be "positive" in the sense of !is_negative().
std::string coeff_text(const GaussianRational& c) {
  if (c.is_real()) return c.re().get_str();
  std::string out = c.re().get_str();
  out += sgn(c.im()) > 0 ? '+' : '-';
  out += mpq_class(abs(c.im())).get_str();
  out += 'i';
  return out;
}

struct Piece {
  bool negative;
  std::string body;
};

void poly_pieces(const Poly& p, char var, std::vector<Piece>& out) {
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    if (cs[k].is_zero()) continue;
    const bool neg = is_negative(cs[k]);
    const GaussianRational c = neg ? -cs[k] : cs[k];
    std::string body;
    if (k == 0) {
      body = coeff_text(c);
    } else {
      if (!c.is_one()) body = coeff_text(c) + "*";
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    out.push_back({neg, std::move(body)});
  }
}

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) out += '-';
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpPoly expr() {
    skip_ws();
    if (at_end()) fail("empty expression");
    ExpPoly out;
    bool neg = sign_opt();
    out += signed_term(neg);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (!is_sign(peek())) fail("expected '+' or '-'");
      neg = sign_opt();
      out += signed_term(neg);
    }
    return out;
  }

  Poly whole_poly(char var) {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly p = poly(var);
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what,
                         ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, pos_, what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_sign(char c) { return c == '+' || c == '-'; }
  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword_ahead(std::string_view kw) {
    skip_ws();
    return text_.substr(pos_, kw.size()) == kw;
  }

  // Consumes an optional sign; true when it was '-'.
  bool sign_opt() {
    skip_ws();
    if (is_sign(peek())) return text_[pos_++] == '-';
    return false;
  }

  ExpPoly signed_term(bool negative) {
    ExpPoly t = term();
    return negative ? -t : t;
  }

  ExpPoly term() {
    skip_ws();
    if (keyword_ahead("exp")) return exp_factor(Poly(1));
    Poly factor;
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      factor = poly('x');
      expect(')');
    } else {
      factor = monomial('x');
    }
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      if (!keyword_ahead("exp")) fail("expected 'exp'");
      return exp_factor(std::move(factor));
    }
    return ExpPoly(std::move(factor));
  }

  ExpPoly exp_factor(Poly coeff) {
    pos_ += 3;  // "exp"
    expect('(');
    skip_ws();
    const std::size_t start = pos_;
    Poly q = poly('x');
    expect(')');
    if (!q.constant_term().is_zero())
      throw ParseError(ParseError::Kind::ConstantTermInExponent, start,
                       "exponent has a nonzero constant term");
    return ExpPoly::term(std::move(coeff), std::move(q));
  }

  Poly poly(char var) {
    bool neg = sign_opt();
    Poly out = neg ? -monomial(var) : monomial(var);
    for (;;) {
      skip_ws();
      if (!is_sign(peek())) break;
      neg = sign_opt();
      Poly m = monomial(var);
      out += neg ? -m : m;
    }
    return out;
  }

  Poly monomial(char var) {
    skip_ws();
    if (peek() == var) {
      ++pos_;
      return Poly::monomial(1, power());
    }
    if (!is_digit(peek())) fail("expected a monomial");
    GaussianRational c = coeff();
    const std::size_t save = pos_;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() == var) {
        ++pos_;
        return Poly::monomial(std::move(c), power());
      }
    }
    pos_ = save;
    return Poly(std::move(c));
  }

  std::size_t power() {
    const std::size_t save = pos_;
    skip_ws();
    if (peek() != '^') {
      pos_ = save;
      return 1;
    }
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    mpz_class n = uint_literal();
    if (n > 1000000) {
      pos_ = start;
      fail("exponent too large");
    }
    return n.get_ui();
  }

  GaussianRational coeff() {
    mpq_class re = rational();
    const std::size_t save = pos_;
    skip_ws();
    if (is_sign(peek())) {
      const bool neg = text_[pos_++] == '-';
      skip_ws();
      if (is_digit(peek())) {
        mpq_class im = rational();
        skip_ws();
        if (peek() == 'i') {
          ++pos_;
          return {re, neg ? mpq_class(-im) : im};
        }
      }
    }
    pos_ = save;
    return {re};
  }

  mpq_class rational() {
    mpz_class num = uint_literal();
    const std::size_t save = pos_;
    skip_ws();
    if (peek() != '/') {
      pos_ = save;
      return mpq_class(num);
    }
    ++pos_;
    skip_ws();
    const std::size_t den_pos = pos_;
    mpz_class den = uint_literal();
    if (den == 0) {
      pos_ = den_pos;
      fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  mpz_class uint_literal() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (pos_ == start) fail("expected an unsigned integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Poly& p, char var) {
  std::vector<Piece> pieces;
  poly_pieces(p, var, pieces);
  return join(pieces);
}

std::string to_string(const ExpPoly& a) {
  std::vector<Piece> pieces;
  for (const auto& [q, p] : a.terms()) {
    if (q.is_zero()) {
      poly_pieces(p, 'x', pieces);
      continue;
    }
    const std::string e = "exp(" + to_string(q) + ")";
    if (p.is_constant() && p.leading().is_one()) {
      pieces.push_back({false, e});
    } else if (p.is_constant() && (-p.leading()).is_one()) {
      pieces.push_back({true, e});
    } else {
      pieces.push_back({false, "(" + to_string(p) + ")*" + e});
    }
  }
  return join(pieces);
}

ExpPoly parse_exp_poly(std::string_view text) { return Parser(text).expr(); }

Poly parse_poly(std::string_view text, char var) {
  return Parser(text).whole_poly(var);
}

}  // namespace overshear
