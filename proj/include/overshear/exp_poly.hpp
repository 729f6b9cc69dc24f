#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "overshear/gaussian_rational.hpp"
#include "overshear/poly.hpp"

namespace overshear {

// A finite sum  sum_i p_i(x) * exp(q_i(x))  with Gaussian-rational polynomial
// coefficients p_i and pairwise distinct exponents q_i satisfying q_i(0) = 0.
//
// Terms are stored keyed by exponent in exponent_order(), and zero
// coefficients are never stored. Because exp(q) for distinct q with q(0) = 0
// are linearly independent over the polynomial ring, two ExpPoly values are
// equal as functions exactly when they are equal as objects.
class ExpPoly {
 public:
  using Terms = std::map<Poly, Poly, ExponentLess>;

  ExpPoly() = default;
  ExpPoly(Poly p);                           // NOLINT(google-explicit-constructor)
  ExpPoly(long c) : ExpPoly(Poly(c)) {}      // NOLINT
  ExpPoly(GaussianRational c) : ExpPoly(Poly(std::move(c))) {}  // NOLINT

  // coeff * exp(exponent). Throws ConstantTermError if exponent(0) != 0.
  static ExpPoly term(Poly coeff, Poly exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // The polynomial part when there are no exponential terms.
  std::optional<Poly> as_poly() const;

  // Value of the function at x = 0, i.e. sum_i p_i(0).
  GaussianRational value_at_zero() const;

  // Validator walk: every exponent vanishes at 0 and every coefficient is
  // nonzero.
  bool is_canonical() const;

  ExpPoly scaled(const GaussianRational& c) const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(const Poly& exponent, const Poly& coeff);

  Terms terms_;
};

// exp(q). Throws ConstantTermError if q(0) != 0.
ExpPoly exp_of(const Poly& q);

// Term rule (p e^q)' = (p' + p q') e^q.
ExpPoly derivative(const ExpPoly& a);

// Double-precision value; overflow surfaces as an infinite or NaN component.
std::complex<double> eval(const ExpPoly& a, std::complex<double> x);

// Exact coefficient-wise division. Throws NotDivisible when any coefficient
// leaves a remainder, std::domain_error when d is zero.
ExpPoly div_by_poly(const ExpPoly& a, const Poly& d);

// Textual form, see parse_exp_poly() for the grammar. Deterministic and
// re-parseable.
std::string to_string(const ExpPoly& a);
std::string to_string(const Poly& p, char var = 'x');

// Grammar (whitespace insignificant):
//   expr      := [sign] term { sign term }
//   term      := polyfactor [ "*" "exp" "(" poly ")" ] | "exp" "(" poly ")"
//   polyfactor:= "(" poly ")" | monomial
//   poly      := [sign] monomial { sign monomial }
//   monomial  := coeff [ "*" var [ "^" uint ] ] | var [ "^" uint ]
//   coeff     := rational [ ("+"|"-") rational "i" ]
//   rational  := uint [ "/" uint ]
// Throws ParseError carrying the offending offset.
ExpPoly parse_exp_poly(std::string_view text);
Poly parse_poly(std::string_view text, char var = 'x');

std::ostream& operator<<(std::ostream& os, const ExpPoly& a);

}  // namespace overshear
