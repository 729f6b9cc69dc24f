#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "overshear/gaussian_rational.hpp"

namespace overshear {

// Dense univariate polynomial over Q(i). coeffs()[k] is the coefficient of
// the k-th power; the leading coefficient is nonzero, so the zero polynomial
// has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussianRational(c)) {}  // NOLINT
  explicit Poly(std::vector<GaussianRational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly monomial(GaussianRational c, std::size_t power);
  static Poly x() { return monomial(1, 1); }

  const std::vector<GaussianRational>& coeffs() const noexcept {
    return coeffs_;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^k, zero past the degree.
  GaussianRational coeff(std::size_t k) const;
  const GaussianRational& leading() const { return coeffs_.back(); }
  GaussianRational constant_term() const { return coeff(0); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  Poly derivative() const;
  Poly monic() const;
  Poly scaled(const GaussianRational& c) const;
  Poly shifted(std::size_t power) const;  // multiply by x^power

  std::complex<double> eval(std::complex<double> x) const;
  GaussianRational eval(const GaussianRational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder with deg(remainder) < deg(divisor). Throws
// std::domain_error for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic greatest common divisor by the Euclidean algorithm. gcd(0, 0) throws
// std::domain_error.
Poly gcd(const Poly& a, const Poly& b);

// Order used for exponent polynomials: by degree, then coefficient by
// coefficient from the constant term upward, real part before imaginary part.
std::strong_ordering exponent_order(const Poly& a, const Poly& b);

struct ExponentLess {
  bool operator()(const Poly& a, const Poly& b) const {
    return exponent_order(a, b) < 0;
  }
};

}  // namespace overshear
