#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <ostream>
#include <string>

namespace overshear {

// An element re + im*i of Q(i). Both parts are kept canonical by GMP (lowest
// terms, positive denominator).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  // Throws std::domain_error for zero.
  GaussianRational inverse() const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }

  friend bool operator==(const GaussianRational& a,
                         const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Total order: real part first, then imaginary part. Used only to make
  // canonical forms deterministic.
  friend std::strong_ordering operator<=>(const GaussianRational& a,
                                          const GaussianRational& b);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Compact form "re" or "re+imi" (e.g. "-1/2+3i"), used in diagnostics and
// JSON reports.
std::string to_string(const GaussianRational& c);

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

}  // namespace overshear
