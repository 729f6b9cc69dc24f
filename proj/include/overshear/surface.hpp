#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "overshear/poly.hpp"

namespace overshear {

using Complex = std::complex<double>;

// Default relative tolerance for "point lies on the surface".
inline constexpr double kDefaultSurfaceTol = 1e-9;

struct SurfacePoint {
  Complex x;
  Complex y;
  Complex z;

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

// The Danielewski surface  xy = p(z)  for a polynomial p of degree >= 4 with
// simple zeros.
class Surface {
 public:
  // Throws DegreeTooLow or NonSimpleRoots.
  explicit Surface(Poly p);

  const Poly& p() const noexcept { return p_; }
  const Poly& dp() const noexcept { return dp_; }
  long degree() const noexcept { return p_.degree(); }

  Complex p_at(Complex z) const;
  Complex dp_at(Complex z) const;

  // |xy - p(z)|.
  double residual(const SurfacePoint& q) const;
  // residual / (1 + |xy| + |p(z)|).
  double relative_residual(const SurfacePoint& q) const;
  bool contains(const SurfacePoint& q, double tol = kDefaultSurfaceTol) const;

 private:
  Poly p_;
  Poly dp_;
  std::vector<Complex> p_num_;
  std::vector<Complex> dp_num_;
};

inline Surface make_surface(Poly p) { return Surface(std::move(p)); }

double residual(const Surface& s, const SurfacePoint& q);

// (x e^{f(z) t}, y e^{-f(z) t}, z).
SurfacePoint apply_hyperbolic(const Surface& s, const Poly& fz, double t,
                              const SurfacePoint& q);

// Points are written "a+bi,c+di,e+fi"; each component accepts "a", "bi",
// "a+bi" or "a-bi" with decimal doubles. Throws ParseError.
SurfacePoint parse_point(std::string_view text);
Complex parse_complex(std::string_view text);
std::string to_string(const SurfacePoint& q);
std::string to_string(Complex c);

// Componentwise max of |a - b| / (1 + |b|).
double point_distance(const SurfacePoint& a, const SurfacePoint& b);

}  // namespace overshear
