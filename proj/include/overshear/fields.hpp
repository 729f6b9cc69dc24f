#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "overshear/exp_poly.hpp"
#include "overshear/os_group.hpp"
#include "overshear/surface.hpp"

namespace overshear {

// Polynomial in z whose coefficients are exp-polynomials in x.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<ExpPoly> coeffs);
  // Lifts a polynomial in z with scalar coefficients.
  static ZPoly from_z_poly(const Poly& p);
  static ZPoly constant(ExpPoly c);
  static ZPoly z() { return ZPoly({ExpPoly{}, ExpPoly(1)}); }

  const std::vector<ExpPoly>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  ZPoly dz() const;
  ZPoly times(const ExpPoly& c) const;
  Complex eval(Complex x, Complex z) const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  void trim();
  std::vector<ExpPoly> coeffs_;
};

std::string to_string(const ZPoly& p);

// OF_{f,g} = p'(z)(z f(x) + g(x)) ∂y + x (z f(x) + g(x)) ∂z. With f = 0 this is
// the shear field SF_g.
struct OvershearField {
  ExpPoly f;
  ExpPoly g;

  static OvershearField shear(ExpPoly h) { return {ExpPoly{}, std::move(h)}; }
  bool is_shear() const { return f.is_zero(); }
};

// a ∂y + b ∂z, no ∂x component and no y-dependence.
struct CoordField {
  ZPoly a;
  ZPoly b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  CoordField times(const ExpPoly& c) const { return {a.times(c), b.times(c)}; }
  CoordField operator-() const { return {-a, -b}; }
  friend CoordField operator+(const CoordField& u, const CoordField& v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend CoordField operator-(const CoordField& u, const CoordField& v) {
    return {u.a - v.a, u.b - v.b};
  }
  friend bool operator==(const CoordField&, const CoordField&) = default;
};

std::string to_string(const CoordField& v);

CoordField to_coord(const Surface& s, const OvershearField& v);

// [V, W] = V(W) - W(V) as derivations:
// (b_V ∂z a_W - b_W ∂z a_V) ∂y + (b_V ∂z b_W - b_W ∂z b_V) ∂z.
CoordField bracket(const CoordField& v, const CoordField& w);

enum class SignStatus { Match, SignFlipped, Mismatch };
const char* to_string(SignStatus s);

// lhs == rhs, lhs == -rhs (with lhs != 0), or neither.
SignStatus compare_up_to_sign(const CoordField& lhs, const CoordField& rhs);

struct IdentityReport {
  CoordField lhs;
  CoordField rhs;
  SignStatus sign;
  bool equal() const { return sign == SignStatus::Match; }
};

// [OF_{f,g}, OF_{h,k}] against x·SF_{gh-kf}.
IdentityReport check_of_bracket_identity(const ExpPoly& f, const ExpPoly& g,
                                         const ExpPoly& h, const ExpPoly& k,
                                         const Surface& s);
bool verify_of_bracket_identity(const ExpPoly& f, const ExpPoly& g,
                                const ExpPoly& h, const ExpPoly& k,
                                const Surface& s);

// [SF_h, OF_{f,g}] against x·SF_{fh}.
IdentityReport check_sf_of_identity(const ExpPoly& h, const ExpPoly& f,
                                    const ExpPoly& g, const Surface& s);
SignStatus verify_sf_of_identity(const ExpPoly& h, const ExpPoly& f,
                                 const ExpPoly& g, const Surface& s);

// (e^u - 1)/u, by its Taylor series for |u| < 1e-4.
Complex phi1(Complex u);

// Time-t map of OF_{f,g}:
//   z' = e^u z + x g(x) t phi1(u),  u = x f(x) t,
// with y' from the overshear quotient (first-order limit for |x| < 1e-8).
SurfacePoint flow_closed_form(const Surface& s, const ExpPoly& f,
                              const ExpPoly& g, double t,
                              const SurfacePoint& q);

// Exact time-t map as a group element: (f t, (g/f)(e^{x f t} - 1)) in
// translation form, or the shear (0, g t) when f = 0. Throws NotDivisible when
// f does not divide g.
O1Element flow_symbolic(const Poly& f, const ExpPoly& g,
                        const GaussianRational& t);

// (dy/dt, dz/dt) of the field at q.
std::pair<Complex, Complex> field_at(const Surface& s, const OvershearField& v,
                                     const SurfacePoint& q);

// Classical RK4 on (y, z); x is constant along the flow.
SurfacePoint flow_numeric(const Surface& s, const OvershearField& v,
                          const SurfacePoint& q, double t, long steps);

// |(flow(h) - q)/h - V(q)| for h = 1e-6.
double generator_check(const Surface& s, const ExpPoly& f, const ExpPoly& g,
                       const SurfacePoint& q);

// Dimension of span{OF_{f,g}, S_0, ..., S_N} with S_0 = SF_h and
// S_{n+1} = [S_n, OF_{f,g}]. Throws ZeroInput for f = 0 or h = 0.
std::size_t iterated_bracket_rank(const Surface& s, const ExpPoly& f,
                                  const ExpPoly& g, const ExpPoly& h, int n);

// Rank of the span of the given fields over Q(i).
std::size_t span_dimension(const std::vector<CoordField>& fields);

// Row rank over Q(i) by Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<GaussianRational>> rows);

// All pairwise f_i g_j - f_j g_i vanish.
bool are_commuting_family(const std::vector<std::pair<ExpPoly, ExpPoly>>& fam);

}  // namespace overshear
