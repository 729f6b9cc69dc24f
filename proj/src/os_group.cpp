#include "overshear/os_group.hpp"

#include <cmath>

namespace overshear {

O1Element::O1Element(Poly f, const ExpPoly& g)
    : f_(std::move(f)), t_(g * ExpPoly(Poly::x())) {}

O1Element O1Element::from_translation(Poly f, ExpPoly t) {
  if (!t.value_at_zero().is_zero())
    throw PreconditionError("translation " + to_string(t) +
                            " does not vanish at x = 0");
  O1Element out;
  out.f_ = std::move(f);
  out.t_ = std::move(t);
  return out;
}

std::optional<ExpPoly> O1Element::g() const {
  try {
    return div_by_poly(t_, Poly::x());
  } catch (const NotDivisible&) {
    return std::nullopt;
  }
}

GaussianRational O1Element::g_at_zero() const {
  return derivative(t_).value_at_zero();
}

O1Element compose(const O1Element& a, const O1Element& b) {
  const Poly x = Poly::x();
  return O1Element::from_translation(
      a.f() + b.f(), b.translation() * exp_of(x * a.f()) + a.translation());
}

O1Element invert(const O1Element& a) {
  const Poly x = Poly::x();
  return O1Element::from_translation(-a.f(),
                                     -(a.translation() * exp_of(-(x * a.f()))));
}

O1Element power(const O1Element& a, unsigned n) {
  O1Element out;
  for (unsigned k = 0; k < n; ++k) out = compose(out, a);
  return out;
}

bool is_in_amalgam(const O1Element& a) { return a.is_identity(); }

SurfacePoint o1_apply(const Surface& s, const O1Element& a,
                      const SurfacePoint& q) {
  if (a.is_identity()) return q;
  const Complex u = q.x * a.f().eval(q.x);
  const Complex z1 = q.z * std::exp(u) + eval(a.translation(), q.x);
  Complex y1;
  if (std::abs(q.x) >= kNearZeroX) {
    y1 = q.y + (s.p_at(z1) - s.p_at(q.z)) / q.x;
  } else {
    y1 = q.y + s.dp_at(q.z) * (q.z * a.f().constant_term().to_complex() +
                               a.g_at_zero().to_complex());
  }
  return {q.x, y1, z1};
}

SurfacePoint involution(const SurfacePoint& q) { return {q.y, q.x, q.z}; }

SurfacePoint o2_apply(const Surface& s, const O1Element& a,
                      const SurfacePoint& q) {
  return involution(o1_apply(s, a, involution(q)));
}

SurfacePoint apply(const Surface& s, const OSLetter& l, const SurfacePoint& q) {
  return l.factor == amalgam::Factor::First ? o1_apply(s, l.elem, q)
                                            : o2_apply(s, l.elem, q);
}

SurfacePoint word_apply(const Surface& s, const OSWord& w,
                        const SurfacePoint& q) {
  SurfacePoint out = q;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out = apply(s, *it, out);
  return out;
}

}  // namespace overshear
