#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "overshear/error.hpp"
#include "overshear/fields.hpp"

using namespace overshear;
using overshear::testing::Rng;

namespace {

const Poly kZ4m1{-1, 0, 0, 0, 1};
const Poly kX = Poly::x();
const ExpPoly kXe(kX);

ExpPoly ep(const char* text) { return parse_exp_poly(text); }

ZPoly zp(std::initializer_list<const char*> cs) {
  std::vector<ExpPoly> v;
  for (const char* c : cs) v.push_back(ep(c));
  return ZPoly(std::move(v));
}

CoordField of(const Surface& s, const char* f, const char* g) {
  return to_coord(s, {ep(f), ep(g)});
}

CoordField random_coord(Rng& rng) {
  const overshear::testing::CoeffScale sc{2, 3, true};
  auto zpoly = [&] {
    std::vector<ExpPoly> cs;
    const long deg = overshear::testing::uniform(rng, 0, 3);
    for (long k = 0; k <= deg; ++k)
      cs.push_back(overshear::testing::random_exp_poly(rng, 2, 2, sc));
    return ZPoly(std::move(cs));
  };
  return {zpoly(), zpoly()};
}

// Bracket components from central differences in z; independent of ZPoly::dz.
std::pair<Complex, Complex> numeric_bracket(const CoordField& v,
                                            const CoordField& w, Complex x,
                                            Complex z) {
  const double h = 1e-5;
  auto dz = [&](const ZPoly& p) {
    return (p.eval(x, z + h) - p.eval(x, z - h)) / (2 * h);
  };
  const Complex bv = v.b.eval(x, z), bw = w.b.eval(x, z);
  return {bv * dz(w.a) - bw * dz(v.a), bv * dz(w.b) - bw * dz(v.b)};
}

}  // namespace

TEST_CASE("to_coord") {
  const Surface s(kZ4m1);
  const CoordField sf = to_coord(s, OvershearField::shear(ExpPoly(1)));
  CHECK(sf.a == zp({"0", "0", "0", "4"}));
  CHECK(sf.b == zp({"x"}));
  const CoordField of10 = of(s, "1", "0");
  CHECK(of10.a == zp({"0", "0", "0", "0", "4"}));
  CHECK(of10.b == zp({"0", "x"}));
  CHECK(of(s, "0", "0").is_zero());
}

TEST_CASE("bracket examples") {
  const Surface s(kZ4m1);
  const CoordField v = of(s, "1", "exp(x)");
  CHECK(bracket(v, v).is_zero());

  const CoordField b = bracket(of(s, "1", "0"), of(s, "0", "1"));
  CHECK(b.a == zp({"0", "0", "0", "-4*x"}));
  CHECK(b.b == zp({"-x^2"}));
  CHECK(b == to_coord(s, OvershearField::shear(ExpPoly(-1))).times(kXe));

  // Shear fields commute.
  CHECK(bracket(to_coord(s, OvershearField::shear(ep("x*exp(x)"))),
                to_coord(s, OvershearField::shear(ep("1 - x^3"))))
            .is_zero());
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  Rng rng(51);
  for (int i = 0; i < 25; ++i) {
    const CoordField u = random_coord(rng), v = random_coord(rng),
                     w = random_coord(rng);
    CHECK(bracket(u, v) == -bracket(v, u));
    CHECK((bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) +
           bracket(w, bracket(u, v)))
              .is_zero());
  }
}

TEST_CASE("bracket agrees with finite differences") {
  Rng rng(52);
  for (int i = 0; i < 25; ++i) {
    const CoordField v = random_coord(rng), w = random_coord(rng);
    const Complex x = overshear::testing::random_complex_in_disk(rng, 1.0);
    const Complex z = overshear::testing::random_complex_in_disk(rng, 1.0);
    const CoordField b = bracket(v, w);
    const auto [na, nb] = numeric_bracket(v, w, x, z);
    CHECK(std::abs(b.a.eval(x, z) - na) < 1e-5 * std::max(1.0, std::abs(na)));
    CHECK(std::abs(b.b.eval(x, z) - nb) < 1e-5 * std::max(1.0, std::abs(nb)));
  }
}

TEST_CASE("overshear bracket identity") {
  const Surface s(kZ4m1);
  CHECK(verify_of_bracket_identity(ExpPoly(1), ExpPoly{}, ExpPoly{}, ExpPoly(1), s));
  CHECK(verify_of_bracket_identity(ep("x"), ep("exp(x)"), ep("x"), ep("exp(x)"), s));
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    auto r = [&] { return overshear::testing::random_exp_poly(rng, 4); };
    const ExpPoly f = r(), g = r(), h = r(), k = r();
    const IdentityReport rep = check_of_bracket_identity(f, g, h, k, s);
    CHECK(rep.sign == SignStatus::Match);
  }
}

TEST_CASE("shear against overshear identity") {
  const Surface s(kZ4m1);
  CHECK(verify_sf_of_identity(ExpPoly(1), ExpPoly(1), ExpPoly{}, s) ==
        SignStatus::Match);
  const IdentityReport zero = check_sf_of_identity(ep("x"), ExpPoly{}, ep("1"), s);
  CHECK(zero.lhs.is_zero());
  CHECK(zero.rhs.is_zero());
  Rng rng(54);
  for (int i = 0; i < 20; ++i) {
    auto r = [&] { return overshear::testing::random_nonzero_exp_poly(rng, 3); };
    CHECK(verify_sf_of_identity(r(), r(), r(), s) == SignStatus::Match);
  }
  CHECK(std::string(to_string(SignStatus::SignFlipped)) == "flipped");
}

TEST_CASE("compare_up_to_sign") {
  const Surface s(kZ4m1);
  const CoordField v = of(s, "1", "x");
  CHECK(compare_up_to_sign(v, v) == SignStatus::Match);
  CHECK(compare_up_to_sign(v, -v) == SignStatus::SignFlipped);
  CHECK(compare_up_to_sign(v, v.times(ExpPoly(2))) == SignStatus::Mismatch);
}

TEST_CASE("phi1") {
  CHECK(phi1(0.0) == Complex(1.0));
  for (double u : {1e-3, 1e-4, 2e-5, -3e-6, 0.5, -2.0}) {
    const Complex exact = std::expm1(u) / u;
    CHECK(std::abs(phi1(u) - exact) < 1e-15);
  }
  const Complex c(3e-5, -4e-5);
  const Complex reference = 1.0 + c / 2.0 + c * c / 6.0 + c * c * c / 24.0;
  CHECK(std::abs(phi1(c) - reference) < 1e-16);
}

TEST_CASE("flow_closed_form") {
  const Surface s(kZ4m1);
  const SurfacePoint q{1.0, 0.0, 1.0};
  CHECK(flow_closed_form(s, ep("1"), ep("1"), 0.0, q) == q);

  const SurfacePoint img = flow_closed_form(s, ExpPoly(1), ExpPoly(1), 1.0, q);
  const double e = std::exp(1.0);
  CHECK(std::abs(img.z - (2 * e - 1)) < 1e-14);
  CHECK(std::abs(img.y - s.p_at(2 * e - 1)) < 1e-12 * std::abs(s.p_at(2 * e - 1)));

  // Shear flows translate z.
  const SurfacePoint sh = flow_closed_form(s, ExpPoly{}, ep("exp(x)"), 2.0, q);
  CHECK(std::abs(sh.z - (1.0 + 2.0 * e)) < 1e-14);
}

TEST_CASE("one-parameter law for closed-form flows") {
  const Surface s(kZ4m1);
  Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    const SurfacePoint q = overshear::testing::random_surface_point(s, rng);
    const double a = overshear::testing::uniform_real(rng, -0.5, 0.5);
    const double b = overshear::testing::uniform_real(rng, -0.5, 0.5);
    const SurfacePoint two = flow_closed_form(
        s, ExpPoly(1), ExpPoly(1), a, flow_closed_form(s, ExpPoly(1), ExpPoly(1), b, q));
    CHECK(point_distance(two, flow_closed_form(s, ExpPoly(1), ExpPoly(1), a + b, q)) <
          1e-9);
  }
}

TEST_CASE("flow_symbolic") {
  const ExpPoly g = ep("1 + x*exp(x)");
  CHECK(flow_symbolic(Poly{}, g, 3) == O1Element(Poly{}, g * ExpPoly(3)));
  CHECK_THROWS_AS(flow_symbolic(kX, ExpPoly(1), 1), NotDivisible);

  const GaussianRational s(mpq_class(1, 3)), t(mpq_class(-5, 2));
  CHECK(compose(flow_symbolic(Poly(1), ExpPoly(1), s),
                flow_symbolic(Poly(1), ExpPoly(1), t)) ==
        flow_symbolic(Poly(1), ExpPoly(1), s + t));
  CHECK(compose(flow_symbolic(Poly{}, g, s), flow_symbolic(Poly{}, g, t)) ==
        flow_symbolic(Poly{}, g, s + t));
  CHECK(flow_symbolic(Poly(1), ExpPoly(1), 0).is_identity());

  // f = x, g = x^2: the exact element acts like the closed form.
  const Surface surf(kZ4m1);
  const O1Element el = flow_symbolic(kX, ep("x^2"), 1);
  Rng rng(56);
  for (int i = 0; i < 20; ++i) {
    const SurfacePoint q = overshear::testing::random_surface_point(surf, rng);
    CHECK(point_distance(o1_apply(surf, el, q),
                         flow_closed_form(surf, kXe, ep("x^2"), 1.0, q)) < 1e-9);
  }
}

TEST_CASE("flow_numeric") {
  const Surface s(kZ4m1);
  const SurfacePoint q{1.0, 0.0, 1.0};
  const OvershearField v{ExpPoly(1), ExpPoly(1)};
  CHECK(flow_numeric(s, v, q, 0.0, 10) == q);
  CHECK(flow_numeric(s, OvershearField{}, q, 1.7, 10) == q);
  CHECK(point_distance(flow_numeric(s, v, q, 1.0, 10000),
                       flow_closed_form(s, ExpPoly(1), ExpPoly(1), 1.0, q)) < 1e-6);
  CHECK_THROWS_AS(flow_numeric(s, v, q, 1.0, 0), PreconditionError);
}

TEST_CASE("generator_check") {
  const Surface s(kZ4m1);
  CHECK(generator_check(s, ExpPoly{}, ExpPoly{}, {1.0, 0.0, 1.0}) < 1e-12);
  CHECK(generator_check(s, ExpPoly{}, ExpPoly(1), {1.0, 0.0, 1.0}) < 1e-5);
  CHECK(generator_check(s, ExpPoly(1), ExpPoly{}, {0.0, 5.0, 1.0}) < 1e-5);
  const auto [dy, dz] = field_at(s, {ExpPoly(1), ExpPoly{}}, {0.0, 5.0, 1.0});
  CHECK(dy == Complex(4.0));
  CHECK(dz == Complex(0.0));
}

TEST_CASE("iterated_bracket_rank") {
  const Surface s(kZ4m1);
  CHECK(iterated_bracket_rank(s, ExpPoly(1), ExpPoly{}, ExpPoly(1), 3) == 5);
  CHECK(iterated_bracket_rank(s, ExpPoly(1), ExpPoly{}, ExpPoly(1), 0) == 2);
  CHECK(iterated_bracket_rank(s, ExpPoly(1), ExpPoly(1), ExpPoly(1), 5) == 7);
  CHECK_THROWS_AS(iterated_bracket_rank(s, ExpPoly{}, ExpPoly(1), ExpPoly(1), 2),
                  ZeroInput);
  CHECK_THROWS_AS(iterated_bracket_rank(s, ExpPoly(1), ExpPoly(1), ExpPoly{}, 2),
                  ZeroInput);
}

TEST_CASE("exact_rank and span_dimension") {
  using G = GaussianRational;
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{G(1), G(2)}, {G(2), G(4)}}) == 1);
  CHECK(exact_rank({{G(0, 1), G(1)}, {G(1), G(0, -1)}}) == 1);
  CHECK(exact_rank({{G(1), G(0)}, {G(0), G(1)}, {G(1), G(1)}}) == 2);
  const Surface s(kZ4m1);
  const CoordField u = of(s, "1", "x"), v = of(s, "0", "exp(x)");
  CHECK(span_dimension({u, v, u + v.times(ExpPoly(GaussianRational(0, 2)))}) == 2);
  CHECK(span_dimension({u, u.times(ep("exp(x)"))}) == 2);
}

TEST_CASE("are_commuting_family") {
  CHECK(are_commuting_family({{ExpPoly{}, ep("x")}, {ExpPoly{}, ep("exp(x)")}}));
  const ExpPoly h = ep("1 + exp(x^2)");
  CHECK(are_commuting_family({{ExpPoly(1), h}, {kXe, kXe * h}}));
  CHECK(!are_commuting_family({{ExpPoly(1), ExpPoly{}}, {ExpPoly{}, ExpPoly(1)}}));
  CHECK(are_commuting_family({}));

  // Flows of a commuting pair commute numerically.
  const Surface s(kZ4m1);
  Rng rng(57);
  for (int i = 0; i < 10; ++i) {
    const SurfacePoint q = overshear::testing::random_surface_point(s, rng);
    const SurfacePoint ab = flow_closed_form(
        s, ExpPoly(1), h, 0.3, flow_closed_form(s, kXe, kXe * h, 0.2, q));
    const SurfacePoint ba = flow_closed_form(
        s, kXe, kXe * h, 0.2, flow_closed_form(s, ExpPoly(1), h, 0.3, q));
    CHECK(point_distance(ab, ba) < 1e-8);
  }
}
