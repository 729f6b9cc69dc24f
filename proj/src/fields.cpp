#include "overshear/fields.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace overshear {

ZPoly::ZPoly(std::vector<ExpPoly> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ZPoly ZPoly::from_z_poly(const Poly& p) {
  std::vector<ExpPoly> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.emplace_back(c);
  return ZPoly(std::move(cs));
}

ZPoly ZPoly::constant(ExpPoly c) { return ZPoly({std::move(c)}); }

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ZPoly ZPoly::dz() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExpPoly> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k].scaled(GaussianRational(static_cast<long>(k)));
  return ZPoly(std::move(out));
}

ZPoly ZPoly::times(const ExpPoly& c) const {
  std::vector<ExpPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return ZPoly(std::move(out));
}

Complex ZPoly::eval(Complex x, Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + overshear::eval(*it, x);
  return acc;
}

ZPoly ZPoly::operator-() const { return times(ExpPoly(-1)); }

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExpPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ZPoly(std::move(out));
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const ExpPoly& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (k >= 1) out += "*z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string to_string(const CoordField& v) {
  return "(" + to_string(v.a) + ")*dy + (" + to_string(v.b) + ")*dz";
}

CoordField to_coord(const Surface& s, const OvershearField& v) {
  // z f + g
  const ZPoly u = ZPoly({v.g, v.f});
  return {ZPoly::from_z_poly(s.dp()) * u, u.times(ExpPoly(Poly::x()))};
}

CoordField bracket(const CoordField& v, const CoordField& w) {
  return {v.b * w.a.dz() - w.b * v.a.dz(), v.b * w.b.dz() - w.b * v.b.dz()};
}

const char* to_string(SignStatus s) {
  switch (s) {
    case SignStatus::Match:
      return "match";
    case SignStatus::SignFlipped:
      return "flipped";
    case SignStatus::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

SignStatus compare_up_to_sign(const CoordField& lhs, const CoordField& rhs) {
  if (lhs == rhs) return SignStatus::Match;
  if (lhs == -rhs) return SignStatus::SignFlipped;
  return SignStatus::Mismatch;
}

IdentityReport check_of_bracket_identity(const ExpPoly& f, const ExpPoly& g,
                                         const ExpPoly& h, const ExpPoly& k,
                                         const Surface& s) {
  CoordField lhs = bracket(to_coord(s, {f, g}), to_coord(s, {h, k}));
  CoordField rhs = to_coord(s, OvershearField::shear(g * h - k * f))
                       .times(ExpPoly(Poly::x()));
  const SignStatus sign = compare_up_to_sign(lhs, rhs);
  return {std::move(lhs), std::move(rhs), sign};
}

bool verify_of_bracket_identity(const ExpPoly& f, const ExpPoly& g,
                                const ExpPoly& h, const ExpPoly& k,
                                const Surface& s) {
  return check_of_bracket_identity(f, g, h, k, s).equal();
}

IdentityReport check_sf_of_identity(const ExpPoly& h, const ExpPoly& f,
                                    const ExpPoly& g, const Surface& s) {
  CoordField lhs =
      bracket(to_coord(s, OvershearField::shear(h)), to_coord(s, {f, g}));
  CoordField rhs = to_coord(s, OvershearField::shear(f * h))
                       .times(ExpPoly(Poly::x()));
  const SignStatus sign = compare_up_to_sign(lhs, rhs);
  return {std::move(lhs), std::move(rhs), sign};
}

SignStatus verify_sf_of_identity(const ExpPoly& h, const ExpPoly& f,
                                 const ExpPoly& g, const Surface& s) {
  return check_sf_of_identity(h, f, g, s).sign;
}

Complex phi1(Complex u) {
  if (std::abs(u) < 1e-4) {
    // sum_{k<8} u^k / (k+1)!
    Complex acc = 0.0;
    for (int k = 7; k >= 0; --k) acc = 1.0 + acc * u / static_cast<double>(k + 2);
    return acc;
  }
  // e^{a+ib} - 1 without cancellation.
  const double a = u.real(), b = u.imag();
  const double sh = std::sin(b / 2);
  const Complex em1(std::expm1(a) * std::cos(b) - 2 * sh * sh,
                    std::exp(a) * std::sin(b));
  return em1 / u;
}

SurfacePoint flow_closed_form(const Surface& s, const ExpPoly& f,
                              const ExpPoly& g, double t,
                              const SurfacePoint& q) {
  const Complex fx = eval(f, q.x);
  const Complex gx = eval(g, q.x);
  const Complex u = q.x * fx * t;
  const Complex z1 = std::exp(u) * q.z + q.x * gx * t * phi1(u);
  Complex y1;
  if (std::abs(q.x) >= kNearZeroX) {
    y1 = q.y + (s.p_at(z1) - s.p_at(q.z)) / q.x;
  } else {
    y1 = q.y + s.dp_at(q.z) * t * (q.z * fx + gx);
  }
  return {q.x, y1, z1};
}

O1Element flow_symbolic(const Poly& f, const ExpPoly& g,
                        const GaussianRational& t) {
  const Poly x = Poly::x();
  if (f.is_zero()) return O1Element(Poly{}, g.scaled(t));
  const ExpPoly ratio = div_by_poly(g, f);
  const Poly ft = f.scaled(t);
  return O1Element::from_translation(ft, ratio * (exp_of(x * ft) - ExpPoly(1)));
}

std::pair<Complex, Complex> field_at(const Surface& s, const OvershearField& v,
                                     const SurfacePoint& q) {
  const Complex w = q.z * eval(v.f, q.x) + eval(v.g, q.x);
  return {s.dp_at(q.z) * w, q.x * w};
}

SurfacePoint flow_numeric(const Surface& s, const OvershearField& v,
                          const SurfacePoint& q, double t, long steps) {
  if (steps < 1) throw PreconditionError("flow_numeric needs steps >= 1");
  const Complex x = q.x;
  const Complex fx = eval(v.f, x);
  const Complex gx = eval(v.g, x);
  auto rhs = [&](Complex z) {
    const Complex w = z * fx + gx;
    return std::pair<Complex, Complex>{s.dp_at(z) * w, x * w};
  };
  const double h = t / static_cast<double>(steps);
  Complex y = q.y;
  Complex z = q.z;
  for (long i = 0; i < steps; ++i) {
    const auto [ky1, kz1] = rhs(z);
    const auto [ky2, kz2] = rhs(z + 0.5 * h * kz1);
    const auto [ky3, kz3] = rhs(z + 0.5 * h * kz2);
    const auto [ky4, kz4] = rhs(z + h * kz3);
    y += h / 6.0 * (ky1 + 2.0 * ky2 + 2.0 * ky3 + ky4);
    z += h / 6.0 * (kz1 + 2.0 * kz2 + 2.0 * kz3 + kz4);
  }
  return {x, y, z};
}

double generator_check(const Surface& s, const ExpPoly& f, const ExpPoly& g,
                       const SurfacePoint& q) {
  constexpr double h = 1e-6;
  const SurfacePoint moved = flow_closed_form(s, f, g, h, q);
  const auto [vy, vz] = field_at(s, {f, g}, q);
  const Complex dy = (moved.y - q.y) / h - vy;
  const Complex dz = (moved.z - q.z) / h - vz;
  return std::sqrt(std::norm(dy) + std::norm(dz));
}

std::size_t exact_rank(std::vector<std::vector<GaussianRational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const GaussianRational inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const GaussianRational factor = rows[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j)
        rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t span_dimension(const std::vector<CoordField>& fields) {
  // Coordinates: (component, z power, exponent, x power).
  using Key = std::tuple<int, std::size_t, Poly, std::size_t>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      if (auto c = exponent_order(std::get<2>(a), std::get<2>(b)); c != 0)
        return c < 0;
      return std::get<3>(a) < std::get<3>(b);
    }
  };
  std::vector<std::map<Key, GaussianRational, KeyLess>> vecs;
  std::map<Key, std::size_t, KeyLess> columns;
  for (const auto& v : fields) {
    auto& vec = vecs.emplace_back();
    int component = 0;
    for (const ZPoly* zp : {&v.a, &v.b}) {
      for (std::size_t zk = 0; zk < zp->coeffs().size(); ++zk) {
        for (const auto& [q, p] : zp->coeffs()[zk].terms()) {
          for (std::size_t xk = 0; xk < p.coeffs().size(); ++xk) {
            if (p.coeffs()[xk].is_zero()) continue;
            Key key{component, zk, q, xk};
            columns.try_emplace(key, 0);
            vec.emplace(std::move(key), p.coeffs()[xk]);
          }
        }
      }
      ++component;
    }
  }
  std::size_t index = 0;
  for (auto& [key, col] : columns) col = index++;
  std::vector<std::vector<GaussianRational>> rows(
      vecs.size(), std::vector<GaussianRational>(columns.size()));
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (const auto& [key, c] : vecs[r]) rows[r][columns.at(key)] = c;
  return exact_rank(std::move(rows));
}

std::size_t iterated_bracket_rank(const Surface& s, const ExpPoly& f,
                                  const ExpPoly& g, const ExpPoly& h, int n) {
  if (f.is_zero()) throw ZeroInput("iterated_bracket_rank needs f != 0");
  if (h.is_zero()) throw ZeroInput("iterated_bracket_rank needs h != 0");
  if (n < 0) throw PreconditionError("iterated_bracket_rank needs N >= 0");
  const CoordField of = to_coord(s, {f, g});
  std::vector<CoordField> span{of, to_coord(s, OvershearField::shear(h))};
  for (int i = 0; i < n; ++i) span.push_back(bracket(span.back(), of));
  return span_dimension(span);
}

bool are_commuting_family(
    const std::vector<std::pair<ExpPoly, ExpPoly>>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!(fam[i].first * fam[j].second - fam[j].first * fam[i].second)
               .is_zero())
        return false;
  return true;
}

}  // namespace overshear
