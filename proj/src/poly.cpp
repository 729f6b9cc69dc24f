#include "overshear/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace overshear {

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::monomial(GaussianRational c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(power + 1);
  v[power] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational{};
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

Poly Poly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Poly out = *this;
  for (auto& a : out.coeffs_) a *= c;
  return out;
}

Poly Poly::shifted(std::size_t power) const {
  if (is_zero() || power == 0) return *this;
  Poly out;
  out.coeffs_.assign(power, GaussianRational{});
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->to_complex();
  return acc;
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const { return scaled(GaussianRational(-1)); }

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<GaussianRational> rem = a.coeffs();
  std::vector<GaussianRational> quot(rem.size() - b.coeffs().size() + 1);
  const GaussianRational lead_inv = b.leading().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    GaussianRational q = rem[k + db] * lead_inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    quot[k] = std::move(q);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

std::strong_ordering exponent_order(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k)
    if (auto c = a.coeffs()[k] <=> b.coeffs()[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace overshear
