#include "overshear/exp_poly.hpp"

#include <ostream>
#include <stdexcept>

#include "overshear/error.hpp"

namespace overshear {

ExpPoly::ExpPoly(Poly p) {
  if (!p.is_zero()) terms_.emplace(Poly{}, std::move(p));
}

ExpPoly ExpPoly::term(Poly coeff, Poly exponent) {
  if (!exponent.constant_term().is_zero())
    throw ConstantTermError("exponent " + to_string(exponent) +
                            " has a nonzero constant term");
  ExpPoly out;
  if (!coeff.is_zero()) out.terms_.emplace(std::move(exponent), std::move(coeff));
  return out;
}

std::optional<Poly> ExpPoly::as_poly() const {
  if (terms_.empty()) return Poly{};
  if (terms_.size() == 1 && terms_.begin()->first.is_zero())
    return terms_.begin()->second;
  return std::nullopt;
}

GaussianRational ExpPoly::value_at_zero() const {
  GaussianRational acc;
  for (const auto& [q, p] : terms_) acc += p.constant_term();
  return acc;
}

bool ExpPoly::is_canonical() const {
  for (const auto& [q, p] : terms_) {
    if (!q.constant_term().is_zero() || p.is_zero()) return false;
  }
  return true;
}

void ExpPoly::add_term(const Poly& exponent, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly ExpPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  ExpPoly out = *this;
  for (auto& [q, p] : out.terms_) p = p.scaled(c);
  return out;
}

ExpPoly ExpPoly::operator-() const { return scaled(GaussianRational(-1)); }

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [q, p] : o.terms_) add_term(q, p);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [q, p] : o.terms_) add_term(q, -p);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [qa, pa] : a.terms_)
    for (const auto& [qb, pb] : b.terms_) out.add_term(qa + qb, pa * pb);
  return out;
}

ExpPoly exp_of(const Poly& q) { return ExpPoly::term(Poly(1), q); }

ExpPoly derivative(const ExpPoly& a) {
  ExpPoly out;
  for (const auto& [q, p] : a.terms())
    out += ExpPoly::term(p.derivative() + p * q.derivative(), q);
  return out;
}

std::complex<double> eval(const ExpPoly& a, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (const auto& [q, p] : a.terms()) {
    const std::complex<double> c = p.eval(x);
    acc += q.is_zero() ? c : c * std::exp(q.eval(x));
  }
  return acc;
}

ExpPoly div_by_poly(const ExpPoly& a, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  ExpPoly out;
  for (const auto& [q, p] : a.terms()) {
    auto [quot, rem] = divmod(p, d);
    if (!rem.is_zero())
      throw NotDivisible("coefficient " + to_string(p) +
                         " is not divisible by " + to_string(d));
    out += ExpPoly::term(std::move(quot), q);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExpPoly& a) {
  return os << to_string(a);
}

}  // namespace overshear
