#include "overshear/surface.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "overshear/error.hpp"
#include "overshear/exp_poly.hpp"

namespace overshear {
namespace {

std::vector<Complex> numeric_coeffs(const Poly& p) {
  std::vector<Complex> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

Complex horner(const std::vector<Complex>& cs, Complex z) {
  Complex acc = 0.0;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

Surface::Surface(Poly p) : p_(std::move(p)), dp_(p_.derivative()) {
  if (p_.degree() < 4)
    throw DegreeTooLow("surface polynomial " + to_string(p_, 'z') +
                       " has degree " + std::to_string(p_.degree()) +
                       ", need at least 4");
  Poly common = gcd(p_, dp_);
  if (!common.is_constant())
    throw NonSimpleRoots("surface polynomial " + to_string(p_, 'z') +
                         " shares the factor " + to_string(common, 'z') +
                         " with its derivative");
  p_num_ = numeric_coeffs(p_);
  dp_num_ = numeric_coeffs(dp_);
}

Complex Surface::p_at(Complex z) const { return horner(p_num_, z); }
Complex Surface::dp_at(Complex z) const { return horner(dp_num_, z); }

double Surface::residual(const SurfacePoint& q) const {
  return std::abs(q.x * q.y - p_at(q.z));
}

double Surface::relative_residual(const SurfacePoint& q) const {
  const Complex xy = q.x * q.y;
  const Complex pz = p_at(q.z);
  return std::abs(xy - pz) / (1.0 + std::abs(xy) + std::abs(pz));
}

bool Surface::contains(const SurfacePoint& q, double tol) const {
  return relative_residual(q) <= tol;
}

double residual(const Surface& s, const SurfacePoint& q) {
  return s.residual(q);
}

SurfacePoint apply_hyperbolic(const Surface& /*s*/, const Poly& fz, double t,
                              const SurfacePoint& q) {
  const Complex a = fz.eval(q.z) * t;
  return {q.x * std::exp(a), q.y * std::exp(-a), q.z};
}

namespace {

bool parse_double(std::string_view text, std::size_t& pos, double& out) {
  // strtod needs a terminated buffer.
  std::string buf(text.substr(pos));
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str()) return false;
  pos += static_cast<std::size_t>(end - buf.c_str());
  return true;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  double first = 0.0;
  if (text.substr(pos) == "i") return {0.0, 1.0};
  if (!parse_double(text, pos, first))
    throw ParseError(ParseError::Kind::Syntax, pos, "expected a number");
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    if (pos != text.size())
      throw ParseError(ParseError::Kind::Syntax, pos, "trailing characters");
    return {0.0, first};
  }
  if (pos == text.size()) return {first, 0.0};
  if (text[pos] != '+' && text[pos] != '-')
    throw ParseError(ParseError::Kind::Syntax, pos, "expected '+' or '-'");
  double second = 0.0;
  if (pos + 2 == text.size() && text[pos + 1] == 'i') {
    second = text[pos] == '-' ? -1.0 : 1.0;
    pos += 1;
  } else if (!parse_double(text, pos, second)) {
    throw ParseError(ParseError::Kind::Syntax, pos, "expected a number");
  }
  if (pos >= text.size() || text[pos] != 'i')
    throw ParseError(ParseError::Kind::Syntax, pos, "expected 'i'");
  ++pos;
  if (pos != text.size())
    throw ParseError(ParseError::Kind::Syntax, pos, "trailing characters");
  return {first, second};
}

SurfacePoint parse_point(std::string_view text) {
  Complex parts[3];
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t comma = text.find(',', start);
    if ((k < 2) != (comma != std::string_view::npos))
      throw ParseError(ParseError::Kind::Syntax,
                       comma == std::string_view::npos ? text.size() : comma,
                       "a point needs exactly three comma-separated components");
    std::string_view piece = text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start);
    try {
      parts[k] = parse_complex(piece);
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), start + e.offset(), "malformed component");
    }
    start = comma + 1;
  }
  return {parts[0], parts[1], parts[2]};
}

std::string to_string(Complex c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

std::string to_string(const SurfacePoint& q) {
  return to_string(q.x) + "," + to_string(q.y) + "," + to_string(q.z);
}

double point_distance(const SurfacePoint& a, const SurfacePoint& b) {
  auto d = [](Complex u, Complex v) {
    return std::abs(u - v) / (1.0 + std::abs(v));
  };
  return std::max({d(a.x, b.x), d(a.y, b.y), d(a.z, b.z)});
}

}  // namespace overshear
