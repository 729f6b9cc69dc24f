#include "overshear/gaussian_rational.hpp"

#include <stdexcept>
#include <utility>

namespace overshear {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a,
                                 const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string to_string(const GaussianRational& c) {
  std::string out = c.re().get_str();
  if (!c.is_real()) {
    if (sgn(c.im()) > 0) out += '+';
    out += c.im().get_str();
    out += 'i';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
  return os << to_string(c);
}

}  // namespace overshear
