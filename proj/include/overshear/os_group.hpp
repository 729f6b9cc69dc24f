#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overshear/amalgam.hpp"
#include "overshear/error.hpp"
#include "overshear/exp_poly.hpp"
#include "overshear/surface.hpp"

namespace overshear {

// Below this |x| the y-update of an overshear uses its first-order limit.
inline constexpr double kNearZeroX = 1e-8;

// The overshear O_{f,g}: (x, y, z) -> (x, y + (p(z') - p(z))/x, z') with
// z' = z e^{x f(x)} + x g(x).
//
// f is a polynomial (it ends up in an exponent under composition). The
// element stores the z-translation t(x) = x g(x) rather than g itself: the
// group law keeps t an exp-polynomial with t(0) = 0, while g = t/x may leave
// the exp-polynomial class (flows produce (e^{x f s} - 1)/x).
class O1Element {
 public:
  O1Element() = default;  // identity
  O1Element(Poly f, const ExpPoly& g);

  // Throws PreconditionError unless t(0) == 0.
  static O1Element from_translation(Poly f, ExpPoly t);

  const Poly& f() const noexcept { return f_; }
  const ExpPoly& translation() const noexcept { return t_; }
  // t/x when that quotient is an exp-polynomial.
  std::optional<ExpPoly> g() const;
  // g(0) = t'(0); exact even when g itself is not an exp-polynomial.
  GaussianRational g_at_zero() const;

  bool is_identity() const { return f_.is_zero() && t_.is_zero(); }

  friend bool operator==(const O1Element&, const O1Element&) = default;

 private:
  Poly f_;
  ExpPoly t_;
};

// a∘b: apply b first. (f_a + f_b, g_b e^{x f_a} + g_a).
O1Element compose(const O1Element& a, const O1Element& b);
O1Element invert(const O1Element& a);
O1Element power(const O1Element& a, unsigned n);

// O_1 ∩ O_2 is trivial inside the exp-polynomial class, so membership is
// identity.
bool is_in_amalgam(const O1Element& a);

// Action of O_{f,g} on a point.
SurfacePoint o1_apply(const Surface& s, const O1Element& a,
                      const SurfacePoint& q);
// Action of I O_{f,g} I.
SurfacePoint o2_apply(const Surface& s, const O1Element& a,
                      const SurfacePoint& q);
// (x, y, z) -> (y, x, z).
SurfacePoint involution(const SurfacePoint& q);

struct OSTraits {
  using Element = O1Element;

  static Element compose(amalgam::Factor, const Element& a, const Element& b) {
    return overshear::compose(a, b);
  }
  static Element invert(amalgam::Factor, const Element& a) {
    return overshear::invert(a);
  }
  static bool is_identity(amalgam::Factor, const Element& a) {
    return a.is_identity();
  }
  static bool is_in_amalgam(amalgam::Factor, const Element& a) {
    return overshear::is_in_amalgam(a);
  }
  static Element transfer(amalgam::Factor, const Element& a) { return a; }
};

// Factor::First is O_1, Factor::Second is O_2.
using OSLetter = amalgam::Letter<OSTraits>;
using OSWord = amalgam::Word<OSTraits>;

// Rightmost letter acts first.
SurfacePoint word_apply(const Surface& s, const OSWord& w,
                        const SurfacePoint& q);
SurfacePoint apply(const Surface& s, const OSLetter& l, const SurfacePoint& q);

// Word files: one letter per line, "O1{f=<expr>; g=<expr>}" or
// "O2{f=<expr>; g=<expr>}" in the exp-polynomial grammar; "xg=<expr>" may be
// given instead of "g=" to specify the translation x g(x) directly. Blank
// lines and '#' comments are ignored.
class WordFileError : public ParseError {
 public:
  WordFileError(Kind kind, std::size_t line, std::size_t column,
                const std::string& what)
      : ParseError(kind, column, what,
                   what + " at line " + std::to_string(line) + ", column " +
                       std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Letters in file order, unreduced. Throws WordFileError (1-based line and
// column).
std::vector<OSLetter> parse_word_file(std::string_view text);
OSLetter parse_letter(std::string_view line);

std::string to_string(const OSLetter& l);
std::string to_string(const OSWord& w);  // one letter per line

}  // namespace overshear
