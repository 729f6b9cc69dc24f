#pragma once

// Reduced words in a free product A *_C B of two groups amalgamated over a
// common subgroup C.
//
// A word [l_1, ..., l_n] denotes the product l_1 * l_2 * ... * l_n. When the
// letters are maps, the rightmost letter acts first.
//
// The factor groups are described by a traits type (see FactorTraits below).
// Reduction merges adjacent letters of the same factor, drops identities, and
// folds letters that lie in C into a neighbour. It does not pick coset
// representatives, so two reduced words for the same element may differ
// letter-wise, but they always have the same length.

#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "overshear/error.hpp"

namespace overshear::amalgam {

enum class Factor { First, Second };

constexpr Factor other(Factor f) {
  return f == Factor::First ? Factor::Second : Factor::First;
}

// compose(f, a, b) is the product a*b inside factor f. transfer(f, c) maps an
// element c of C, written in factor f, to its representation in the other
// factor.
template <typename T>
concept FactorTraits = requires(Factor f, const typename T::Element& a) {
  typename T::Element;
  { T::compose(f, a, a) } -> std::convertible_to<typename T::Element>;
  { T::invert(f, a) } -> std::convertible_to<typename T::Element>;
  { T::is_identity(f, a) } -> std::convertible_to<bool>;
  { T::is_in_amalgam(f, a) } -> std::convertible_to<bool>;
  { T::transfer(f, a) } -> std::convertible_to<typename T::Element>;
};

template <FactorTraits Traits>
struct Letter {
  using Element = typename Traits::Element;

  Factor factor;
  Element elem;

  friend bool operator==(const Letter&, const Letter&) = default;
};

template <FactorTraits Traits>
class Word {
 public:
  using Element = typename Traits::Element;
  using LetterType = Letter<Traits>;

  Word() = default;

  // Reduces the given letter sequence.
  explicit Word(const std::vector<LetterType>& letters) {
    for (const auto& l : letters) push_back(l);
  }

  static Word single(Factor f, Element e) {
    Word w;
    w.push_back(LetterType{f, std::move(e)});
    return w;
  }

  const std::vector<LetterType>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  bool empty() const noexcept { return letters_.empty(); }
  const LetterType& front() const { return letters_.front(); }
  const LetterType& back() const { return letters_.back(); }

  // Appends one letter on the right and restores reduced form.
  void push_back(LetterType l) {
    for (;;) {
      if (Traits::is_identity(l.factor, l.elem)) return;
      if (letters_.empty()) {
        letters_.push_back(std::move(l));
        return;
      }
      LetterType& top = letters_.back();
      if (top.factor != l.factor) {
        if (Traits::is_in_amalgam(l.factor, l.elem)) {
          l = LetterType{top.factor, Traits::transfer(l.factor, l.elem)};
        } else if (letters_.size() == 1 &&
                   Traits::is_in_amalgam(top.factor, top.elem)) {
          top = LetterType{l.factor, Traits::transfer(top.factor, top.elem)};
        } else {
          letters_.push_back(std::move(l));
          return;
        }
      }
      l = LetterType{top.factor, Traits::compose(top.factor, top.elem, l.elem)};
      letters_.pop_back();
    }
  }

  Word inverse() const {
    Word out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      out.push_back(LetterType{it->factor, Traits::invert(it->factor, it->elem)});
    return out;
  }

  Word power(unsigned n) const {
    Word out;
    for (unsigned k = 0; k < n; ++k) out *= *this;
    return out;
  }

  Word& operator*=(const Word& o) {
    for (const auto& l : o.letters_) push_back(l);
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<LetterType> letters_;
};

// Reduction of an arbitrary letter sequence.
template <FactorTraits Traits>
Word<Traits> reduce(const std::vector<Letter<Traits>>& letters) {
  return Word<Traits>(letters);
}

template <FactorTraits Traits>
std::size_t length(const Word<Traits>& w) {
  return w.length();
}

// True for length <= 1 and for words whose end letters lie in different
// factors.
template <FactorTraits Traits>
bool is_cyclically_reduced(const Word<Traits>& w) {
  return w.length() <= 1 || w.front().factor != w.back().factor;
}

template <FactorTraits Traits>
struct CyclicReduction {
  Word<Traits> conjugator;
  Word<Traits> core;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
template <FactorTraits Traits>
CyclicReduction<Traits> cyclic_reduce(const Word<Traits>& w) {
  CyclicReduction<Traits> out{Word<Traits>{}, w};
  while (!is_cyclically_reduced(out.core)) {
    Word<Traits> head = Word<Traits>::single(out.core.front().factor,
                                             out.core.front().elem);
    out.core = head.inverse() * out.core * head;
    out.conjugator *= head;
  }
  return out;
}

// Present when w is conjugate into one of the factors: then
// conjugator^-1 * w * conjugator == core and core has length <= 1 (length 0
// for the identity).
template <FactorTraits Traits>
std::optional<CyclicReduction<Traits>> conjugate_into_factor(
    const Word<Traits>& w) {
  auto r = cyclic_reduce(w);
  if (r.core.length() > 1) return std::nullopt;
  return r;
}

struct ParityReport {
  std::size_t length1;
  std::size_t length2;
  bool same_parity;
};

// Checks that two commuting non-identity words have lengths of equal parity.
// Throws NotCommuting if g1*g2 != g2*g1 and PreconditionError for identity
// input.
template <FactorTraits Traits>
ParityReport parity_check(const Word<Traits>& g1, const Word<Traits>& g2) {
  if (g1.empty() || g2.empty())
    throw PreconditionError("parity check needs words of length >= 1");
  // A nonempty reduced word is never the identity.
  if (!(g1 * g2 * g1.inverse() * g2.inverse()).is_identity())
    throw NotCommuting("words do not commute");
  return {g1.length(), g2.length(), g1.length() % 2 == g2.length() % 2};
}

}  // namespace overshear::amalgam
