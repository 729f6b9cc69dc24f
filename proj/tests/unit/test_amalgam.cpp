#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "naive_reduce.hpp"
#include "overshear/amalgam.hpp"

using namespace overshear;
using amalgam::Factor;
using overshear::testing::Rng;

namespace {

// SL(2, Z) = Z/4 *_{Z/2} Z/6. The amalgamated Z/2 is {0, 2} in Z/4 and
// {0, 3} in Z/6.
struct ModularTraits {
  using Element = int;
  static int order(Factor f) { return f == Factor::First ? 4 : 6; }
  static int compose(Factor f, int a, int b) { return (a + b) % order(f); }
  static int invert(Factor f, int a) { return (order(f) - a) % order(f); }
  static bool is_identity(Factor, int a) { return a == 0; }
  static bool is_in_amalgam(Factor f, int a) {
    return a == 0 || 2 * a == order(f);
  }
  static int transfer(Factor f, int a) {
    if (a == 0) return 0;
    return f == Factor::First ? 3 : 2;
  }
};

using MWord = amalgam::Word<ModularTraits>;
using MLetter = amalgam::Letter<ModularTraits>;

// Faithful representation: S = [[0,-1],[1,0]] of order 4, U = [[0,-1],[1,1]]
// of order 6, S^2 = U^3 = -I.
using Mat = std::array<long, 4>;
Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
constexpr Mat kI{1, 0, 0, 1};
Mat letter_matrix(const MLetter& l) {
  const Mat g = l.factor == Factor::First ? Mat{0, -1, 1, 0} : Mat{0, -1, 1, 1};
  Mat out = kI;
  for (int k = 0; k < l.elem; ++k) out = mul(out, g);
  return out;
}
Mat word_matrix(const std::vector<MLetter>& w) {
  Mat out = kI;
  for (const auto& l : w) out = mul(out, letter_matrix(l));
  return out;
}

std::vector<MLetter> random_modular_letters(Rng& rng, int max_len) {
  std::vector<MLetter> out;
  const long n = overshear::testing::uniform(rng, 0, max_len);
  for (long i = 0; i < n; ++i) {
    const Factor f = overshear::testing::random_factor(rng);
    out.push_back({f, static_cast<int>(overshear::testing::uniform(
                          rng, 0, ModularTraits::order(f) - 1))});
  }
  return out;
}

// Reduced words are not unique letter-wise in this group, so elements are
// compared through the representation.
bool same_element(const MWord& a, const MWord& b) {
  return word_matrix(a.letters()) == word_matrix(b.letters());
}

bool is_reduced(const MWord& w) {
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].elem == 0) return false;
    if (ls.size() > 1 && ModularTraits::is_in_amalgam(ls[i].factor, ls[i].elem))
      return false;
    if (i + 1 < ls.size() && ls[i].factor == ls[i + 1].factor) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("reduce merges, cancels, and keeps alternating words") {
  CHECK(MWord({{Factor::First, 1}, {Factor::First, 1}}).letters() ==
        std::vector<MLetter>{{Factor::First, 2}});
  CHECK(MWord({{Factor::First, 1}, {Factor::First, 3}}).is_identity());
  const std::vector<MLetter> alt{{Factor::First, 1}, {Factor::Second, 1},
                                 {Factor::First, 3}};
  CHECK(MWord(alt).letters() == alt);
}

TEST_CASE("amalgam letters fold into a neighbour") {
  // A(1) B(3): B(3) = A(2), so the word is A(3).
  CHECK(MWord({{Factor::First, 1}, {Factor::Second, 3}}).letters() ==
        std::vector<MLetter>{{Factor::First, 3}});
  // A(1) B(1) A(2) B(1): A(2) = B(3) merges into B(1) B(3) B(1) = B(5).
  CHECK(MWord({{Factor::First, 1},
               {Factor::Second, 1},
               {Factor::First, 2},
               {Factor::Second, 1}})
            .letters() ==
        std::vector<MLetter>{{Factor::First, 1}, {Factor::Second, 5}});
  // A lone amalgam letter stays.
  CHECK(MWord({{Factor::First, 2}}).length() == 1);
  // ... and is absorbed by the next letter.
  CHECK(MWord({{Factor::First, 2}, {Factor::Second, 1}}).letters() ==
        std::vector<MLetter>{{Factor::Second, 4}});
}

TEST_CASE("reduction is sound against the matrix representation") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto letters = random_modular_letters(rng, 10);
    const MWord w(letters);
    CHECK(is_reduced(w));
    CHECK(word_matrix(w.letters()) == word_matrix(letters));
    // Nonempty reduced words are never trivial; a lone amalgam letter is -I.
    const Mat m = word_matrix(w.letters());
    CHECK((m == kI) == w.is_identity());
    // The quadratic oracle reaches a reduced word of the same length.
    CHECK(overshear::testing::naive_reduce<ModularTraits>(letters).size() ==
          w.length());
    CHECK(MWord(w.letters()) == w);
  }
}

TEST_CASE("reduce is a congruence and length is subadditive") {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto u = random_modular_letters(rng, 6);
    const auto v = random_modular_letters(rng, 6);
    std::vector<MLetter> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(same_element(MWord(uv), MWord(u) * MWord(v)));
    CHECK(MWord(uv).length() == (MWord(u) * MWord(v)).length());
    CHECK(MWord(uv).length() <= MWord(u).length() + MWord(v).length());
    CHECK((MWord(u) * MWord(u).inverse()).is_identity());
  }
}

TEST_CASE("cyclic reduction") {
  const MWord w({{Factor::First, 1}, {Factor::Second, 1}, {Factor::First, 3}});
  CHECK(!amalgam::is_cyclically_reduced(w));
  const auto r = amalgam::cyclic_reduce(w);
  CHECK(r.conjugator.letters() == std::vector<MLetter>{{Factor::First, 1}});
  CHECK(r.core.letters() == std::vector<MLetter>{{Factor::Second, 1}});
  CHECK(amalgam::is_cyclically_reduced(MWord{}));
  CHECK(amalgam::is_cyclically_reduced(
      MWord({{Factor::First, 1}, {Factor::Second, 1}})));

  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const MWord g(random_modular_letters(rng, 9));
    const auto cr = amalgam::cyclic_reduce(g);
    CHECK(amalgam::is_cyclically_reduced(cr.core));
    CHECK(same_element(cr.conjugator * cr.core * cr.conjugator.inverse(), g));
    if (g.length() % 2 == 1 && g.length() >= 3)
      CHECK(!amalgam::is_cyclically_reduced(g));
  }
}

TEST_CASE("conjugate_into_factor") {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const MWord c(random_modular_letters(rng, 6));
    const Factor f = overshear::testing::random_factor(rng);
    const int a = static_cast<int>(
        overshear::testing::uniform(rng, 1, ModularTraits::order(f) - 1));
    const MWord letter = MWord::single(f, a);
    const MWord w = c * letter * c.inverse();
    const auto r = amalgam::conjugate_into_factor(w);
    REQUIRE(r.has_value());
    CHECK(r->core.length() == 1);
    CHECK(same_element(r->conjugator.inverse() * w * r->conjugator, r->core));
  }
  CHECK(!amalgam::conjugate_into_factor(
             MWord({{Factor::First, 1}, {Factor::Second, 1}}))
              .has_value());
}

TEST_CASE("parity_check") {
  const MWord g({{Factor::First, 1}, {Factor::Second, 1}});
  auto rep = amalgam::parity_check(g, g.power(2));
  CHECK(rep.length1 == 2);
  CHECK(rep.length2 == 4);
  CHECK(rep.same_parity);
  CHECK_THROWS_AS(amalgam::parity_check(g, MWord::single(Factor::First, 1)),
                  NotCommuting);
  CHECK_THROWS_AS(amalgam::parity_check(g, MWord{}), PreconditionError);
}
