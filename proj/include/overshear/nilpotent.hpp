#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace overshear::nilpotent {

// Square matrix with exact rational entries, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  static Matrix identity(std::size_t n);
  // E_{ij} (0-based) scaled by c.
  static Matrix elementary(std::size_t n, std::size_t i, std::size_t j,
                           const mpq_class& c = 1);

  std::size_t size() const noexcept { return n_; }
  mpq_class& operator()(std::size_t i, std::size_t j) {
    return data_[i * n_ + j];
  }
  const mpq_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  bool is_zero() const;
  bool is_strictly_upper() const;
  bool is_unipotent() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix scaled(const mpq_class& c) const;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<mpq_class> data_;
};

// Lie algebra elements are strictly upper-triangular matrices, group elements
// are unipotent upper-triangular matrices. Sizes 3..6 are supported.
inline constexpr std::size_t kMinSize = 3;
inline constexpr std::size_t kMaxSize = 6;

// Both throw PreconditionError on shape violations. The series are finite
// because (N)^n = 0.
Matrix mexp(const Matrix& nil);
Matrix mlog(const Matrix& unipotent);

Matrix commutator(const Matrix& x, const Matrix& y);

// Z with exp(x) exp(y) = exp(Z).
Matrix bch_z(const Matrix& x, const Matrix& y);
// K = Z(-Z(x, y), x + y), so that exp(x + y) = exp(x) exp(y) exp(K).
Matrix bch_k(const Matrix& x, const Matrix& y);

// Malcev basis: E_{i,i+d} ordered by depth d = 1, 2, ..., then by i.
struct BasisElement {
  std::size_t row;
  std::size_t col;
};
std::vector<BasisElement> malcev_basis(std::size_t n);
// Depth (superdiagonal index) of the lowest nonzero superdiagonal, or n when
// the matrix is zero.
std::size_t min_depth(const Matrix& nil);

struct Factor {
  std::size_t index;  // into malcev_basis(n)
  mpq_class t;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Factors whose ordered product of exp(t V_index) equals g. Built by peeling
// the leading basis component off log(g) and recursing into the remainder
// and into the correction K, which lies strictly deeper in the lower central
// series.
std::vector<Factor> decompose_product(const Matrix& g);

// Upper bound on decompose_product's output length for size n, from the
// recursion with full support at every depth.
std::size_t decomposition_length_bound(std::size_t n);

// Ordered product of exp(t V_index).
Matrix reconstruct(std::size_t n, const std::vector<Factor>& factors);

// Random strictly upper-triangular matrix; entries p/q with |p| <= max_num,
// 1 <= q <= max_den.
Matrix random_nil(std::size_t n, std::mt19937_64& rng, long max_num = 5,
                  long max_den = 4);
Matrix random_unipotent(std::size_t n, std::mt19937_64& rng, long max_num = 5,
                        long max_den = 4);

}  // namespace overshear::nilpotent
