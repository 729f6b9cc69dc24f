#include "overshear/nilpotent.hpp"

#include <map>
#include <utility>

#include "overshear/error.hpp"

namespace overshear::nilpotent {
namespace {

void require_same_size(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size())
    throw PreconditionError("matrix sizes differ: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
}

mpq_class ratio(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

void require_supported(std::size_t n) {
  if (n < kMinSize || n > kMaxSize)
    throw PreconditionError("matrix size " + std::to_string(n) +
                            " outside the supported range 3..6");
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::elementary(std::size_t n, std::size_t i, std::size_t j,
                          const mpq_class& c) {
  Matrix m(n);
  m(i, j) = c;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& a : data_)
    if (sgn(a) != 0) return false;
  return true;
}

bool Matrix::is_strictly_upper() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool Matrix::is_unipotent() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_size(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_size(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix Matrix::scaled(const mpq_class& c) const {
  Matrix out = *this;
  for (auto& a : out.data_) a *= c;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.n_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix mexp(const Matrix& nil) {
  require_supported(nil.size());
  if (!nil.is_strictly_upper())
    throw PreconditionError("mexp needs a strictly upper-triangular matrix");
  const std::size_t n = nil.size();
  Matrix out = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = (term * nil).scaled(ratio(1, static_cast<long>(k)));
    out += term;
  }
  return out;
}

Matrix mlog(const Matrix& unipotent) {
  require_supported(unipotent.size());
  if (!unipotent.is_unipotent())
    throw PreconditionError("mlog needs a unipotent upper-triangular matrix");
  const std::size_t n = unipotent.size();
  const Matrix d = unipotent - Matrix::identity(n);
  Matrix out(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * d;
    const mpq_class c = ratio(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    out += power.scaled(c);
  }
  return out;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix bch_z(const Matrix& x, const Matrix& y) {
  require_same_size(x, y);
  return mlog(mexp(x) * mexp(y));
}

Matrix bch_k(const Matrix& x, const Matrix& y) {
  return bch_z(-bch_z(x, y), x + y);
}

std::vector<BasisElement> malcev_basis(std::size_t n) {
  std::vector<BasisElement> out;
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i + d < n; ++i) out.push_back({i, i + d});
  return out;
}

std::size_t min_depth(const Matrix& nil) {
  const std::size_t n = nil.size();
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i + d < n; ++i)
      if (sgn(nil(i, i + d)) != 0) return d;
  return n;
}

namespace {

void factor_algebra_element(const Matrix& x,
                            const std::vector<BasisElement>& basis,
                            std::vector<Factor>& out) {
  const std::size_t n = x.size();
  std::size_t lead = basis.size();
  std::size_t count = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(x(basis[k].row, basis[k].col)) == 0) continue;
    if (lead == basis.size()) lead = k;
    ++count;
  }
  if (count == 0) return;
  const mpq_class t = x(basis[lead].row, basis[lead].col);
  out.push_back({lead, t});
  if (count == 1) return;
  // exp(x) = exp(head) exp(rest) exp(K(head, rest))
  const Matrix head =
      Matrix::elementary(n, basis[lead].row, basis[lead].col, t);
  const Matrix rest = x - head;
  const Matrix k = bch_k(head, rest);
  factor_algebra_element(rest, basis, out);
  factor_algebra_element(k, basis, out);
}

}  // namespace

std::vector<Factor> decompose_product(const Matrix& g) {
  const Matrix x = mlog(g);
  std::vector<Factor> out;
  factor_algebra_element(x, malcev_basis(g.size()), out);
  return out;
}

std::size_t decomposition_length_bound(std::size_t n) {
  // count(d) = number of basis elements at depth >= d.
  auto count = [n](std::size_t d) {
    std::size_t c = 0;
    for (std::size_t e = d; e < n; ++e) c += n - e;
    return c;
  };
  // bound(m, d): m nonzero components, all at depth >= d.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  auto bound = [&](auto&& self, std::size_t m, std::size_t d) -> std::size_t {
    if (m <= 1) return m;
    auto key = std::make_pair(m, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t v =
        1 + self(self, m - 1, d) + (d + 1 < n ? self(self, count(d + 1), d + 1) : 0);
    memo[key] = v;
    return v;
  };
  return bound(bound, count(1), 1);
}

Matrix reconstruct(std::size_t n, const std::vector<Factor>& factors) {
  const auto basis = malcev_basis(n);
  Matrix out = Matrix::identity(n);
  for (const auto& f : factors) {
    if (f.index >= basis.size())
      throw PreconditionError("basis index out of range");
    out = out * mexp(Matrix::elementary(n, basis[f.index].row,
                                        basis[f.index].col, f.t));
  }
  return out;
}

namespace {

mpq_class random_entry(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  const long p = num(rng);
  return ratio(p, den(rng));
}

}  // namespace

Matrix random_nil(std::size_t n, std::mt19937_64& rng, long max_num,
                  long max_den) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m(i, j) = random_entry(rng, max_num, max_den);
  return m;
}

Matrix random_unipotent(std::size_t n, std::mt19937_64& rng, long max_num,
                        long max_den) {
  return random_nil(n, rng, max_num, max_den) + Matrix::identity(n);
}

}  // namespace overshear::nilpotent
