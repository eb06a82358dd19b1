#include "rotod/integer_matrix.hpp"

#include <sstream>

#include "rotod/errors.hpp"

namespace rotod {

IntegerMatrix::IntegerMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntegerMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw PreconditionError("IntegerMatrix: rows must form a square");
    std::size_t j = 0;
    for (long long v : row) data_[i * n_ + j++] = v;
    ++i;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntegerMatrix::row_sums() const {
  std::vector<BigInt> out(n_, BigInt(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j);
  return out;
}

bool IntegerMatrix::is_nonnegative() const {
  for (const auto& v : data_)
    if (v < 0) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntegerMatrix::is_primitive() const {
  if (n_ == 0 || !is_nonnegative()) return false;
  // Boolean powers; the exponent (n-1)^2 + 1 suffices.
  std::vector<char> a(n_ * n_), p(n_ * n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) a[i] = p[i] = data_[i] > 0;
  const std::size_t bound = (n_ - 1) * (n_ - 1) + 1;
  for (std::size_t e = 1;; ++e) {
    bool all = true;
    for (char c : p) all = all && c;
    if (all) return true;
    if (e >= bound) return false;
    std::vector<char> r(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (p[i * n_ + k])
          for (std::size_t j = 0; j < n_; ++j) r[i * n_ + j] |= a[k * n_ + j];
    p.swap(r);
  }
}

IntegerMatrix IntegerMatrix::restricted(const std::vector<std::size_t>& indices) const {
  IntegerMatrix m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) m(a, b) = (*this)(indices.at(a), indices.at(b));
  return m;
}

IntegerMatrix IntegerMatrix::relabeled(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) throw PreconditionError("IntegerMatrix::relabeled: order has wrong length");
  std::vector<bool> seen(n_, false);
  for (std::size_t v : order) {
    if (v >= n_ || seen[v]) throw PreconditionError("IntegerMatrix::relabeled: order is not a permutation");
    seen[v] = true;
  }
  return restricted(order);
}

std::string IntegerMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    cells[i] = data_[i].str();
    width = std::max(width, cells[i].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      const std::string& c = cells[i * n_ + j];
      if (j) os << ' ';
      os << std::string(width - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("IntegerMatrix: size mismatch in product");
  const std::size_t n = a.n_;
  IntegerMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

std::vector<BigInt> operator*(const IntegerMatrix& a, const std::vector<BigInt>& v) {
  if (v.size() != a.n_) throw PreconditionError("IntegerMatrix: size mismatch in matrix-vector product");
  std::vector<BigInt> r(a.n_, BigInt(0));
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      if (a(i, j) != 0) r[i] += a(i, j) * v[j];
  return r;
}

}  // namespace rotod
