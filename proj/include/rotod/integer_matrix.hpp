#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rotod/bigint.hpp"

namespace rotod {

/// Square matrix of arbitrary-precision integers (row-major).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::vector<BigInt> row_sums() const;
  bool is_nonnegative() const;
  bool is_zero() const;
  /// Some power has all entries positive (Wielandt bound on the exponent).
  bool is_primitive() const;

  /// Principal submatrix on the given indices, in the given order.
  IntegerMatrix restricted(const std::vector<std::size_t>& indices) const;
  /// P A P^{-1} where new index k corresponds to old index order[k].
  IntegerMatrix relabeled(const std::vector<std::size_t>& order) const;

  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend std::vector<BigInt> operator*(const IntegerMatrix& a, const std::vector<BigInt>& v);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

}  // namespace rotod
