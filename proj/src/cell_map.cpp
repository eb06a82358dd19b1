#include "rotod/cell_map.hpp"

#include <algorithm>

#include "rotod/errors.hpp"

namespace rotod {

CellMap::CellMap(const RotatedOdometer& sys, std::uint32_t k, const Limits& limits)
    : images_(sys.pi().images()), q_(sys.q()), k_(k) {
  if (k == 0) throw PreconditionError("CellMap: resolution must be at least 1");
  const std::uint64_t shift = std::uint64_t{k} * sys.n_exp();
  if (shift >= 62 || (q_ << shift) >> shift != q_ || (q_ << shift) > limits.max_cells)
    throw CapacityError("CellMap: q * 2^(kN) exceeds the cell budget of " + std::to_string(limits.max_cells) +
                        " (q = " + std::to_string(q_) + ", k = " + std::to_string(k) + ")");
  per_interval_ = std::uint64_t{1} << shift;
  count_ = q_ * per_interval_;

  std::vector<std::size_t> inv(q_);
  for (std::size_t i = 0; i < q_; ++i) inv[images_[i]] = i;
  const std::uint64_t src = inv[q_ - 1];
  h_cells_.reserve(q_);
  for (std::uint64_t c = count_ - q_; c < count_; ++c) h_cells_.push_back(c - (q_ - 1 - src) * per_interval_);
  std::sort(h_cells_.begin(), h_cells_.end());
}

std::uint64_t CellMap::rotate(std::uint64_t cell) const {
  const std::uint64_t b = cell / per_interval_;
  return cell - b * per_interval_ + images_[b] * per_interval_;
}

bool CellMap::is_h_cell(std::uint64_t cell) const { return rotate(cell) >= count_ - q_; }

std::optional<std::uint64_t> CellMap::next(std::uint64_t cell) const {
  if (cell >= count_) throw PreconditionError("CellMap::next: cell index out of range");
  const std::uint64_t r = rotate(cell);
  if (r >= count_ - q_) return std::nullopt;
  // 1 - x = s / C with q 2^t < s <= q 2^{t+1} selects the branch of a.
  const std::uint64_t s = count_ - r;
  std::uint64_t t = 0;
  while ((q_ << (t + 1)) < s) ++t;
  return r + 3 * (q_ << t) - count_;
}

std::vector<std::uint64_t> CellMap::l_cells() const {
  std::vector<std::uint64_t> out(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out[i] = i;
  return out;
}

Dyadic CellMap::left_endpoint(std::uint64_t cell) const {
  if (cell >= count_) throw PreconditionError("CellMap::left_endpoint: cell index out of range");
  return Dyadic(BigInt(cell), static_cast<std::uint32_t>(__builtin_ctzll(per_interval_)), q_);
}

}  // namespace rotod
