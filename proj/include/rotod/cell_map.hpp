#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rotod/odometer.hpp"

namespace rotod {

struct Limits {
  /// Largest admissible number of cells q * 2^{kN}.
  std::uint64_t max_cells = std::uint64_t{1} << 26;
};

/// F_pi at dyadic resolution k, as a partial injection on the q * 2^{kN}
/// equal cells of [0,1).
///
/// F_pi is a translation on every cell except the q cells of
/// H = R_pi^{-1}([1 - 2^{-kN}, 1)), which a maps discontinuously onto the
/// first q cells (the coding cells of L_k = [0, 2^{-kN})). The image of a
/// cell is computed from two integer offsets, so nothing is stored per cell.
class CellMap {
 public:
  /// Throws PreconditionError for k == 0 and CapacityError when the cell
  /// count exceeds `limits.max_cells`.
  CellMap(const RotatedOdometer& sys, std::uint32_t k, const Limits& limits = {});

  std::uint32_t resolution() const noexcept { return k_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t cell_count() const noexcept { return count_; }
  std::uint64_t cells_per_interval() const noexcept { return per_interval_; }

  /// Image cell of `cell`; empty exactly on the H-cells.
  std::optional<std::uint64_t> next(std::uint64_t cell) const;
  bool is_h_cell(std::uint64_t cell) const;
  /// Subinterval letter of a cell.
  std::uint32_t letter(std::uint64_t cell) const { return static_cast<std::uint32_t>(cell / per_interval_); }

  /// The q cells of H, ascending.
  const std::vector<std::uint64_t>& h_cells() const noexcept { return h_cells_; }
  /// Coding cells 0..q-1 of L_k.
  std::vector<std::uint64_t> l_cells() const;

  /// Cell index after R_pi (a block move of whole subintervals).
  std::uint64_t rotate(std::uint64_t cell) const;

  Dyadic left_endpoint(std::uint64_t cell) const;

 private:
  std::vector<std::size_t> images_;
  std::uint64_t q_;
  std::uint32_t k_;
  std::uint64_t per_interval_;
  std::uint64_t count_;
  std::vector<std::uint64_t> h_cells_;
};

}  // namespace rotod
