#pragma once

#include <cstdint>
#include <vector>

#include "rotod/cell_map.hpp"
#include "rotod/substitution.hpp"

namespace rotod {

/// One first-return step: the return map of F_perm to L_1 is a scaled copy
/// of F_next, and chi records the subinterval letters each coding cell
/// passes through before it re-enters L_1.
struct RenormStep {
  Permutation next;
  Substitution chi;
  /// Level-1 cells never reached by the return orbits of the coding cells.
  std::vector<std::uint64_t> unvisited_cells;
};

RenormStep renorm_step(const Permutation& perm, NConvention convention = NConvention::Geq);

struct LevelRecord {
  std::size_t level = 0;
  /// The permutation the level was computed from (pi_{k-1}).
  Permutation source;
  /// pi_k.
  Permutation perm;
  Substitution chi;
  IntegerMatrix matrix;
  std::vector<std::size_t> return_times;
  bool covering = false;
  std::vector<std::uint64_t> unvisited_cells;
};

/// The eventually periodic sequence of levels of a rotated odometer.
///
/// records[k-1] describes level k. The stored records are the preperiod
/// (levels 1..k0) followed by one period (levels k0+1..k0+p0); every later
/// level repeats the period.
struct RenormSeq {
  std::uint64_t q = 0;
  std::uint32_t n_exp = 0;
  NConvention convention = NConvention::Geq;
  Permutation initial;
  std::vector<LevelRecord> records;
  std::size_t preperiod = 0;  // k0
  std::size_t period = 1;     // p0

  /// Record of any level k >= 1, following the periodic tail.
  const LevelRecord& level(std::size_t k) const;
  const Substitution& chi(std::size_t k) const { return level(k).chi; }
  const IntegerMatrix& matrix(std::size_t k) const { return level(k).matrix; }
  bool is_stationary() const noexcept { return preperiod == 0 && period == 1; }
  /// Index into `records` of level k.
  std::size_t record_index(std::size_t k) const;
};

RenormSeq renorm_sequence(const RotatedOdometer& sys);

enum class PeriodicClass { Empty, Finite, Infinite };

const char* to_string(PeriodicClass c);

/// Empty when every stored level covers, Infinite when a level of the
/// period fails to cover, Finite when only preperiod levels fail.
PeriodicClass covering_status(const RenormSeq& seq);

/// Half-open [lo, hi) with exact endpoints; hi may equal 1.
struct Interval {
  BigRational lo;
  BigRational hi;
};

/// Union of the resolution-k cells whose forward cell orbit is a cycle
/// avoiding H, merged into maximal half-open intervals, ascending.
std::vector<Interval> periodic_region(const RotatedOdometer& sys, std::uint32_t k,
                                      const Limits& limits = {});

/// Sum of interval lengths.
BigRational total_length(const std::vector<Interval>& intervals);

}  // namespace rotod
