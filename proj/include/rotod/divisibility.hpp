#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotod/diagram.hpp"

namespace rotod {

enum class HeightSeed {
  Ones,        ///< start the periodic part from (1,...,1)
  Telescoped,  ///< start it from M_{k0} ... M_1 (1,...,1)
};
enum class TargetAlphabet { Minimal, Full };

const char* to_string(HeightSeed s);
const char* to_string(TargetAlphabet a);

struct DivisibilityOptions {
  TargetAlphabet alphabet = TargetAlphabet::Minimal;
  HeightSeed seed = HeightSeed::Ones;
  /// Restrict the verdict to these letters; all active letters when empty.
  std::vector<Letter> letters;
};

/// Exact decision of "d divides h^{(n)}_i for all large n" from the complete
/// transient/cycle structure of the height vectors modulo d.
struct DivisibilityVerdict {
  std::uint64_t d = 0;
  DivisibilityOptions options;
  std::vector<Letter> active;  // letters of the alphabet tracked
  bool verdict = false;
  /// Verdict per active letter, aligned with `active`.
  std::vector<bool> per_letter;
  /// Residues each active letter takes along the cycle, ascending.
  std::vector<std::vector<std::uint64_t>> residue_cycles;
  std::size_t transient = 0;  // levels before the cycle is entered
  std::size_t cycle = 0;      // cycle length in levels
  /// A height vector mod d on the cycle with a nonzero tracked entry.
  std::optional<std::vector<std::uint64_t>> witness;
};

DivisibilityVerdict rational_eigenvalue(const RenormSeq& seq, std::uint64_t d,
                                        const DivisibilityOptions& options = {});

struct DyadicScan {
  std::vector<DivisibilityVerdict> steps;  // d = 2, 4, ..., up to the first failure
  std::size_t max_m = 0;
  bool all_pass = false;
  std::optional<std::size_t> fails_at;  // smallest failing m

  /// "pass m=1..M" or "fails at m=k"; passing is bounded evidence only.
  std::string summary() const;
};

/// Runs rational_eigenvalue for d = 2^m, m = 1..max_m. Stops at the first
/// failure: a failure at 2^m implies failure at every higher power.
DyadicScan dyadic_scan(const RenormSeq& seq, std::size_t max_m,
                       const DivisibilityOptions& options = {});

}  // namespace rotod
