#pragma once

#include <cstddef>
#include <vector>

#include "rotod/integer_matrix.hpp"
#include "rotod/permutation.hpp"

namespace rotod {

/// Lower block-triangular presentation of a nonnegative matrix.
///
/// Blocks are the strongly connected components of the digraph i -> j iff
/// M(i,j) > 0, ordered so that every entry above the diagonal blocks of the
/// relabeled matrix vanishes. Ties are broken by smallest member, and labels
/// inside a block stay ascending, so the form is deterministic.
struct FrobeniusForm {
  /// order[k] = original label placed at position k.
  std::vector<std::size_t> order;
  /// relabeling(original) = position.
  Permutation relabeling;
  /// Components in original labels, in block order.
  std::vector<std::vector<std::size_t>> blocks;
  /// Start position of each block in the relabeled matrix (plus a final end).
  std::vector<std::size_t> offsets;
  /// Components again, with runs of consecutive zero singletons that have no
  /// entries between them merged into one zero block (the usual display).
  std::vector<std::vector<std::size_t>> display_blocks;
  IntegerMatrix block_view;

  /// Diagonal block `b` in original labels.
  IntegerMatrix diagonal_block(const IntegerMatrix& m, std::size_t b) const;
  bool is_zero_block(const IntegerMatrix& m, std::size_t b) const;
};

FrobeniusForm frobenius_form(const IntegerMatrix& m);

/// Strongly connected components via Tarjan's algorithm, each sorted.
std::vector<std::vector<std::size_t>> strongly_connected_components(const IntegerMatrix& m);

}  // namespace rotod
