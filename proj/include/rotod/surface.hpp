#pragma once

#include <cstdint>

#include "rotod/permutation.hpp"

namespace rotod {

/// Flow of slope q/p on the unit square; p = m q + r.
struct FlowSpec {
  std::uint64_t q = 0;
  std::uint64_t p = 0;

  std::uint64_t r() const noexcept { return p % q; }
  std::uint64_t m() const noexcept { return p / q; }
};

/// Permutation of the q bottom subintervals induced by the torus flow of
/// slope q/p: i -> (i + p) mod q. Requires q >= 2 and p >= 1.
Permutation slope_permutation(std::uint64_t q, std::uint64_t p);

/// Vertical-edge identification pi' = s ∘ t^{-1} ∘ pi ∘ s^{-1} on the lowest
/// q of the p vertical subintervals, identity on the rest, with
/// s(i) = q-1-i and t(i) = i + r mod q. Requires p >= q >= 2.
Permutation vertical_permutation(const Permutation& pi, std::uint64_t p);

/// Recovers pi = t ∘ s^{-1} ∘ pi' ∘ s from a vertical permutation.
Permutation horizontal_from_vertical(const Permutation& vertical, std::uint64_t q);

}  // namespace rotod
