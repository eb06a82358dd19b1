#pragma once

#include <cstdint>
#include <vector>

#include "rotod/dyadic.hpp"
#include "rotod/permutation.hpp"

namespace rotod {

/// Which reading of the exponent N is in force. `Geq` takes the least n with
/// 2^n >= q, `Strict` the least n with 2^n > q; they differ only when q is a
/// power of two. q = 1 always uses N = 1.
enum class NConvention { Geq, Strict };

std::uint32_t exponent_for(std::uint64_t q, NConvention convention);

/// The map a ∘ R_pi on [0,1) for a permutation pi of q symbols.
class RotatedOdometer {
 public:
  explicit RotatedOdometer(Permutation pi, NConvention convention = NConvention::Geq);

  std::uint64_t q() const noexcept { return pi_.size(); }
  const Permutation& pi() const noexcept { return pi_; }
  std::uint32_t n_exp() const noexcept { return n_exp_; }
  NConvention convention() const noexcept { return convention_; }

  /// q = 2^n: permitted, but outside the range the analysis is tuned for.
  bool is_power_of_two() const noexcept;
  bool is_degenerate() const noexcept { return q() == 1; }

 private:
  Permutation pi_;
  NConvention convention_;
  std::uint32_t n_exp_;
};

/// Branch index n >= 1 of the von Neumann-Kakutani map at x, i.e. the n with
/// x in [1 - 2^{1-n}, 1 - 2^{-n}).
std::uint32_t vnk_branch(const Dyadic& x);

/// a(x) = x - 1 + 3 * 2^{-n} on [1 - 2^{1-n}, 1 - 2^{-n}).
Dyadic vnk_map(const Dyadic& x);

/// R_pi: translates subinterval [i/q, (i+1)/q) onto [pi(i)/q, (pi(i)+1)/q).
Dyadic rotation_map(const RotatedOdometer& sys, const Dyadic& x);

/// F_pi = a ∘ R_pi.
Dyadic rotated_map(const RotatedOdometer& sys, const Dyadic& x);

/// Index of the subinterval [i/q, (i+1)/q) holding x.
std::size_t letter_of(const RotatedOdometer& sys, const Dyadic& x);

struct Itinerary {
  std::vector<Dyadic> points;
  std::vector<std::uint32_t> letters;
};

/// First n orbit points of x under F_pi and the subinterval letter of each.
Itinerary orbit_itinerary(const RotatedOdometer& sys, const Dyadic& x, std::size_t n);

}  // namespace rotod
