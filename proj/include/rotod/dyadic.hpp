#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rotod/bigint.hpp"

namespace rotod {

/// Exact point of [0,1) of the form numerator / (q_factor * 2^log2_den).
///
/// Orbits and discontinuities of rotated odometers live in this set, so the
/// whole core can stay exact. The power of two is kept reduced (numerator is
/// odd whenever log2_den > 0); q_factor is carried as given so that printed
/// values keep the denominator shape of the system being studied. Equality
/// and ordering compare values, not representations.
class Dyadic {
 public:
  Dyadic() = default;
  /// Throws PreconditionError unless 0 <= numerator < q_factor * 2^log2_den.
  Dyadic(BigInt numerator, std::uint32_t log2_den, std::uint64_t q_factor = 1);

  static Dyadic zero(std::uint64_t q_factor = 1) { return Dyadic(0, 0, q_factor); }

  /// Parses "n/(q*2^k)", "n/2^k", "n/d" (d = q*2^k for some q) or "0".
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  std::uint32_t log2_den() const noexcept { return log2_den_; }
  std::uint64_t q_factor() const noexcept { return q_factor_; }
  BigInt denominator() const;

  /// Same value expressed over q_factor `f`; `f` must be a multiple of q_factor().
  Dyadic rebased(std::uint64_t f) const;

  /// Same value with denominator q_factor * 2^k for the given k >= log2_den().
  BigInt numerator_at(std::uint32_t k) const;

  /// floor(m * value) for a positive integer m.
  BigInt floor_times(std::uint64_t m) const;

  double to_double() const;

  /// "num/(q*2^k)"; always the full shape so the output parses back.
  std::string to_string() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  BigInt num_ = 0;
  std::uint32_t log2_den_ = 0;
  std::uint64_t q_factor_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& x);

/// Builds num / (q_factor * 2^k) from values that may lie outside [0,1);
/// used for intermediate arithmetic. Throws PreconditionError if the result
/// is not in [0,1).
Dyadic make_unit_dyadic(const BigInt& num, std::uint32_t k, std::uint64_t q_factor);

}  // namespace rotod
