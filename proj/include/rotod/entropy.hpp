#pragma once

#include <cstdint>
#include <vector>

#include "rotod/bigint.hpp"
#include "rotod/odometer.hpp"

namespace rotod {

struct EntropyTerm {
  std::uint64_t k = 0;
  std::uint64_t m = 0;          // k (2^N - 1) q
  BigRational lambda;           // 2^{-kN}
  long double value = 0;        // lambda * log(m)
};

/// The vanishing upper bounds Lambda_{m_k} log m_k, k = 1..k_max, on the
/// Lebesgue entropy of F_pi.
std::vector<EntropyTerm> entropy_bound(std::uint64_t q, std::uint64_t k_max,
                                       NConvention convention = NConvention::Geq);

}  // namespace rotod
