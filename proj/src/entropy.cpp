#include "rotod/entropy.hpp"

#include <cmath>

#include "rotod/errors.hpp"

namespace rotod {

std::vector<EntropyTerm> entropy_bound(std::uint64_t q, std::uint64_t k_max, NConvention convention) {
  if (k_max == 0) throw PreconditionError("entropy_bound: k_max must be at least 1");
  const std::uint32_t n = exponent_for(q, convention);
  std::vector<EntropyTerm> out;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    EntropyTerm t;
    t.k = k;
    t.m = k * ((std::uint64_t{1} << n) - 1) * q;
    t.lambda = BigRational(BigInt(1), BigInt(1) << (k * n));
    t.value = t.lambda.convert_to<long double>() * std::log(static_cast<long double>(t.m));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace rotod
