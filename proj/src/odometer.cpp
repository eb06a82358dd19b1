#include "rotod/odometer.hpp"

#include <numeric>

#include "rotod/errors.hpp"

namespace rotod {

std::uint32_t exponent_for(std::uint64_t q, NConvention convention) {
  if (q == 0) throw PreconditionError("exponent_for: q must be positive");
  if (q == 1) return 1;
  std::uint32_t n = 0;
  while (true) {
    std::uint64_t p = std::uint64_t{1} << n;
    if (convention == NConvention::Geq ? p >= q : p > q) return n;
    ++n;
  }
}

RotatedOdometer::RotatedOdometer(Permutation pi, NConvention convention)
    : pi_(std::move(pi)), convention_(convention), n_exp_(0) {
  if (pi_.size() == 0) throw PreconditionError("RotatedOdometer: empty permutation");
  n_exp_ = exponent_for(pi_.size(), convention_);
}

bool RotatedOdometer::is_power_of_two() const noexcept {
  std::uint64_t n = q();
  return n >= 2 && (n & (n - 1)) == 0;
}

namespace {

std::size_t bit_length(const BigInt& v) { return v == 0 ? 0 : boost::multiprecision::msb(v) + 1; }

}  // namespace

std::uint32_t vnk_branch(const Dyadic& x) {
  // 1 - x = r / D lies in (2^{-n}, 2^{1-n}].
  BigInt d = x.denominator();
  BigInt r = d - x.numerator();
  std::size_t guess = bit_length(d) - bit_length(r);
  std::uint32_t n = guess > 0 ? static_cast<std::uint32_t>(guess) : 1;
  while ((r << n) <= d) ++n;
  while (n > 1 && (r << (n - 1)) > d) --n;
  return n;
}

Dyadic vnk_map(const Dyadic& x) {
  std::uint32_t n = vnk_branch(x);
  std::uint32_t m = std::max(x.log2_den(), n);
  BigInt f = x.q_factor();
  BigInt num = x.numerator_at(m) - (f << m) + ((3 * f) << (m - n));
  return Dyadic(num, m, x.q_factor());
}

std::size_t letter_of(const RotatedOdometer& sys, const Dyadic& x) {
  return static_cast<std::size_t>(x.floor_times(sys.q()));
}

Dyadic rotation_map(const RotatedOdometer& sys, const Dyadic& x) {
  const std::uint64_t q = sys.q();
  std::uint64_t f = std::lcm(x.q_factor(), q);
  Dyadic y = x.rebased(f);
  std::size_t i = letter_of(sys, y);
  // (pi(i) - i) / q over the denominator f * 2^k.
  BigInt shift = (BigInt(static_cast<long long>(sys.pi()(i))) - static_cast<long long>(i)) * (f / q);
  BigInt num = y.numerator() + (shift << y.log2_den());
  return Dyadic(num, y.log2_den(), f);
}

Dyadic rotated_map(const RotatedOdometer& sys, const Dyadic& x) { return vnk_map(rotation_map(sys, x)); }

Itinerary orbit_itinerary(const RotatedOdometer& sys, const Dyadic& x, std::size_t n) {
  if (n == 0) throw PreconditionError("orbit_itinerary: n must be at least 1");
  Itinerary out;
  out.points.reserve(n);
  out.letters.reserve(n);
  Dyadic p = x.rebased(std::lcm(x.q_factor(), sys.q()));
  for (std::size_t t = 0; t < n; ++t) {
    out.letters.push_back(static_cast<std::uint32_t>(letter_of(sys, p)));
    out.points.push_back(p);
    if (t + 1 < n) p = rotated_map(sys, p);
  }
  return out;
}

}  // namespace rotod
