#include "rotod/surface.hpp"

#include "rotod/errors.hpp"

namespace rotod {

Permutation slope_permutation(std::uint64_t q, std::uint64_t p) {
  if (q < 2 || p < 1) throw PreconditionError("slope_permutation: requires q >= 2 and p >= 1");
  std::vector<std::size_t> img(q);
  for (std::uint64_t i = 0; i < q; ++i) img[i] = static_cast<std::size_t>((i + p) % q);
  return Permutation(std::move(img));
}

Permutation vertical_permutation(const Permutation& pi, std::uint64_t p) {
  const std::uint64_t q = pi.size();
  if (q < 2 || p < q) throw PreconditionError("vertical_permutation: requires p >= q >= 2");
  const std::uint64_t r = p % q;
  std::vector<std::size_t> img(p);
  for (std::uint64_t k = 0; k < p; ++k) img[k] = k;
  for (std::uint64_t k = 0; k < q; ++k) {
    std::uint64_t i = q - 1 - k;                    // s^{-1}
    std::uint64_t j = pi(i);                        // pi
    std::uint64_t u = (j + q - r) % q;              // t^{-1}
    img[k] = static_cast<std::size_t>(q - 1 - u);   // s
  }
  return Permutation(std::move(img));
}

Permutation horizontal_from_vertical(const Permutation& vertical, std::uint64_t q) {
  const std::uint64_t p = vertical.size();
  if (q < 2 || p < q) throw PreconditionError("horizontal_from_vertical: requires p >= q >= 2");
  const std::uint64_t r = p % q;
  std::vector<std::size_t> img(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    std::uint64_t k = q - 1 - i;  // s
    std::uint64_t v = vertical(k);
    if (v >= q) throw PreconditionError("horizontal_from_vertical: lowest block is not preserved");
    std::uint64_t u = q - 1 - v;                        // s^{-1}
    img[i] = static_cast<std::size_t>((u + r) % q);     // t
  }
  return Permutation(std::move(img));
}

}  // namespace rotod
