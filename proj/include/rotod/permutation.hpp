#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rotod {

/// Bijection of {0, ..., size-1}, stored as its image array.
///
/// In a rotated odometer, images()[i] is the index of the subinterval that
/// receives subinterval i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  /// Accepts cycle notation ("(012)", "(0)(12)(3)(4)", "(0 10 3)(1 2)") or
  /// an image list ("1,2,0", "[1, 2, 0]"). Cycle notation needs `size` when
  /// trailing fixed points are omitted; otherwise the size is the largest
  /// symbol plus one. Throws ParseError with the offending position.
  static Permutation parse(std::string_view text, std::optional<std::size_t> size = std::nullopt);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (*this ∘ inner)(i) = (*this)(inner(i)).
  Permutation after(const Permutation& inner) const;
  bool is_identity() const;

  /// Cycles in canonical order: each starts at its least element, cycles are
  /// sorted by that element, fixed points included.
  std::vector<std::vector<std::size_t>> cycles() const;

  /// Cycle notation; symbols are juxtaposed when size() <= 10 and
  /// space-separated otherwise, e.g. "(02413)" or "(0)(12)(3)(4)".
  std::string to_cycle_string() const;
  /// Comma-separated image list, e.g. "2,0,4,1,3".
  std::string to_image_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::size_t> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// All permutations of {0..n-1} in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace rotod
