#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rotod/integer_matrix.hpp"

namespace rotod {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Digits juxtaposed for alphabets of at most ten letters, otherwise
/// space-separated decimal letters.
std::string word_to_string(const Word& w, std::size_t alphabet_size);
/// Inverse of word_to_string; throws ParseError.
Word parse_word(std::string_view text, std::size_t alphabet_size);

/// A map from letters {0..q-1} to nonempty words over the same alphabet.
class Substitution {
 public:
  Substitution() = default;
  /// Throws PreconditionError if a word is empty or uses a letter >= words.size().
  explicit Substitution(std::vector<Word> words);

  /// The substitution i -> i.
  static Substitution identity(std::size_t q);

  std::size_t alphabet_size() const noexcept { return words_.size(); }
  const Word& operator[](Letter i) const { return words_.at(i); }
  const std::vector<Word>& words() const noexcept { return words_; }

  /// Concatenates the images of the letters of w.
  Word apply(const Word& w) const;
  /// The first `limit` letters of apply(w), computed without expanding the rest.
  Word apply_prefix(const Word& w, std::size_t limit) const;

  std::size_t total_length() const;
  /// Every word starts with the same letter and ends with the same letter.
  bool is_proper() const;
  /// Some power has every letter in each image.
  bool is_primitive() const;

  /// Lines of the form "i -> word".
  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Word> words_;
};

/// entries[i][j] = number of occurrences of j in chi(i).
IntegerMatrix associated_matrix(const Substitution& chi);

/// result(i) = outer(inner(i)). Its matrix is matrix(inner) * matrix(outer).
Substitution compose_substitutions(const Substitution& outer, const Substitution& inner);

/// Letters occurring in the images of the given letters.
std::vector<bool> letters_in_images(const Substitution& chi, const std::vector<bool>& of);

}  // namespace rotod
