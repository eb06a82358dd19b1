#include "rotod/substitution.hpp"

#include <cctype>
#include <sstream>

#include "rotod/errors.hpp"

namespace rotod {

std::string word_to_string(const Word& w, std::size_t alphabet_size) {
  std::string out;
  const bool compact = alphabet_size <= 10;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t alphabet_size) {
  Word w;
  const bool compact = alphabet_size <= 10;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unexpected character in word", i);
    std::size_t start = i;
    std::uint64_t v = 0;
    if (compact) {
      v = static_cast<std::uint64_t>(c - '0');
      ++i;
    } else {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= alphabet_size) break;
        ++i;
      }
    }
    if (v >= alphabet_size) throw ParseError("letter outside the alphabet", start);
    w.push_back(static_cast<Letter>(v));
  }
  return w;
}

Substitution::Substitution(std::vector<Word> words) : words_(std::move(words)) {
  const std::size_t q = words_.size();
  for (std::size_t i = 0; i < q; ++i) {
    if (words_[i].empty())
      throw PreconditionError("Substitution: image of letter " + std::to_string(i) + " is empty");
    for (Letter l : words_[i])
      if (l >= q) throw PreconditionError("Substitution: letter " + std::to_string(l) + " outside the alphabet");
  }
}

Substitution Substitution::identity(std::size_t q) {
  std::vector<Word> words(q);
  for (std::size_t i = 0; i < q; ++i) words[i] = {static_cast<Letter>(i)};
  return Substitution(std::move(words));
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& img = words_.at(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word Substitution::apply_prefix(const Word& w, std::size_t limit) const {
  Word out;
  out.reserve(limit);
  for (Letter l : w) {
    for (Letter m : words_.at(l)) {
      if (out.size() >= limit) return out;
      out.push_back(m);
    }
  }
  return out;
}

std::size_t Substitution::total_length() const {
  std::size_t n = 0;
  for (const auto& w : words_) n += w.size();
  return n;
}

bool Substitution::is_proper() const {
  if (words_.empty()) return false;
  for (const auto& w : words_)
    if (w.front() != words_[0].front() || w.back() != words_[0].back()) return false;
  return true;
}

bool Substitution::is_primitive() const { return associated_matrix(*this).is_primitive(); }

std::string Substitution::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < words_.size(); ++i)
    os << i << " -> " << word_to_string(words_[i], words_.size()) << '\n';
  return os.str();
}

IntegerMatrix associated_matrix(const Substitution& chi) {
  IntegerMatrix m(chi.alphabet_size());
  for (std::size_t i = 0; i < chi.alphabet_size(); ++i)
    for (Letter l : chi[static_cast<Letter>(i)]) m(i, l) += 1;
  return m;
}

Substitution compose_substitutions(const Substitution& outer, const Substitution& inner) {
  if (outer.alphabet_size() != inner.alphabet_size())
    throw PreconditionError("compose_substitutions: alphabet sizes differ");
  std::vector<Word> words;
  words.reserve(inner.alphabet_size());
  for (const auto& w : inner.words()) words.push_back(outer.apply(w));
  return Substitution(std::move(words));
}

std::vector<bool> letters_in_images(const Substitution& chi, const std::vector<bool>& of) {
  std::vector<bool> out(chi.alphabet_size(), false);
  for (std::size_t i = 0; i < of.size() && i < chi.alphabet_size(); ++i)
    if (of[i])
      for (Letter l : chi[static_cast<Letter>(i)]) out[l] = true;
  return out;
}

}  // namespace rotod
