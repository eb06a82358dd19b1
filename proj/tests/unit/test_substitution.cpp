#include <doctest.h>

#include "rotod/errors.hpp"
#include "rotod/integer_matrix.hpp"
#include "rotod/substitution.hpp"

using namespace rotod;

namespace {

Substitution sub(std::initializer_list<const char*> words, std::size_t q) {
  std::vector<Word> w;
  for (const char* s : words) w.push_back(parse_word(s, q));
  return Substitution(w);
}

}  // namespace

TEST_CASE("word parsing and printing") {
  CHECK(parse_word("0221", 3) == Word{0, 2, 2, 1});
  CHECK(word_to_string(Word{0, 2, 2, 1}, 3) == "0221");
  CHECK(parse_word("0 10 3", 11) == Word{0, 10, 3});
  CHECK(word_to_string(Word{0, 10, 3}, 11) == "0 10 3");
  CHECK_THROWS_AS(parse_word("03", 3), ParseError);
  CHECK_THROWS_AS(parse_word("0a", 3), ParseError);
}

TEST_CASE("substitution validation") {
  CHECK_THROWS_AS(Substitution({Word{0}, Word{}}), PreconditionError);
  CHECK_THROWS_AS(Substitution({Word{0}, Word{2}}), PreconditionError);
  CHECK(Substitution::identity(3).apply(Word{2, 1}) == Word{2, 1});
}

TEST_CASE("apply and prefix") {
  Substitution s = sub({"0221", "0221", "0011"}, 3);
  CHECK(s.apply(Word{0}) == parse_word("0221", 3));
  Word w2 = s.apply(s.apply(Word{0}));
  CHECK(word_to_string(w2, 3) == "0221001100110221");
  for (std::size_t n = 0; n <= 20; ++n) {
    Word full = s.apply(w2);
    Word pre = s.apply_prefix(w2, n);
    CHECK(pre == Word(full.begin(), full.begin() + std::min(n, full.size())));
  }
  CHECK(s.total_length() == 12);
  CHECK(s.to_string() == "0 -> 0221\n1 -> 0221\n2 -> 0011\n");
}

TEST_CASE("properness and primitivity") {
  Substitution s = sub({"0221", "0221", "0011"}, 3);
  CHECK(s.is_proper());
  CHECK(sub({"0112211220", "0", "0"}, 3).is_proper());
  CHECK_FALSE(sub({"01", "10"}, 2).is_proper());
  CHECK(s.is_primitive());
  CHECK(sub({"01", "01"}, 2).is_proper());
  Substitution reducible = sub({"01461360", "0", "0", "0", "0", "0", "0"}, 7);
  CHECK_FALSE(reducible.is_primitive());
  CHECK(sub({"1", "0"}, 2).is_primitive() == false);
  CHECK(sub({"01", "0"}, 2).is_primitive());
}

TEST_CASE("associated matrix counts letters") {
  Substitution s = sub({"04212", "042", "04012", "040133413342013341334212", "012"}, 5);
  IntegerMatrix m = associated_matrix(s);
  CHECK(m == IntegerMatrix{{1, 1, 2, 0, 1}, {1, 0, 1, 0, 1}, {2, 1, 1, 0, 1}, {3, 5, 3, 8, 5}, {1, 1, 1, 0, 0}});
  std::vector<BigInt> lengths = m.row_sums();
  for (Letter i = 0; i < 5; ++i) CHECK(lengths[i] == s[i].size());
}

TEST_CASE("composition and its matrix") {
  Substitution a = sub({"0221", "0221", "0011"}, 3);
  Substitution b = sub({"0112211220", "0", "0"}, 3);
  Substitution ab = compose_substitutions(a, b);
  for (Letter i = 0; i < 3; ++i) CHECK(ab[i] == a.apply(b[i]));
  CHECK(associated_matrix(ab) == associated_matrix(b) * associated_matrix(a));
  CHECK(compose_substitutions(a, Substitution::identity(3)) == a);
}

TEST_CASE("letters in images") {
  Substitution s = sub({"01461360", "0", "0", "0", "0", "0", "0"}, 7);
  std::vector<bool> only0(7, false);
  only0[0] = true;
  CHECK(letters_in_images(s, only0) == std::vector<bool>{true, true, false, true, true, false, true});
}

TEST_CASE("integer matrix helpers") {
  IntegerMatrix m{{1, 2}, {0, 3}};
  CHECK(m * IntegerMatrix::identity(2) == m);
  CHECK((m * std::vector<BigInt>{1, 1}) == std::vector<BigInt>{3, 3});
  CHECK(m.is_nonnegative());
  CHECK_FALSE(m.is_primitive());
  CHECK(IntegerMatrix{{0, 1}, {1, 1}}.is_primitive());
  CHECK(m.restricted({1}) == IntegerMatrix{{3}});
  CHECK(m.relabeled({1, 0}) == IntegerMatrix{{3, 0}, {2, 1}});
  CHECK_THROWS(m.relabeled({0, 0}));
  CHECK(m.to_string() == "[1 2]\n[0 3]\n");
  CHECK(IntegerMatrix(3).is_zero());
}
