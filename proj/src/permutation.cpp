#include "rotod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rotod/errors.hpp"

namespace rotod {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("Permutation: image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return Permutation(std::move(id));
}

namespace {

struct Token {
  std::size_t value;
  std::size_t pos;
};

bool is_sep(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> size) {
  std::vector<std::vector<Token>> cycles;
  std::size_t pos = 0;
  std::size_t largest = 0;
  bool any = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle", pos - 1);
    std::string_view body = text.substr(pos, close - pos);
    bool separated = std::any_of(body.begin(), body.end(), is_sep);
    std::vector<Token> cycle;
    std::size_t i = 0;
    while (i < body.size()) {
      if (is_sep(body[i])) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[i]))) throw ParseError("expected a digit", pos + i);
      std::size_t start = i;
      std::size_t v = 0;
      if (separated) {
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
          v = v * 10 + static_cast<std::size_t>(body[i++] - '0');
      } else {
        v = static_cast<std::size_t>(body[i++] - '0');
      }
      cycle.push_back({v, pos + start});
      largest = std::max(largest, v);
      any = true;
    }
    if (cycle.empty()) throw ParseError("empty cycle", pos);
    cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  if (!any) throw ParseError("no cycles", 0);
  std::size_t n = size.value_or(largest + 1);
  if (largest >= n) throw ParseError("symbol " + std::to_string(largest) + " exceeds size " + std::to_string(n), 0);
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (used[cycle[j].value]) throw ParseError("symbol repeated", cycle[j].pos);
      used[cycle[j].value] = true;
      images[cycle[j].value] = cycle[(j + 1) % cycle.size()].value;
    }
  }
  return Permutation(std::move(images));
}

Permutation parse_images(std::string_view text, std::optional<std::size_t> size) {
  std::vector<Token> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (is_sep(c) || c == '[' || c == ']') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a digit", pos);
    std::size_t start = pos;
    std::size_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
    values.push_back({v, start});
  }
  if (values.empty()) throw ParseError("empty image list", 0);
  if (size && *size != values.size())
    throw ParseError("image list has " + std::to_string(values.size()) + " entries, expected " +
                         std::to_string(*size),
                     0);
  std::vector<bool> seen(values.size(), false);
  std::vector<std::size_t> images;
  for (const auto& t : values) {
    if (t.value >= values.size()) throw ParseError("image out of range", t.pos);
    if (seen[t.value]) throw ParseError("image repeated", t.pos);
    seen[t.value] = true;
    images.push_back(t.value);
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::optional<std::size_t> size) {
  auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw ParseError("empty permutation", 0);
  if (text[first] == '(') return parse_cycles(text, size);
  return parse_images(text, size);
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.size() != size()) throw PreconditionError("Permutation::after: size mismatch");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[inner.images_[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool spaced = size() > 10;
  for (const auto& cycle : cycles()) {
    os << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (spaced && j > 0) os << ' ';
      os << cycle[j];
    }
    os << ')';
  }
  return os.str();
}

std::string Permutation::to_image_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << images_[i];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace rotod
