#include "rotod/dyadic.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rotod/errors.hpp"

namespace rotod {

namespace {

BigInt pow2(std::uint32_t k) { return BigInt(1) << k; }

std::uint64_t parse_u64(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number", pos);
  return value;
}

BigInt parse_big(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected a number", pos);
  return BigInt(std::string(text.substr(start, pos - start)));
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool expect(std::string_view text, std::size_t& pos, char c) {
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] == c) {
    ++pos;
    skip_spaces(text, pos);
    return true;
  }
  return false;
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::uint32_t log2_den, std::uint64_t q_factor)
    : num_(std::move(numerator)), log2_den_(log2_den), q_factor_(q_factor) {
  if (q_factor_ == 0) throw PreconditionError("Dyadic: q_factor must be positive");
  if (num_ < 0 || num_ >= denominator())
    throw PreconditionError("Dyadic: value outside [0,1): " + num_.str() + "/(" +
                            std::to_string(q_factor_) + "*2^" + std::to_string(log2_den_) + ")");
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_ == 0) {
    log2_den_ = 0;
    return;
  }
  while (log2_den_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --log2_den_;
  }
}

BigInt Dyadic::denominator() const { return BigInt(q_factor_) * pow2(log2_den_); }

Dyadic Dyadic::rebased(std::uint64_t f) const {
  if (f == 0 || f % q_factor_ != 0)
    throw PreconditionError("Dyadic::rebased: " + std::to_string(f) + " is not a multiple of " +
                            std::to_string(q_factor_));
  Dyadic out;
  out.num_ = num_ * (f / q_factor_);
  out.log2_den_ = log2_den_;
  out.q_factor_ = f;
  out.canonicalize();
  return out;
}

BigInt Dyadic::numerator_at(std::uint32_t k) const {
  if (k < log2_den_) throw PreconditionError("Dyadic::numerator_at: exponent too small");
  return num_ << (k - log2_den_);
}

BigInt Dyadic::floor_times(std::uint64_t m) const { return (num_ * m) / denominator(); }

double Dyadic::to_double() const {
  BigRational r(num_, denominator());
  return static_cast<double>(r);
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  os << num_ << "/(" << q_factor_ << "*2^" << log2_den_ << ")";
  return os.str();
}

Dyadic Dyadic::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  BigInt num = parse_big(text, pos);
  skip_spaces(text, pos);
  if (pos == text.size()) {
    if (num != 0) throw ParseError("a point of [0,1) needs a denominator", pos);
    return Dyadic::zero();
  }
  if (!expect(text, pos, '/')) throw ParseError("expected '/'", pos);
  std::uint64_t q = 1;
  std::uint32_t k = 0;
  if (expect(text, pos, '(')) {
    q = parse_u64(text, pos);
    if (!expect(text, pos, '*')) throw ParseError("expected '*'", pos);
    std::uint64_t two = parse_u64(text, pos);
    if (two != 2) throw ParseError("expected base 2", pos);
    if (!expect(text, pos, '^')) throw ParseError("expected '^'", pos);
    k = static_cast<std::uint32_t>(parse_u64(text, pos));
    if (!expect(text, pos, ')')) throw ParseError("expected ')'", pos);
  } else {
    std::size_t save = pos;
    std::uint64_t base = parse_u64(text, pos);
    if (expect(text, pos, '^')) {
      if (base != 2) throw ParseError("expected base 2", save);
      k = static_cast<std::uint32_t>(parse_u64(text, pos));
    } else {
      if (base == 0) throw ParseError("zero denominator", save);
      while (base % 2 == 0) {
        base /= 2;
        ++k;
      }
      q = base;
    }
  }
  skip_spaces(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (num >= BigInt(q) * pow2(k)) throw ParseError("value outside [0,1)", 0);
  return Dyadic(num, k, q);
}

bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint32_t k = std::max(a.log2_den_, b.log2_den_);
  BigInt lhs = a.numerator_at(k) * b.q_factor_;
  BigInt rhs = b.numerator_at(k) * a.q_factor_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& x) { return os << x.to_string(); }

Dyadic make_unit_dyadic(const BigInt& num, std::uint32_t k, std::uint64_t q_factor) {
  return Dyadic(num, k, q_factor);
}

}  // namespace rotod
