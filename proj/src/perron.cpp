#include "rotod/perron.hpp"

#include <cmath>
#include <sstream>

#include "rotod/errors.hpp"

namespace rotod {

namespace {

using RatPoly = std::vector<BigRational>;  // leading first

void trim(RatPoly& p) {
  std::size_t lead = 0;
  while (lead + 1 < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p) r.emplace_back(c);
  trim(r);
  return r;
}

bool is_zero_poly(const RatPoly& p) { return p.empty() || (p.size() == 1 && p[0] == 0); }

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  const std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) d.push_back(p[i] * static_cast<long long>(deg - i));
  if (d.empty()) d.push_back(0);
  return d;
}

// Remainder of a divided by b, b nonzero.
RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (!is_zero_poly(a) && a.size() >= b.size()) {
    BigRational f = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a.erase(a.begin());
    trim(a);
  }
  if (a.empty()) a.push_back(0);
  return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  while (a.size() >= b.size()) {
    BigRational f = a[0] / b[0];
    q.push_back(f);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a.erase(a.begin());
  }
  if (q.empty()) q.push_back(0);
  return q;
}

RatPoly gcd_poly(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!is_zero_poly(b)) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly to_primitive_int(const RatPoly& p) {
  BigInt den = 1;
  for (const auto& c : p) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  IntPoly out;
  BigInt g = 0;
  for (const auto& c : p) {
    BigRational s = c * den;
    out.push_back(boost::multiprecision::numerator(s));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g != 0)
    for (auto& c : out) c /= g;
  if (!out.empty() && out[0] < 0)
    for (auto& c : out) c = -c;
  return out;
}

int sign(const BigRational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

BigRational eval_rat(const RatPoly& p, const BigRational& x) {
  BigRational v = 0;
  for (const auto& c : p) v = v * x + c;
  return v;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, derivative(p)};
  while (!is_zero_poly(chain.back()) && chain.back().size() > 1) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (is_zero_poly(r)) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations_at(const std::vector<RatPoly>& chain, const BigRational& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign(eval_rat(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at_infinity(const std::vector<RatPoly>& chain) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign(p[0]);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long double to_ld(const BigRational& x) { return x.convert_to<long double>(); }

}  // namespace

IntPoly characteristic_polynomial(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  // coef[k] is the coefficient of x^{n-k}.
  IntPoly coef(n + 1, BigInt(0));
  coef[0] = 1;
  IntegerMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coef[k - 1];
    mk = std::move(next);
    IntegerMatrix am = a * mk;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    if (tr % static_cast<long long>(k) != 0) throw StructuralError("characteristic_polynomial: inexact division");
    coef[k] = -tr / static_cast<long long>(k);
  }
  return coef;
}

std::string poly_to_string(const IntPoly& p) {
  std::ostringstream os;
  const std::size_t deg = p.empty() ? 0 : p.size() - 1;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const std::size_t e = deg - i;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1 || e == 0) os << mag;
    if (e >= 1) os << 'x';
    if (e >= 2) os << '^' << e;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

BigRational evaluate(const IntPoly& p, const BigRational& x) {
  BigRational v = 0;
  for (const auto& c : p) v = v * x + BigRational(c);
  return v;
}

long double evaluate(const IntPoly& p, long double x) {
  long double v = 0;
  for (const auto& c : p) v = v * x + c.convert_to<long double>();
  return v;
}

IntPoly square_free_part(const IntPoly& p) {
  RatPoly r = to_rat(p);
  if (r.size() <= 1) return to_primitive_int(r);
  RatPoly g = gcd_poly(r, derivative(r));
  return to_primitive_int(quotient(r, g));
}

std::optional<RootBracket> largest_real_root(const IntPoly& p, const BigRational& width) {
  RatPoly sf = to_rat(square_free_part(p));
  if (sf.size() <= 1) return std::nullopt;
  auto chain = sturm_chain(sf);
  const int v_inf = variations_at_infinity(chain);
  // Cauchy bound on the roots.
  BigRational bound = 0;
  for (std::size_t i = 1; i < sf.size(); ++i) {
    BigRational r = sf[i] / sf[0];
    if (r < 0) r = -r;
    if (r > bound) bound = r;
  }
  bound += 1;
  BigRational lo = -bound, hi = bound;
  if (variations_at(chain, lo) - v_inf == 0) return std::nullopt;
  while (hi - lo > width) {
    BigRational mid = (lo + hi) / 2;
    if (eval_rat(sf, mid) == 0) {
      if (variations_at(chain, mid) - v_inf == 0) return RootBracket{mid, mid};
      lo = mid;
      continue;
    }
    if (variations_at(chain, mid) - v_inf >= 1)
      lo = mid;
    else
      hi = mid;
  }
  // Snap to an integer root when one lies in the bracket.
  BigInt f = boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo);
  for (BigInt c = f - 1; c <= f + 1; ++c) {
    BigRational x(c);
    if (x >= lo && x <= hi && eval_rat(sf, x) == 0) return RootBracket{x, x};
  }
  return RootBracket{lo, hi};
}

std::string PerronData::decimal() const {
  BigRational mid = (bracket.lo + bracket.hi) / 2;
  BigInt scale = boost::multiprecision::pow(BigInt(10), 12);
  BigRational scaled = mid * scale + BigRational(1, 2);
  BigInt v = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  if (scaled < 0 && v * boost::multiprecision::denominator(scaled) != boost::multiprecision::numerator(scaled)) v -= 1;
  bool neg = v < 0;
  if (neg) v = -v;
  std::string digits = v.str();
  if (digits.size() < 13) digits.insert(0, 13 - digits.size(), '0');
  return (neg ? "-" : "") + digits.substr(0, digits.size() - 12) + "." + digits.substr(digits.size() - 12);
}

PerronData perron_data(const IntegerMatrix& m) {
  PerronData out;
  out.char_poly = characteristic_polynomial(m);
  auto br = largest_real_root(out.char_poly, BigRational(1, BigInt(1) << 80));
  out.bracket = br.value_or(RootBracket{0, 0});
  out.radius = to_ld((out.bracket.lo + out.bracket.hi) / 2);
  out.error_bound = to_ld((out.bracket.hi - out.bracket.lo) / 2);
  if (out.bracket.lo == out.bracket.hi && boost::multiprecision::denominator(out.bracket.lo) == 1)
    out.exact_integer = boost::multiprecision::numerator(out.bracket.lo);

  // Power iteration on M + I, which is primitive on every irreducible class.
  const std::size_t n = m.size();
  if (n == 0) return out;
  std::vector<long double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).convert_to<long double>() + (i == j ? 1 : 0);
  std::vector<long double> v(n, 1), w(n);
  long double est = 0;
  for (int it = 0; it < 200000; ++it) {
    long double norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * v[j];
      w[i] = s;
      norm = std::max(norm, std::fabs(s));
    }
    if (norm == 0) break;
    long double prev_norm = 0;
    for (std::size_t i = 0; i < n; ++i) prev_norm = std::max(prev_norm, std::fabs(v[i]));
    long double next = norm / prev_norm;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    out.power_residual = std::fabs(next - est) / std::max<long double>(1, next);
    est = next;
    if (it > 10 && out.power_residual < 1e-13L) break;
  }
  out.power_estimate = est - 1;
  out.power_converged = out.power_residual <= 1e-10L &&
                        std::fabs(out.power_estimate - out.radius) <= 1e-8L * std::max<long double>(1, out.radius);
  return out;
}

}  // namespace rotod
