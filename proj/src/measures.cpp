#include "rotod/measures.hpp"

#include <cmath>

namespace rotod {

namespace {

using Mat = std::vector<std::vector<long double>>;

// Solves a x = b by Gaussian elimination with partial pivoting; empty when singular.
std::vector<long double> solve(Mat a, std::vector<long double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-14L) return {};
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      long double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

long double entry(const IntegerMatrix& m, std::size_t i, std::size_t j) { return m(i, j).convert_to<long double>(); }

// Positive left Perron vector of an irreducible block, sum normalized to 1.
std::vector<long double> perron_left(const IntegerMatrix& m, const std::vector<std::size_t>& block, long double lambda) {
  const std::size_t k = block.size();
  // Rows of (lambda I - F)^T with the last one replaced by the normalization.
  Mat a(k, std::vector<long double>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      a[r][c] = (r == c ? lambda : 0) - entry(m, block[c], block[r]);
  for (std::size_t c = 0; c < k; ++c) a[k - 1][c] = 1;
  std::vector<long double> rhs(k, 0);
  rhs[k - 1] = 1;
  return solve(a, rhs);
}

}  // namespace

std::size_t MeasureReport::count() const {
  std::size_t n = 0;
  for (const auto& c : candidates) n += c.accepted ? 1 : 0;
  return n;
}

MeasureReport measure_report(const IntegerMatrix& b) {
  MeasureReport rep;
  rep.matrix = b;
  rep.form = frobenius_form(b);
  const auto& blocks = rep.form.blocks;
  const std::size_t n = b.size();
  std::vector<PerronData> block_perron;
  for (std::size_t i = 0; i < blocks.size(); ++i) block_perron.push_back(perron_data(rep.form.diagonal_block(b, i)));

  for (std::size_t a = 0; a < blocks.size(); ++a) {
    const PerronData& pd = block_perron[a];
    if (rep.form.is_zero_block(b, a) || pd.radius <= 1 + 1e-12L) continue;
    CandidateMeasure cand;
    cand.block = blocks[a];
    cand.perron = pd;
    const long double lambda = pd.radius;
    std::vector<long double> v(n, 0);
    auto va = perron_left(b, blocks[a], lambda);
    if (va.empty()) {
      cand.reason = "singular block system";
      rep.candidates.push_back(std::move(cand));
      continue;
    }
    for (std::size_t i = 0; i < blocks[a].size(); ++i) v[blocks[a][i]] = va[i];

    bool ok = true;
    for (std::size_t bi = a; bi-- > 0 && ok;) {
      const auto& blk = blocks[bi];
      std::vector<long double> rhs(blk.size(), 0);
      long double scale = 0;
      for (std::size_t c = bi + 1; c <= a; ++c)
        for (std::size_t u : blocks[c])
          for (std::size_t t = 0; t < blk.size(); ++t) {
            rhs[t] += v[u] * entry(b, u, blk[t]);
            scale = std::max(scale, std::fabs(rhs[t]));
          }
      if (scale < 1e-300L) continue;
      if (std::fabs(block_perron[bi].radius - lambda) <= 1e-9L * lambda) {
        ok = false;
        cand.reason = "earlier block shares the Perron value";
        break;
      }
      Mat sys(blk.size(), std::vector<long double>(blk.size()));
      for (std::size_t r = 0; r < blk.size(); ++r)
        for (std::size_t c = 0; c < blk.size(); ++c)
          sys[r][c] = (r == c ? lambda : 0) - entry(b, blk[c], blk[r]);
      auto vb = solve(sys, rhs);
      if (vb.empty()) {
        ok = false;
        cand.reason = "ill-posed block system";
        break;
      }
      for (std::size_t t = 0; t < blk.size(); ++t) v[blk[t]] = vb[t];
    }
    if (ok) {
      long double mx = 0;
      for (long double x : v) mx = std::max(mx, std::fabs(x));
      for (long double& x : v) {
        if (x < -1e-12L * mx) {
          ok = false;
          cand.reason = "left eigenvector has negative entries";
          break;
        }
        if (std::fabs(x) <= 1e-12L * mx) x = 0;
      }
    }
    if (ok) {
      std::size_t first = 0;
      while (first < n && v[first] == 0) ++first;
      const long double lead = v[first];
      for (long double& x : v) x /= lead;
      for (std::size_t i = 0; i < n; ++i)
        if (v[i] != 0) cand.support.push_back(i);
      cand.accepted = true;
      cand.left_vector = v;
      cand.left_vector_frobenius.resize(n);
      for (std::size_t k = 0; k < n; ++k) cand.left_vector_frobenius[k] = v[rep.form.order[k]];
    }
    rep.candidates.push_back(std::move(cand));
  }
  return rep;
}

MeasureReport measure_report(const RenormSeq& seq) { return measure_report(telescope(seq).b); }

bool lebesgue_ergodic(const RenormSeq& seq) { return covering_status(seq) == PeriodicClass::Empty; }

}  // namespace rotod
