#include "rotod/divisibility.hpp"

#include <algorithm>
#include <set>

#include "rotod/errors.hpp"

namespace rotod {

const char* to_string(HeightSeed s) { return s == HeightSeed::Ones ? "ones" : "telescoped"; }
const char* to_string(TargetAlphabet a) { return a == TargetAlphabet::Minimal ? "minimal" : "full"; }

namespace {

// Height vectors mod d along the periodic part; the last entry of a state is the phase.
class HeightDynamics {
 public:
  HeightDynamics(const RenormSeq& seq, std::uint64_t d, const DivisibilityOptions& opt) : seq_(seq), d_(d) {
    const std::size_t q = seq.q;
    const std::size_t p = seq.period;
    auto sets = vertex_sets(seq, seq.preperiod + p, opt.alphabet == TargetAlphabet::Minimal
                                                        ? VertexSelection::Minimal
                                                        : VertexSelection::All);
    phase_sets_.assign(sets.begin() + static_cast<std::ptrdiff_t>(seq.preperiod), sets.end());
    for (std::size_t r = 0; r < p; ++r) {
      std::vector<std::uint64_t> m(q * q, 0);
      const IntegerMatrix& big = seq.matrix(seq.preperiod + 1 + r);
      const auto& below = phase_sets_[r];
      const auto& above = phase_sets_[(r + 1) % p];
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
          if (above[i] && below[j]) m[i * q + j] = static_cast<std::uint64_t>(big(i, j) % d);
      mats_.push_back(std::move(m));
    }
    start_.assign(q + 1, 0);
    std::vector<BigInt> seed(q, BigInt(1));
    if (opt.seed == HeightSeed::Telescoped) seed = telescope(seq).w;
    for (std::size_t i = 0; i < q; ++i)
      if (phase_sets_[0][i]) start_[i] = static_cast<std::uint64_t>(seed[i] % d);
  }

  const std::vector<std::uint64_t>& start() const { return start_; }
  const std::vector<bool>& present(std::size_t phase) const { return phase_sets_[phase]; }

  std::vector<std::uint64_t> step(const std::vector<std::uint64_t>& s) const {
    const std::size_t q = seq_.q;
    const std::size_t r = static_cast<std::size_t>(s[q]);
    const auto& m = mats_[r];
    std::vector<std::uint64_t> out(q + 1, 0);
    for (std::size_t i = 0; i < q; ++i) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < q; ++j)
        if (m[i * q + j]) acc = (acc + static_cast<unsigned __int128>(m[i * q + j]) * s[j]) % d_;
      out[i] = static_cast<std::uint64_t>(acc);
    }
    out[q] = (r + 1) % seq_.period;
    return out;
  }

 private:
  const RenormSeq& seq_;
  std::uint64_t d_;
  std::vector<std::vector<bool>> phase_sets_;
  std::vector<std::vector<std::uint64_t>> mats_;
  std::vector<std::uint64_t> start_;
};

}  // namespace

DivisibilityVerdict rational_eigenvalue(const RenormSeq& seq, std::uint64_t d, const DivisibilityOptions& options) {
  if (d < 2) throw PreconditionError("rational_eigenvalue: d must be at least 2");
  HeightDynamics dyn(seq, d, options);
  const std::size_t q = seq.q;

  // Brent: cycle length first, then the transient.
  std::size_t power = 1, lam = 1;
  auto tortoise = dyn.start();
  auto hare = dyn.step(tortoise);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = dyn.step(hare);
    ++lam;
  }
  std::size_t mu = 0;
  tortoise = hare = dyn.start();
  for (std::size_t i = 0; i < lam; ++i) hare = dyn.step(hare);
  while (tortoise != hare) {
    tortoise = dyn.step(tortoise);
    hare = dyn.step(hare);
    ++mu;
  }

  DivisibilityVerdict out;
  out.d = d;
  out.options = options;
  out.transient = mu;
  out.cycle = lam;
  std::vector<bool> any_phase(q, false);
  for (std::size_t r = 0; r < seq.period; ++r)
    for (std::size_t i = 0; i < q; ++i) any_phase[i] = any_phase[i] || dyn.present(r)[i];
  for (std::size_t i = 0; i < q; ++i)
    if (any_phase[i] && (options.letters.empty() ||
                         std::find(options.letters.begin(), options.letters.end(), i) != options.letters.end()))
      out.active.push_back(static_cast<Letter>(i));
  for (Letter l : options.letters)
    if (l >= q || !any_phase[l])
      throw PreconditionError("rational_eigenvalue: letter " + std::to_string(l) + " is not in the alphabet");

  std::vector<std::set<std::uint64_t>> residues(out.active.size());
  auto s = tortoise;
  for (std::size_t t = 0; t < lam; ++t) {
    const auto& pres = dyn.present(static_cast<std::size_t>(s[q]));
    bool bad = false;
    for (std::size_t a = 0; a < out.active.size(); ++a) {
      Letter l = out.active[a];
      if (!pres[l]) continue;
      residues[a].insert(s[l]);
      bad = bad || s[l] != 0;
    }
    if (bad && !out.witness) out.witness = std::vector<std::uint64_t>(s.begin(), s.end() - 1);
    s = dyn.step(s);
  }
  out.verdict = true;
  for (auto& r : residues) {
    bool pass = r.size() == 1 && *r.begin() == 0;
    if (r.empty()) pass = true;
    out.per_letter.push_back(pass);
    out.verdict = out.verdict && pass;
    out.residue_cycles.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::string DyadicScan::summary() const {
  if (fails_at) return "fails at m=" + std::to_string(*fails_at);
  return "pass m=1.." + std::to_string(max_m);
}

DyadicScan dyadic_scan(const RenormSeq& seq, std::size_t max_m, const DivisibilityOptions& options) {
  if (max_m == 0 || max_m > 63) throw PreconditionError("dyadic_scan: max_m must lie in 1..63");
  DyadicScan scan;
  scan.max_m = max_m;
  for (std::size_t m = 1; m <= max_m; ++m) {
    scan.steps.push_back(rational_eigenvalue(seq, std::uint64_t{1} << m, options));
    if (!scan.steps.back().verdict) {
      scan.fails_at = m;
      break;
    }
  }
  scan.all_pass = !scan.fails_at;
  return scan;
}

}  // namespace rotod
