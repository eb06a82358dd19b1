#include "rotod/renormalize.hpp"

#include <map>

#include "rotod/errors.hpp"

namespace rotod {

RenormStep renorm_step(const Permutation& perm, NConvention convention) {
  RotatedOdometer sys(perm, convention);
  CellMap cells(sys, 1);
  const std::uint64_t q = cells.q();
  const std::uint64_t top = cells.cell_count() - q;
  std::vector<char> visited(cells.cell_count(), 0);
  std::vector<Word> words(q);
  std::vector<std::size_t> next_images(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    std::uint64_t c = i;
    for (std::uint64_t steps = 0;; ++steps) {
      if (steps > cells.cell_count())
        throw StructuralError("renorm_step: return orbit exceeds the cell count");
      visited[c] = 1;
      words[i].push_back(cells.letter(c));
      auto n = cells.next(c);
      if (!n) break;
      c = *n;
    }
    next_images[i] = static_cast<std::size_t>(cells.rotate(c) - top);
  }
  RenormStep out{Permutation(std::move(next_images)), Substitution(std::move(words)), {}};
  for (std::uint64_t c = 0; c < cells.cell_count(); ++c)
    if (!visited[c]) out.unvisited_cells.push_back(c);
  return out;
}

std::size_t RenormSeq::record_index(std::size_t k) const {
  if (k == 0) throw PreconditionError("RenormSeq: levels start at 1");
  if (k <= records.size()) return k - 1;
  return preperiod + (k - 1 - preperiod) % period;
}

const LevelRecord& RenormSeq::level(std::size_t k) const { return records.at(record_index(k)); }

RenormSeq renorm_sequence(const RotatedOdometer& sys) {
  RenormSeq seq;
  seq.q = sys.q();
  seq.n_exp = sys.n_exp();
  seq.convention = sys.convention();
  seq.initial = sys.pi();
  std::map<Permutation, std::size_t> seen{{sys.pi(), 0}};
  Permutation current = sys.pi();
  const std::uint64_t full = sys.q() << sys.n_exp();
  for (std::size_t k = 1;; ++k) {
    RenormStep step = renorm_step(current, sys.convention());
    LevelRecord rec;
    rec.level = k;
    rec.source = current;
    rec.perm = step.next;
    rec.matrix = associated_matrix(step.chi);
    for (const auto& w : step.chi.words()) rec.return_times.push_back(w.size());
    rec.covering = step.chi.total_length() == full;
    rec.chi = std::move(step.chi);
    rec.unvisited_cells = std::move(step.unvisited_cells);
    seq.records.push_back(std::move(rec));
    current = step.next;
    auto [it, inserted] = seen.emplace(current, k);
    if (!inserted) {
      seq.preperiod = it->second;
      seq.period = k - it->second;
      return seq;
    }
  }
}

const char* to_string(PeriodicClass c) {
  switch (c) {
    case PeriodicClass::Empty: return "empty";
    case PeriodicClass::Finite: return "finite";
    case PeriodicClass::Infinite: return "infinite";
  }
  return "?";
}

PeriodicClass covering_status(const RenormSeq& seq) {
  bool pre = false;
  for (const auto& r : seq.records) {
    if (r.covering) continue;
    if (r.level > seq.preperiod) return PeriodicClass::Infinite;
    pre = true;
  }
  return pre ? PeriodicClass::Finite : PeriodicClass::Empty;
}

std::vector<Interval> periodic_region(const RotatedOdometer& sys, std::uint32_t k, const Limits& limits) {
  CellMap cells(sys, k, limits);
  const std::uint64_t n = cells.cell_count();
  // Every cell off a cycle lies on a chain from an L-cell to an H-cell.
  std::vector<char> transient(n, 0);
  for (std::uint64_t c0 : cells.l_cells()) {
    std::uint64_t c = c0;
    while (true) {
      transient[c] = 1;
      auto nx = cells.next(c);
      if (!nx) break;
      c = *nx;
    }
  }
  std::vector<Interval> out;
  const BigInt den = BigInt(n);
  std::uint64_t c = 0;
  while (c < n) {
    if (transient[c]) {
      ++c;
      continue;
    }
    std::uint64_t start = c;
    while (c < n && !transient[c]) ++c;
    out.push_back({BigRational(BigInt(start), den), BigRational(BigInt(c), den)});
  }
  return out;
}

BigRational total_length(const std::vector<Interval>& intervals) {
  BigRational sum = 0;
  for (const auto& iv : intervals) sum += iv.hi - iv.lo;
  return sum;
}

}  // namespace rotod
