#include "rotod/diagram.hpp"

#include <algorithm>

#include "rotod/errors.hpp"

namespace rotod {

namespace {

std::vector<bool> letters_of_images(const Substitution& chi, const std::vector<bool>& of) {
  return letters_in_images(chi, of);
}

// Sets of the period phases for the given selection; phase r is level k0+1+r.
std::vector<std::vector<bool>> period_phases(const RenormSeq& seq, VertexSelection selection) {
  const std::size_t p = seq.period;
  const std::size_t q = seq.q;
  std::vector<std::vector<bool>> x(p, std::vector<bool>(q, true));
  auto sigma = [&](std::size_t r) -> const Substitution& { return seq.chi(seq.preperiod + 1 + r); };
  if (selection == VertexSelection::Minimal) {
    std::vector<Letter> s = minimal_alphabet(seq);
    std::vector<bool> set(q, false);
    for (Letter l : s) set[l] = true;
    // X_r is what the period below level k0+1+p contributes at phase r.
    std::vector<bool> cur = set;
    for (std::size_t r = p; r-- > 0;) {
      cur = letters_of_images(sigma(r), cur);
      x[r] = cur;
    }
    return x;
  }
  if (selection == VertexSelection::All) return x;
  // Greatest fixed point of X_r = letters(sigma_r(X_{r+1 mod p})).
  while (true) {
    bool changed = false;
    for (std::size_t r = p; r-- > 0;) {
      std::vector<bool> nx = letters_of_images(sigma(r), x[(r + 1) % p]);
      if (nx != x[r]) {
        x[r] = std::move(nx);
        changed = true;
      }
    }
    if (!changed) return x;
  }
}

}  // namespace

std::vector<std::vector<bool>> vertex_sets(const RenormSeq& seq, std::size_t depth, VertexSelection selection) {
  if (selection == VertexSelection::All) return std::vector<std::vector<bool>>(depth, std::vector<bool>(seq.q, true));
  auto phases = period_phases(seq, selection);
  const std::size_t k0 = seq.preperiod;
  std::vector<std::vector<bool>> out(depth);
  // Levels above the preperiod come straight from the phases; the
  // preperiod levels take the letters used by the level above.
  std::vector<bool> above = phases[0];
  for (std::size_t k = std::max(depth, k0); k >= 1; --k) {
    std::vector<bool> v;
    if (k > k0)
      v = phases[(k - k0 - 1) % seq.period];
    else
      v = letters_of_images(seq.chi(k), above);
    if (k <= depth) out[k - 1] = v;
    above = std::move(v);
  }
  return out;
}

BigInt HeightVector::at(Letter letter) const {
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] == letter) return h[i];
  throw PreconditionError("HeightVector: letter " + std::to_string(letter) + " is not present");
}

HeightVector heights(const RenormSeq& seq, std::size_t n, VertexSelection selection) {
  if (n == 0) throw PreconditionError("heights: levels start at 1");
  auto sets = vertex_sets(seq, n, selection);
  const std::size_t q = seq.q;
  std::vector<BigInt> h(q, BigInt(0));
  for (std::size_t i = 0; i < q; ++i)
    if (sets[0][i]) h[i] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    const IntegerMatrix& m = seq.matrix(k);
    std::vector<BigInt> nh(q, BigInt(0));
    for (std::size_t i = 0; i < q; ++i) {
      if (!sets[k][i]) continue;
      for (std::size_t j = 0; j < q; ++j)
        if (sets[k - 1][j] && m(i, j) != 0) nh[i] += m(i, j) * h[j];
    }
    h = std::move(nh);
  }
  HeightVector out;
  out.level = n;
  for (std::size_t i = 0; i < q; ++i)
    if (sets[n - 1][i]) {
      out.letters.push_back(static_cast<Letter>(i));
      out.h.push_back(h[i]);
    }
  return out;
}

std::vector<BigInt> heights_by_words(const RenormSeq& seq, std::size_t n) {
  if (n == 0) throw PreconditionError("heights_by_words: levels start at 1");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < seq.q; ++i) {
    Word w{static_cast<Letter>(i)};
    for (std::size_t k = n - 1; k >= 1; --k) w = seq.chi(k).apply(w);
    out.emplace_back(w.size());
  }
  return out;
}

Word fixed_point_prefix(const RenormSeq& seq, std::size_t len) {
  if (len == 0) throw PreconditionError("fixed_point_prefix: len must be at least 1");
  // Smallest k with |chi_1 ∘ ... ∘ chi_k(0)| >= len.
  std::size_t k = 0;
  BigInt best = 1;
  std::size_t best_at = 0;
  while (true) {
    BigInt h0 = heights(seq, k + 1).at(0);
    if (h0 >= len) break;
    if (h0 > best) {
      best = h0;
      best_at = k;
    } else if (k > best_at + seq.preperiod + seq.period) {
      throw PreconditionError("fixed_point_prefix: the limit word has only " + best.str() + " letters");
    }
    ++k;
  }
  Word w{0};
  for (std::size_t j = k; j >= 1; --j) w = seq.chi(j).apply_prefix(w, len);
  return w;
}

Substitution period_substitution(const RenormSeq& seq) {
  const std::size_t k0 = seq.preperiod;
  Substitution s = seq.chi(k0 + seq.period);
  for (std::size_t r = seq.period - 1; r >= 1; --r) s = compose_substitutions(seq.chi(k0 + r), s);
  return s;
}

std::vector<Letter> minimal_alphabet(const RenormSeq& seq) {
  Substitution per = period_substitution(seq);
  std::vector<bool> set(seq.q, false);
  set[0] = true;
  while (true) {
    std::vector<bool> grown = letters_of_images(per, set);
    for (std::size_t i = 0; i < seq.q; ++i) grown[i] = grown[i] || set[i];
    if (grown == set) break;
    set = std::move(grown);
  }
  std::vector<Letter> out;
  for (std::size_t i = 0; i < seq.q; ++i)
    if (set[i]) out.push_back(static_cast<Letter>(i));
  return out;
}

TelescopedSystem telescope(const RenormSeq& seq) {
  const std::size_t k0 = seq.preperiod;
  TelescopedSystem t;
  t.b = IntegerMatrix::identity(seq.q);
  for (std::size_t r = 1; r <= seq.period; ++r) t.b = seq.matrix(k0 + r) * t.b;
  t.w.assign(seq.q, BigInt(1));
  for (std::size_t k = 1; k <= k0; ++k) t.w = seq.matrix(k) * t.w;
  return t;
}

OrderedDiagram::OrderedDiagram(const RenormSeq& seq, std::size_t depth, VertexSelection selection)
    : depth_(depth), q_(seq.q) {
  if (depth == 0) throw PreconditionError("OrderedDiagram: depth must be at least 1");
  present_ = vertex_sets(seq, depth, selection);
  incoming_.resize(depth - 1);
  for (std::size_t k = 1; k < depth; ++k) {
    auto& in = incoming_[k - 1];
    in.resize(q_);
    const Substitution& chi = seq.chi(k);
    for (std::size_t i = 0; i < q_; ++i) {
      if (!present_[k][i]) continue;
      for (Letter l : chi[static_cast<Letter>(i)])
        if (present_[k - 1][l]) in[i].push_back(l);
    }
  }
}

std::vector<Letter> OrderedDiagram::vertices(std::size_t level) const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < q_; ++i)
    if (present(level, static_cast<Letter>(i))) out.push_back(static_cast<Letter>(i));
  return out;
}

std::vector<DiagramEdge> OrderedDiagram::edges(std::size_t level) const {
  std::vector<DiagramEdge> out;
  for (std::size_t t = 0; t < q_; ++t) {
    const Word& in = incoming(level, static_cast<Letter>(t));
    for (std::size_t r = 0; r < in.size(); ++r) out.push_back({in[r], static_cast<Letter>(t), r});
  }
  return out;
}

std::size_t OrderedDiagram::edge_count(std::size_t level) const {
  std::size_t n = 0;
  for (const auto& w : incoming_.at(level - 1)) n += w.size();
  return n;
}

OrderedDiagram build_diagram(const RenormSeq& seq, std::size_t depth, bool restrict_to_aperiodic) {
  return OrderedDiagram(seq, depth, restrict_to_aperiodic ? VertexSelection::Aperiodic : VertexSelection::All);
}

void validate_path(const OrderedDiagram& d, const PathPrefix& path) {
  if (path.vertices.size() != d.depth()) throw StructuralError("path depth differs from the diagram depth");
  if (path.ranks.size() + 1 != path.vertices.size()) throw StructuralError("path needs one rank per inner edge");
  for (std::size_t k = 1; k <= d.depth(); ++k) {
    Letter v = path.vertices[k - 1];
    if (v >= d.alphabet_size() || !d.present(k, v))
      throw StructuralError("vertex " + std::to_string(v) + " is not present at level " + std::to_string(k));
  }
  for (std::size_t k = 1; k < d.depth(); ++k) {
    const Word& in = d.incoming(k, path.vertices[k]);
    std::size_t r = path.ranks[k - 1];
    if (r >= in.size() || in[r] != path.vertices[k - 1])
      throw StructuralError("edge at level " + std::to_string(k) + " does not compose");
  }
}

namespace {

PathPrefix extreme_path(const OrderedDiagram& d, Letter top, bool maximal) {
  if (top >= d.alphabet_size() || !d.present(d.depth(), top))
    throw StructuralError("vertex " + std::to_string(top) + " is not present at the top level");
  PathPrefix p;
  p.vertices.assign(d.depth(), 0);
  p.ranks.assign(d.depth() - 1, 0);
  p.vertices.back() = top;
  for (std::size_t k = d.depth() - 1; k >= 1; --k) {
    const Word& in = d.incoming(k, p.vertices[k]);
    if (in.empty()) throw StructuralError("vertex without incoming edges");
    std::size_t r = maximal ? in.size() - 1 : 0;
    p.ranks[k - 1] = r;
    p.vertices[k - 1] = in[r];
  }
  return p;
}

}  // namespace

PathPrefix minimal_path(const OrderedDiagram& d, Letter top) { return extreme_path(d, top, false); }
PathPrefix maximal_path(const OrderedDiagram& d, Letter top) { return extreme_path(d, top, true); }

bool is_maximal(const OrderedDiagram& d, const PathPrefix& path) {
  for (std::size_t k = 1; k < path.depth(); ++k)
    if (path.ranks[k - 1] + 1 != d.incoming(k, path.vertices[k]).size()) return false;
  return true;
}

bool is_minimal(const PathPrefix& path) {
  return std::all_of(path.ranks.begin(), path.ranks.end(), [](std::size_t r) { return r == 0; });
}

PathPrefix vershik_successor(const OrderedDiagram& d, const PathPrefix& path) {
  validate_path(d, path);
  for (std::size_t k = 1; k < d.depth(); ++k) {
    const Word& in = d.incoming(k, path.vertices[k]);
    if (path.ranks[k - 1] + 1 < in.size()) {
      PathPrefix out = path;
      std::size_t r = ++out.ranks[k - 1];
      out.vertices[k - 1] = in[r];
      for (std::size_t j = k - 1; j >= 1; --j) {
        out.ranks[j - 1] = 0;
        out.vertices[j - 1] = d.incoming(j, out.vertices[j]).front();
      }
      return out;
    }
  }
  std::vector<Letter> tops = d.vertices(d.depth());
  auto it = std::upper_bound(tops.begin(), tops.end(), path.top());
  return minimal_path(d, it == tops.end() ? tops.front() : *it);
}

CodingCheck coding_check(const RotatedOdometer& sys, std::size_t n) {
  if (n == 0) throw PreconditionError("coding_check: n must be at least 1");
  RenormSeq seq = renorm_sequence(sys);
  Word rho = fixed_point_prefix(seq, n);
  CodingCheck out;
  Itinerary it = orbit_itinerary(sys, Dyadic::zero(sys.q()), n);
  out.itinerary_matches = it.letters == rho;

  std::size_t depth = 1;
  while (heights(seq, depth).at(0) < n) ++depth;
  OrderedDiagram d(seq, depth, VertexSelection::All);
  PathPrefix p = minimal_path(d, 0);
  Word seen;
  seen.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    seen.push_back(p.vertices.front());
    if (t + 1 < n) p = vershik_successor(d, p);
  }
  out.vershik_matches = seen == rho;
  return out;
}

}  // namespace rotod
