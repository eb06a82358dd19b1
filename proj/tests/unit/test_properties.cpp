#include <doctest.h>

#include <random>
#include <set>

#include "rotod/cell_map.hpp"
#include "rotod/diagram.hpp"
#include "rotod/report.hpp"

using namespace rotod;

namespace {

Permutation random_perm(std::mt19937_64& rng, std::size_t q) {
  std::vector<std::size_t> img(q);
  for (std::size_t i = 0; i < q; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

BigRational value(const Dyadic& x) { return BigRational(x.numerator(), x.denominator()); }

}  // namespace

TEST_CASE("cell maps are injective translations consistent with midpoints") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 60; ++t) {
    RotatedOdometer sys(random_perm(rng, 1 + rng() % 7));
    for (std::uint32_t k = 1; k <= 2; ++k) {
      CellMap cm(sys, k);
      std::set<std::uint64_t> images;
      std::size_t defined = 0;
      const std::uint32_t shift = k * sys.n_exp();
      for (std::uint64_t c = 0; c < cm.cell_count(); ++c) {
        auto nx = cm.next(c);
        if (!nx) continue;
        ++defined;
        images.insert(*nx);
        // Midpoint and a quarter point move by the same offset as the endpoint.
        Dyadic left = cm.left_endpoint(c);
        for (std::uint64_t frac : {1u, 2u, 3u}) {
          Dyadic x(BigInt(c) * 4 + frac, shift + 2, sys.q());
          BigRational moved = value(rotated_map(sys, x)) - value(x);
          CHECK(moved == value(cm.left_endpoint(*nx)) - value(left));
        }
      }
      CHECK(images.size() == defined);
    }
  }
}

TEST_CASE("coding words start with 0 and share a final letter") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 200; ++t) {
    Permutation pi = random_perm(rng, 1 + rng() % 7);
    RenormStep st = renorm_step(pi);
    const Letter last = st.chi[0].back();
    for (const Word& w : st.chi.words()) {
      CHECK(w.front() == 0);
      CHECK(w.back() == last);
    }
    CHECK(st.unvisited_cells.empty() == (st.chi.total_length() == pi.size() << RotatedOdometer(pi).n_exp()));
  }
}

TEST_CASE("heights by matrices equal composed word lengths") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 40; ++t) {
    RenormSeq seq = renorm_sequence(RotatedOdometer(random_perm(rng, 1 + rng() % 7)));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(heights(seq, n).h == heights_by_words(seq, n));
  }
}

TEST_CASE("minimal alphabet is closed and holds 0") {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 80; ++t) {
    RenormSeq seq = renorm_sequence(RotatedOdometer(random_perm(rng, 1 + rng() % 7)));
    std::vector<Letter> a = minimal_alphabet(seq);
    CHECK(std::find(a.begin(), a.end(), 0u) != a.end());
    Substitution per = period_substitution(seq);
    for (Letter l : a)
      for (Letter x : per[l]) CHECK(std::find(a.begin(), a.end(), x) != a.end());
  }
}

TEST_CASE("unique extreme paths into every top vertex") {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 40; ++t) {
    RenormSeq seq = renorm_sequence(RotatedOdometer(random_perm(rng, 1 + rng() % 7)));
    OrderedDiagram d(seq, 3, VertexSelection::Aperiodic);
    for (Letter v : d.vertices(3)) {
      PathPrefix lo = minimal_path(d, v);
      PathPrefix hi = maximal_path(d, v);
      CHECK(is_minimal(lo));
      CHECK(is_maximal(d, hi));
      CHECK(lo.top() == v);
      CHECK(hi.top() == v);
      // Walking forward from the minimal path reaches the maximal one exactly once.
      PathPrefix cur = lo;
      std::size_t maxima = 0;
      std::size_t steps = 0;
      do {
        if (is_maximal(d, cur)) {
          ++maxima;
          CHECK(cur == hi);
          break;
        }
        CHECK_FALSE((steps > 0 && is_minimal(cur)));
        cur = vershik_successor(d, cur);
        ++steps;
      } while (steps < 100000);
      CHECK(maxima == 1);
      CHECK(steps + 1 == static_cast<std::size_t>(heights(seq, 3, VertexSelection::Aperiodic).at(v)));
    }
  }
}

TEST_CASE("analyze is byte-identical on rerun") {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 10; ++t) {
    Permutation pi = random_perm(rng, 2 + rng() % 6);
    const std::string p = pi.to_cycle_string();
    CHECK(to_json(analyze(pi.size(), p)).dump() == to_json(analyze(pi.size(), p)).dump());
  }
}
