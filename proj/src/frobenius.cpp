#include "rotod/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rotod {

std::vector<std::vector<std::size_t>> strongly_connected_components(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (m(v, w) <= 0) continue;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) visit(v);
  return out;
}

FrobeniusForm frobenius_form(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  auto comps = strongly_connected_components(m);
  const std::size_t nb = comps.size();
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < nb; ++c)
    for (std::size_t v : comps[c]) comp_of[v] = c;

  // A component may be placed once every component it points to is placed.
  std::vector<std::set<std::size_t>> targets(nb);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) > 0 && comp_of[i] != comp_of[j]) targets[comp_of[i]].insert(comp_of[j]);
  std::vector<bool> placed(nb, false);
  FrobeniusForm f;
  for (std::size_t step = 0; step < nb; ++step) {
    std::size_t best = nb;
    for (std::size_t c = 0; c < nb; ++c) {
      if (placed[c]) continue;
      bool ready = std::all_of(targets[c].begin(), targets[c].end(), [&](std::size_t t) { return placed[t]; });
      if (ready && (best == nb || comps[c].front() < comps[best].front())) best = c;
    }
    placed[best] = true;
    f.blocks.push_back(comps[best]);
  }

  for (const auto& b : f.blocks) {
    f.offsets.push_back(f.order.size());
    f.order.insert(f.order.end(), b.begin(), b.end());
  }
  f.offsets.push_back(n);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[f.order[k]] = k;
  f.relabeling = Permutation(pos);
  f.block_view = m.relabeled(f.order);

  auto zero_single = [&](const std::vector<std::size_t>& b) { return b.size() == 1 && m(b[0], b[0]) == 0; };
  for (const auto& b : f.blocks) {
    if (zero_single(b) && !f.display_blocks.empty()) {
      auto& last = f.display_blocks.back();
      bool last_zero = std::all_of(last.begin(), last.end(), [&](std::size_t u) {
        return std::all_of(last.begin(), last.end(), [&](std::size_t v) { return m(u, v) == 0; });
      });
      bool unlinked = std::all_of(last.begin(), last.end(), [&](std::size_t u) { return m(b[0], u) == 0; });
      if (last_zero && unlinked) {
        last.push_back(b[0]);
        continue;
      }
    }
    f.display_blocks.push_back(b);
  }
  return f;
}

IntegerMatrix FrobeniusForm::diagonal_block(const IntegerMatrix& m, std::size_t b) const {
  return m.restricted(blocks.at(b));
}

bool FrobeniusForm::is_zero_block(const IntegerMatrix& m, std::size_t b) const {
  return diagonal_block(m, b).is_zero();
}

}  // namespace rotod
