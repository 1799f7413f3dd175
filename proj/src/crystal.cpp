#include "nclr/crystal.hpp"

#include <algorithm>

#include "nclr/error.hpp"

namespace nclr {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

void validate(const LrTriple& t) {
  if (!contains(t.lambda, t.mu)) {
    throw precondition_error("(" + t.mu.to_string() + ") is not contained in (" +
                             t.lambda.to_string() + ")");
  }
  if (t.nu.size() != t.lambda.size() - t.mu.size()) {
    throw precondition_error("|nu| = " + std::to_string(t.nu.size()) + " but |lambda/mu| = " +
                             std::to_string(t.lambda.size() - t.mu.size()));
  }
}

SkewTableau crystal_reflect(int i, const SkewTableau& t) {
  if (i < 1) throw precondition_error("crystal operator index must be positive");
  Word w = column_reading_word(t);
  std::vector<std::size_t> open;       // unmatched i+1 positions
  std::vector<std::size_t> unmatched;  // unmatched i positions, in order
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1) {
      open.push_back(k);
    } else if (w[k] == i) {
      if (open.empty()) {
        unmatched.push_back(k);
      } else {
        open.pop_back();
      }
    }
  }
  const std::size_t a = unmatched.size();
  const std::size_t b = open.size();
  if (a == b) return t;
  // Unmatched letters read i^a (i+1)^b; rewrite them as i^b (i+1)^a.
  std::vector<std::size_t> free = std::move(unmatched);
  free.insert(free.end(), open.begin(), open.end());
  for (std::size_t k = 0; k < free.size(); ++k) w[free[k]] = k < b ? i : i + 1;
  return t.with_reading_word(w);
}

SkewTableau crystal_apply_word(std::span<const int> generators, const SkewTableau& t) {
  SkewTableau cur = t;
  for (auto it = generators.rbegin(); it != generators.rend(); ++it) cur = crystal_reflect(*it, cur);
  return cur;
}

SkewTableau crystal_apply(const Permutation& sigma, const SkewTableau& t) {
  return crystal_apply_word(reduced_word(sigma), t);
}

namespace {

struct LrSearch {
  const LrTriple& triple;
  Grid grid;
  std::vector<Cell> order;  // reverse column reading order
  std::vector<int> count;   // letters used so far
  std::vector<SkewTableau> out;

  void run(std::size_t k) {
    if (k == order.size()) {
      out.push_back(make_unchecked(triple.mu, grid));
      return;
    }
    const auto [r, c] = order[k];
    auto& row = grid[idx(r)];
    int hi = triple.nu.length();
    if (c + 1 < static_cast<int>(row.size())) hi = std::min(hi, row[idx(c + 1)]);
    int lo = 1;
    if (r > 0 && c >= triple.mu.part(r)) lo = grid[idx(r - 1)][idx(c)] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[idx(v - 1)] >= triple.nu.part(v)) continue;
      if (v > 1 && count[idx(v - 1)] >= count[idx(v - 2)]) continue;
      row[idx(c)] = v;
      ++count[idx(v - 1)];
      run(k + 1);
      --count[idx(v - 1)];
    }
    row[idx(c)] = 0;
  }
};

}  // namespace

std::vector<SkewTableau> enumerate_lrt(const LrTriple& t) {
  validate(t);
  LrSearch s{t, {}, {}, std::vector<int>(idx(t.nu.length()), 0), {}};
  for (int r = 0; r < t.lambda.length(); ++r) s.grid.emplace_back(idx(t.lambda.part(r + 1)), 0);
  const SkewTableau shape = make_unchecked(t.mu, s.grid);
  s.order = shape.reading_cells();
  std::reverse(s.order.begin(), s.order.end());
  s.run(0);
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

std::vector<SkewTableau> lrt_sigma(const LrTriple& t, const Permutation& sigma) {
  if (sigma.degree() != t.nu.length()) {
    throw precondition_error("permutation of degree " + std::to_string(sigma.degree()) +
                             " does not act on content of length " +
                             std::to_string(t.nu.length()));
  }
  const auto word = reduced_word(sigma);
  std::vector<SkewTableau> out;
  for (const auto& tab : enumerate_lrt(t)) out.push_back(crystal_apply_word(word, tab));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nclr
