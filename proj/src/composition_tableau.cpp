#include "nclr/composition_tableau.hpp"

#include <algorithm>
#include <limits>

#include "nclr/error.hpp"

namespace nclr {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int kMissing = std::numeric_limits<int>::max();

Composition row_lengths(const Grid& grid) {
  std::vector<int> parts;
  parts.reserve(grid.size());
  for (const auto& row : grid) parts.push_back(static_cast<int>(row.size()));
  return Composition(std::move(parts));
}

void sort_canonical(std::vector<CompositionTableau>& ts) {
  std::vector<std::pair<std::pair<Word, Composition>, std::size_t>> keys;
  keys.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    keys.push_back({{column_reading_word(ts[i]), ts[i].outer()}, i});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<CompositionTableau> sorted;
  sorted.reserve(ts.size());
  for (const auto& key : keys) sorted.push_back(std::move(ts[key.second]));
  ts = std::move(sorted);
}

}  // namespace

CompositionTableau make_unchecked_ct(Composition inner, Grid grid) {
  return CompositionTableau(CompositionTableau::Unchecked{}, std::move(inner), std::move(grid));
}

bool is_composition_tableau(const Composition& inner, const Grid& grid) {
  if (static_cast<int>(grid.size()) < inner.length()) return false;
  for (const auto& row : grid) {
    if (row.empty()) return false;
  }
  const int rows = static_cast<int>(grid.size());
  auto len = [&](int r) { return static_cast<int>(grid[idx(r)].size()); };
  auto inner_cell = [&](int r, int c) { return c < inner.part(r + 1); };
  for (int r = 0; r < rows; ++r) {
    if (inner.part(r + 1) > len(r)) return false;
    for (int c = 0; c < len(r); ++c) {
      const int v = grid[idx(r)][idx(c)];
      if (inner_cell(r, c) ? v != 0 : v < 1) return false;
      if (c > 0 && !inner_cell(r, c - 1) && grid[idx(r)][idx(c - 1)] > v) return false;
    }
  }
  if (!lc_leq(inner, row_lengths(grid))) return false;

  int last = 0;
  for (int r = 0; r < rows; ++r) {
    if (inner_cell(r, 0)) continue;
    if (grid[idx(r)][0] <= last) return false;
    last = grid[idx(r)][0];
  }

  // Triple rule: a = (j, k-1), b = (j, k), c = (i, k) with i below j. Inner
  // cells read as 0 and cells beyond the end of a row as +infinity.
  for (int i = 0; i < rows; ++i) {
    for (int k = 1; k < len(i); ++k) {
      if (inner_cell(i, k)) continue;
      const int cv = grid[idx(i)][idx(k)];
      for (int j = i + 1; j < rows; ++j) {
        if (k - 1 >= len(j)) continue;
        const int a = grid[idx(j)][idx(k - 1)];
        const int b = k < len(j) ? grid[idx(j)][idx(k)] : kMissing;
        if (a <= cv && !(b < cv)) return false;
      }
    }
  }
  return true;
}

CompositionTableau::CompositionTableau(Composition inner, Grid grid)
    : inner_(std::move(inner)), grid_(std::move(grid)) {
  if (!is_composition_tableau(inner_, grid_)) {
    throw precondition_error("filling is not a composition tableau of inner shape (" +
                             inner_.to_string() + ")");
  }
}

Composition CompositionTableau::outer() const { return row_lengths(grid_); }

int CompositionTableau::size() const {
  int n = 0;
  for (const auto& row : grid_) n += static_cast<int>(row.size());
  return n - inner_.size();
}

std::vector<int> CompositionTableau::content() const {
  int m = 0;
  for (const auto& row : grid_) {
    for (int v : row) m = std::max(m, v);
  }
  std::vector<int> cont(idx(m), 0);
  for (const auto& row : grid_) {
    for (int v : row) {
      if (v > 0) ++cont[idx(v - 1)];
    }
  }
  return cont;
}

bool CompositionTableau::is_standard() const {
  const auto cont = content();
  return static_cast<int>(cont.size()) == size() &&
         std::all_of(cont.begin(), cont.end(), [](int k) { return k == 1; });
}

bool operator<(const CompositionTableau& a, const CompositionTableau& b) {
  if (a.inner() != b.inner()) return a.inner() < b.inner();
  const Word wa = column_reading_word(a);
  const Word wb = column_reading_word(b);
  if (wa != wb) return wa < wb;
  return a.outer() < b.outer();
}

namespace {

// Filled entries of each column, sorted increasingly.
std::vector<std::vector<int>> column_sets(const CompositionTableau& t) {
  std::vector<std::vector<int>> cols;
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < t.row_length(r); ++c) {
      if (static_cast<int>(cols.size()) <= c) cols.resize(idx(c + 1));
      if (!t.in_inner(r, c)) cols[idx(c)].push_back(t.at(r, c));
    }
  }
  for (auto& col : cols) std::sort(col.begin(), col.end());
  return cols;
}

}  // namespace

Word column_reading_word(const CompositionTableau& t) {
  Word w;
  for (const auto& col : column_sets(t)) w.insert(w.end(), col.rbegin(), col.rend());
  return w;
}

CompositionTableau canonical_ct(const Composition& alpha) {
  if (alpha.empty()) throw precondition_error("canonical tableau of the empty composition");
  Grid grid;
  int next = 1;
  for (int part : alpha.parts()) {
    std::vector<int> row(idx(part));
    for (int& v : row) v = next++;
    grid.push_back(std::move(row));
  }
  return make_unchecked_ct({}, std::move(grid));
}

SkewTableau rho(const CompositionTableau& t) {
  const Partition mu = sort_composition(t.inner());
  const Partition mu_t = transpose(mu);
  const auto cols = column_sets(t);
  Grid grid;
  for (int r = 0; r < mu.length(); ++r) grid.emplace_back(idx(mu.part(r + 1)), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const int base = mu_t.part(static_cast<int>(c) + 1);
    for (std::size_t k = 0; k < cols[c].size(); ++k) {
      const std::size_t r = idx(base) + k;
      if (grid.size() <= r) grid.emplace_back();
      if (grid[r].size() != c) throw internal_error("rho produced a non-partition shape");
      grid[r].push_back(cols[c][k]);
    }
  }
  return SkewTableau(mu, std::move(grid));
}

CompositionTableau rho_inverse(const SkewTableau& t, const Composition& beta) {
  if (t.inner() != sort_composition(beta)) {
    throw precondition_error("inner shape (" + t.inner().to_string() +
                             ") is not sort of (" + beta.to_string() + ")");
  }
  Grid grid;
  for (int part : beta.parts()) grid.emplace_back(idx(part), 0);
  const int width = t.num_rows() > 0 ? t.row_length(0) : 0;
  for (int c = 0; c < width; ++c) {
    std::vector<int> entries;
    for (int r = 0; r < t.num_rows(); ++r) {
      if (t.is_filled(r, c)) entries.push_back(t.at(r, c));
    }
    if (c == 0) {
      for (int v : entries) grid.push_back({v});
      continue;
    }
    for (int v : entries) {
      int target = -1;
      for (int r = static_cast<int>(grid.size()) - 1; r >= 0; --r) {
        auto& row = grid[idx(r)];
        if (static_cast<int>(row.size()) != c) continue;
        const bool left_inner = c <= beta.part(r + 1);
        if (left_inner || row.back() <= v) {
          target = r;
          break;
        }
      }
      if (target < 0) {
        throw precondition_error("entry " + std::to_string(v) + " of column " +
                                 std::to_string(c + 1) + " cannot be placed");
      }
      grid[idx(target)].push_back(v);
    }
  }
  return CompositionTableau(beta, std::move(grid));
}

CompositionTableau rectify_ct(const CompositionTableau& t) {
  if (t.size() == 0) return make_unchecked_ct({}, {});
  return rho_inverse(jdt_rectify(rho(t)), {});
}

Composition box_add(int i, const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  if (i == 1) {
    parts.push_back(1);
    return Composition(std::move(parts));
  }
  for (auto it = parts.rbegin(); i >= 2 && it != parts.rend(); ++it) {
    if (*it == i - 1) {
      ++*it;
      return Composition(std::move(parts));
    }
  }
  throw precondition_error("t_" + std::to_string(i) + " is undefined on (" + alpha.to_string() +
                           "): no part equals " + std::to_string(i - 1));
}

Composition box_add_word(std::span<const int> w, const Composition& beta) {
  Composition cur = beta;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = box_add(*it, cur);
  return cur;
}

namespace {

struct SctSearch {
  const Composition& gamma;
  const Composition& beta;
  Grid grid;             // full outer rows; unfilled skew cells hold 0
  std::vector<int> len;  // present cells per row (inner cells count)
  int started = 0;       // rows present so far
  int n = 0;
  std::vector<CompositionTableau> out;

  bool present(int r, int c) const { return r < started && c < len[idx(r)]; }

  // Placing the largest entry so far at (r, c) creates no new triple
  // violation unless it plays the role of c; then every higher row whose
  // cell in column c-1 is present must already have its cell in column c.
  bool placeable(int r, int c) const {
    if (c == 0) return true;
    for (int j = r + 1; j < started; ++j) {
      if (present(j, c - 1) && !present(j, c)) return false;
    }
    return true;
  }

  void run(int next) {
    if (next > n) {
      out.push_back(make_unchecked_ct(beta, grid));
      return;
    }
    for (int r = 0; r < started; ++r) {
      const int c = len[idx(r)];
      if (c >= gamma.part(r + 1) || !placeable(r, c)) continue;
      grid[idx(r)][idx(c)] = next;
      ++len[idx(r)];
      run(next + 1);
      --len[idx(r)];
      grid[idx(r)][idx(c)] = 0;
    }
    if (started < gamma.length()) {
      const int r = started;
      grid[idx(r)][0] = next;
      len[idx(r)] = 1;
      ++started;
      run(next + 1);
      --started;
      len[idx(r)] = 0;
      grid[idx(r)][0] = 0;
    }
  }
};

void ct_fill(const Composition& beta, Grid& grid, const std::vector<std::pair<int, int>>& cells,
             std::size_t k, int max_entry, std::vector<CompositionTableau>& out) {
  if (k == cells.size()) {
    if (is_composition_tableau(beta, grid)) out.push_back(make_unchecked_ct(beta, grid));
    return;
  }
  const auto [r, c] = cells[k];
  int lo = 1;
  if (c > beta.part(r + 1)) lo = grid[idx(r)][idx(c - 1)];
  for (int v = lo; v <= max_entry; ++v) {
    grid[idx(r)][idx(c)] = v;
    ct_fill(beta, grid, cells, k + 1, max_entry, out);
  }
  grid[idx(r)][idx(c)] = 0;
}

}  // namespace

std::vector<CompositionTableau> enumerate_sct(const Composition& gamma,
                                              const Composition& beta) {
  if (!lc_leq(beta, gamma)) {
    throw precondition_error("(" + beta.to_string() + ") is not below (" + gamma.to_string() +
                             ") in L_c");
  }
  SctSearch s{gamma, beta, {}, {}, beta.length(), gamma.size() - beta.size(), {}};
  for (int r = 0; r < gamma.length(); ++r) {
    s.grid.emplace_back(idx(gamma.part(r + 1)), 0);
    s.len.push_back(beta.part(r + 1));
  }
  s.run(1);
  sort_canonical(s.out);
  return std::move(s.out);
}

std::vector<CompositionTableau> enumerate_ct(const Composition& gamma, const Composition& beta,
                                             int max_entry) {
  if (!lc_leq(beta, gamma)) {
    throw precondition_error("(" + beta.to_string() + ") is not below (" + gamma.to_string() +
                             ") in L_c");
  }
  Grid grid;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < gamma.length(); ++r) {
    grid.emplace_back(idx(gamma.part(r + 1)), 0);
    for (int c = beta.part(r + 1); c < gamma.part(r + 1); ++c) cells.emplace_back(r, c);
  }
  std::vector<CompositionTableau> out;
  ct_fill(beta, grid, cells, 0, max_entry, out);
  sort_canonical(out);
  return out;
}

}  // namespace nclr
