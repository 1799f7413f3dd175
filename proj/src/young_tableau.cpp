#include "nclr/young_tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nclr/error.hpp"

namespace nclr {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Partition shape_of(const Grid& grid) {
  std::vector<int> parts;
  parts.reserve(grid.size());
  for (const auto& row : grid) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

Partition trimmed(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

void sort_canonical(std::vector<SkewTableau>& ts) {
  std::vector<std::pair<Word, std::size_t>> keys;
  keys.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) keys.emplace_back(column_reading_word(ts[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<SkewTableau> sorted;
  sorted.reserve(ts.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(ts[i]));
  ts = std::move(sorted);
}

}  // namespace

SkewTableau make_unchecked(Partition inner, Grid grid) {
  return SkewTableau(SkewTableau::Unchecked{}, std::move(inner), std::move(grid));
}

SkewTableau::SkewTableau(Partition inner, Grid grid)
    : inner_(std::move(inner)), grid_(std::move(grid)) {
  for (std::size_t r = 0; r < grid_.size(); ++r) {
    if (grid_[r].empty() || (r > 0 && grid_[r].size() > grid_[r - 1].size())) {
      throw precondition_error("row lengths do not form a partition");
    }
  }
  if (inner_.length() > num_rows()) throw precondition_error("inner shape exceeds outer shape");
  for (int r = 0; r < num_rows(); ++r) {
    if (inner_.part(r + 1) > row_length(r)) {
      throw precondition_error("inner shape exceeds outer shape");
    }
    for (int c = 0; c < row_length(r); ++c) {
      const int v = at(r, c);
      if (in_inner(r, c)) {
        if (v != 0) throw precondition_error("inner cells must hold 0");
        continue;
      }
      if (v < 1) throw precondition_error("entries must be positive");
      if (c > 0 && !in_inner(r, c - 1) && at(r, c - 1) > v) {
        throw precondition_error("row " + std::to_string(r + 1) + " is not weakly increasing");
      }
      if (r > 0 && !in_inner(r - 1, c) && at(r - 1, c) >= v) {
        throw precondition_error("column " + std::to_string(c + 1) +
                                 " is not strictly increasing");
      }
    }
  }
}

SkewTableau SkewTableau::from_skew_rows(const Partition& inner, const Grid& filled) {
  Grid grid;
  const auto rows = std::max<std::size_t>(filled.size(), idx(inner.length()));
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<int> row(idx(inner.part(static_cast<int>(r) + 1)), 0);
    if (r < filled.size()) row.insert(row.end(), filled[r].begin(), filled[r].end());
    grid.push_back(std::move(row));
  }
  while (!grid.empty() && grid.back().empty()) grid.pop_back();
  return SkewTableau(inner, std::move(grid));
}

SkewTableau SkewTableau::empty_of(const Partition& shape) {
  Grid grid;
  for (int p : shape.parts()) grid.emplace_back(idx(p), 0);
  return make_unchecked(shape, std::move(grid));
}

Partition SkewTableau::outer() const { return shape_of(grid_); }

bool SkewTableau::in_outer(int r, int c) const {
  return r >= 0 && c >= 0 && r < num_rows() && c < row_length(r);
}

int SkewTableau::size() const {
  int n = 0;
  for (const auto& row : grid_) n += static_cast<int>(row.size());
  return n - inner_.size();
}

int SkewTableau::max_entry() const {
  int m = 0;
  for (const auto& row : grid_) {
    for (int v : row) m = std::max(m, v);
  }
  return m;
}

std::vector<int> SkewTableau::content() const {
  std::vector<int> cont(idx(max_entry()), 0);
  for (const auto& row : grid_) {
    for (int v : row) {
      if (v > 0) ++cont[idx(v - 1)];
    }
  }
  return cont;
}

bool SkewTableau::is_standard() const {
  const auto cont = content();
  return static_cast<int>(cont.size()) == size() &&
         std::all_of(cont.begin(), cont.end(), [](int k) { return k == 1; });
}

std::vector<Cell> SkewTableau::reading_cells() const {
  std::vector<Cell> cells;
  cells.reserve(idx(size()));
  const int width = num_rows() > 0 ? row_length(0) : 0;
  for (int c = 0; c < width; ++c) {
    for (int r = num_rows() - 1; r >= 0; --r) {
      if (is_filled(r, c)) cells.push_back({r, c});
    }
  }
  return cells;
}

SkewTableau SkewTableau::with_reading_word(std::span<const int> word) const {
  const auto cells = reading_cells();
  if (cells.size() != word.size()) throw precondition_error("reading word length mismatch");
  Grid grid = grid_;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    grid[idx(cells[k].row)][idx(cells[k].col)] = word[k];
  }
  return SkewTableau(inner_, std::move(grid));
}

bool operator<(const SkewTableau& a, const SkewTableau& b) {
  if (a.inner() != b.inner()) return a.inner() < b.inner();
  const Word wa = column_reading_word(a);
  const Word wb = column_reading_word(b);
  if (wa != wb) return wa < wb;
  return a.outer() < b.outer();
}

Word column_reading_word(const SkewTableau& t) {
  Word w;
  for (const Cell& cell : t.reading_cells()) w.push_back(t.at(cell.row, cell.col));
  return w;
}

SkewTableau standardize_tableau(const SkewTableau& t) {
  // Equal entries form a horizontal strip, so reading order by column is
  // left to right.
  std::map<int, std::vector<Cell>> by_value;
  for (int c = 0; t.num_rows() > 0 && c < t.row_length(0); ++c) {
    for (int r = 0; r < t.num_rows(); ++r) {
      if (t.is_filled(r, c)) by_value[t.at(r, c)].push_back({r, c});
    }
  }
  Grid grid = t.grid();
  int next = 1;
  for (const auto& [value, cells] : by_value) {
    for (const Cell& cell : cells) grid[idx(cell.row)][idx(cell.col)] = next++;
  }
  return make_unchecked(t.inner(), std::move(grid));
}

SkewTableau destandardize_tableau(const SkewTableau& standard, std::span<const int> content) {
  if (!standard.is_standard()) throw precondition_error("destandardize needs a standard tableau");
  std::vector<int> value_of;
  for (std::size_t i = 0; i < content.size(); ++i) {
    value_of.insert(value_of.end(), idx(content[i]), static_cast<int>(i + 1));
  }
  if (static_cast<int>(value_of.size()) != standard.size()) {
    throw precondition_error("content does not match tableau size");
  }
  Grid grid = standard.grid();
  for (auto& row : grid) {
    for (int& v : row) {
      if (v > 0) v = value_of[idx(v - 1)];
    }
  }
  return SkewTableau(standard.inner(), std::move(grid));
}

Word column_growth_word(const SkewTableau& t) {
  const SkewTableau s = standardize_tableau(t);
  Word column_of(idx(s.size()), 0);
  for (int r = 0; r < s.num_rows(); ++r) {
    for (int c = 0; c < s.row_length(r); ++c) {
      if (s.is_filled(r, c)) column_of[idx(s.at(r, c) - 1)] = c + 1;
    }
  }
  return Word(column_of.rbegin(), column_of.rend());
}

std::set<int> descent_set(const SkewTableau& t) {
  if (!t.is_standard()) throw precondition_error("descent set needs a standard tableau");
  std::vector<int> row_of(idx(t.size()), 0);
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < t.row_length(r); ++c) {
      if (t.is_filled(r, c)) row_of[idx(t.at(r, c) - 1)] = r;
    }
  }
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < row_of.size(); ++i) {
    if (row_of[i + 1] > row_of[i]) d.insert(static_cast<int>(i + 1));
  }
  return d;
}

Composition descent_composition(const SkewTableau& t) {
  return composition_from_set(descent_set(t), t.size());
}

////////////////////////////////////////////////////////////////////////
// Robinson-Schensted
////////////////////////////////////////////////////////////////////////

namespace {

// Converts columns (each listed bottom-up) into a row grid.
Grid columns_to_grid(const std::vector<std::vector<int>>& cols) {
  Grid grid;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < cols[c].size(); ++r) {
      if (grid.size() <= r) grid.emplace_back();
      grid[r].push_back(cols[c][r]);
    }
  }
  return grid;
}

}  // namespace

InsertionPair rs_insert(std::span<const int> w, InsertionScheme scheme) {
  if (scheme == InsertionScheme::row) {
    Grid p;
    Grid q;
    for (std::size_t k = 0; k < w.size(); ++k) {
      int x = w[k];
      std::size_t r = 0;
      for (;; ++r) {
        if (r == p.size()) {
          p.emplace_back();
          q.emplace_back();
        }
        auto& row = p[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
          row.push_back(x);
          q[r].push_back(static_cast<int>(k + 1));
          break;
        }
        std::swap(x, *it);
      }
    }
    return {make_unchecked({}, std::move(p)), make_unchecked({}, std::move(q))};
  }
  std::vector<std::vector<int>> pcols;
  std::vector<std::vector<int>> qcols;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int x = w[k];
    for (std::size_t c = 0;; ++c) {
      if (c == pcols.size()) {
        pcols.emplace_back();
        qcols.emplace_back();
      }
      auto& col = pcols[c];
      auto it = std::lower_bound(col.begin(), col.end(), x);
      if (it == col.end()) {
        col.push_back(x);
        qcols[c].push_back(static_cast<int>(k + 1));
        break;
      }
      std::swap(x, *it);
    }
  }
  return {make_unchecked({}, columns_to_grid(pcols)), make_unchecked({}, columns_to_grid(qcols))};
}

SkewTableau insertion_tableau(std::span<const int> w) {
  return rs_insert(w, InsertionScheme::row).p;
}

Partition insertion_shape(std::span<const int> w) {
  // Row insertion without recording; shape only.
  std::vector<std::vector<int>> rows;
  for (int x : w) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) rows.emplace_back();
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  return shape_of(rows);
}

bool knuth_equivalent(std::span<const int> u, std::span<const int> v) {
  return insertion_tableau(u) == insertion_tableau(v);
}

////////////////////////////////////////////////////////////////////////
// Jeu de taquin
////////////////////////////////////////////////////////////////////////

SkewTableau jdt_rectify(const SkewTableau& t) { return insertion_tableau(column_reading_word(t)); }

SkewTableau jdt_slide(const SkewTableau& t, Cell corner) {
  const int r0 = corner.row;
  const int c0 = corner.col;
  if (!t.in_inner(r0, c0) || c0 != t.inner().part(r0 + 1) - 1 ||
      t.inner().part(r0 + 2) > c0) {
    throw precondition_error("slide cell is not an inner corner");
  }
  Grid grid = t.grid();
  std::vector<int> inner = t.inner().parts();
  --inner[idx(r0)];
  SkewTableau shape = make_unchecked(trimmed(inner), grid);
  auto filled = [&](int r, int c) { return shape.is_filled(r, c); };
  int r = r0;
  int c = c0;
  for (;;) {
    const bool up = filled(r + 1, c);
    const bool right = filled(r, c + 1);
    if (!up && !right) break;
    if (up && (!right || grid[idx(r + 1)][idx(c)] <= grid[idx(r)][idx(c + 1)])) {
      grid[idx(r)][idx(c)] = grid[idx(r + 1)][idx(c)];
      ++r;
    } else {
      grid[idx(r)][idx(c)] = grid[idx(r)][idx(c + 1)];
      ++c;
    }
  }
  grid[idx(r)].pop_back();
  if (grid[idx(r)].empty()) grid.pop_back();
  return make_unchecked(trimmed(inner), std::move(grid));
}

SkewTableau jdt_reverse_slide(const SkewTableau& t, Cell cell) {
  int r = cell.row;
  int c = cell.col;
  const bool addable = r <= t.num_rows() && c == (r < t.num_rows() ? t.row_length(r) : 0) &&
                       (r == 0 || t.row_length(r - 1) > c);
  if (!addable) throw precondition_error("reverse slide cell is not addable to the outer shape");
  Grid grid = t.grid();
  if (r == t.num_rows()) grid.emplace_back();
  grid[idx(r)].push_back(0);
  auto filled = [&](int rr, int cc) { return t.is_filled(rr, cc); };
  for (;;) {
    const bool down = filled(r - 1, c);
    const bool left = filled(r, c - 1);
    if (!down && !left) break;
    if (down && (!left || grid[idx(r - 1)][idx(c)] >= grid[idx(r)][idx(c - 1)])) {
      grid[idx(r)][idx(c)] = grid[idx(r - 1)][idx(c)];
      --r;
    } else {
      grid[idx(r)][idx(c)] = grid[idx(r)][idx(c - 1)];
      --c;
    }
  }
  grid[idx(r)][idx(c)] = 0;
  std::vector<int> inner = t.inner().parts();
  if (static_cast<int>(inner.size()) <= r) inner.resize(idx(r + 1), 0);
  ++inner[idx(r)];
  return make_unchecked(Partition(std::move(inner)), std::move(grid));
}

SkewTableau jdt_rectify_by_slides(const SkewTableau& t) {
  SkewTableau cur = t;
  while (!cur.inner().empty()) {
    const int r = cur.inner().length() - 1;
    cur = jdt_slide(cur, {r, cur.inner().part(r + 1) - 1});
  }
  return cur;
}

SkewTableau evacuation(const SkewTableau& t) {
  if (!t.is_straight() || !t.is_standard()) {
    throw precondition_error("evacuation needs a standard tableau of straight shape");
  }
  Grid cur = t.grid();
  Grid out;
  for (const auto& row : cur) out.emplace_back(row.size(), 0);
  auto has = [&](int r, int c) {
    return r >= 0 && c >= 0 && r < static_cast<int>(cur.size()) &&
           c < static_cast<int>(cur[idx(r)].size());
  };
  for (int label = t.size(); label >= 1; --label) {
    // Remove the minimum at the corner and slide the hole outwards.
    int r = 0;
    int c = 0;
    for (;;) {
      const bool up = has(r + 1, c);
      const bool right = has(r, c + 1);
      if (!up && !right) break;
      if (up && (!right || cur[idx(r + 1)][idx(c)] < cur[idx(r)][idx(c + 1)])) {
        cur[idx(r)][idx(c)] = cur[idx(r + 1)][idx(c)];
        ++r;
      } else {
        cur[idx(r)][idx(c)] = cur[idx(r)][idx(c + 1)];
        ++c;
      }
    }
    cur[idx(r)].pop_back();
    if (cur[idx(r)].empty()) cur.pop_back();
    out[idx(r)][idx(c)] = label;
  }
  return make_unchecked({}, std::move(out));
}

SkewTableau transpose_tableau(const SkewTableau& t) {
  if (!t.is_straight()) throw precondition_error("transpose needs a straight-shape tableau");
  Grid out;
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < t.row_length(r); ++c) {
      if (static_cast<int>(out.size()) <= c) out.emplace_back();
      out[idx(c)].push_back(t.at(r, c));
    }
  }
  return SkewTableau({}, std::move(out));
}

SkewTableau superstandard_tableau(const Composition& alpha) {
  if (alpha.empty()) throw precondition_error("superstandard tableau of the empty composition");
  // Column c collects start_i + c over the rows i of alpha with alpha_i > c,
  // sorted and bottom-justified.
  std::vector<std::vector<int>> cols(idx(alpha.largest_part()));
  int start = 1;
  for (int part : alpha.parts()) {
    for (int c = 0; c < part; ++c) cols[idx(c)].push_back(start + c);
    start += part;
  }
  for (auto& col : cols) std::sort(col.begin(), col.end());
  return SkewTableau({}, columns_to_grid(cols));
}

////////////////////////////////////////////////////////////////////////
// Enumeration
////////////////////////////////////////////////////////////////////////

namespace {

struct FillState {
  const Partition& lambda;
  const Partition& mu;
  int max_entry;
  Grid grid;
  std::vector<Cell> cells;  // skew cells in row-major order
  std::vector<SkewTableau> out;
};

void fill_rec(FillState& s, std::size_t k) {
  if (k == s.cells.size()) {
    s.out.push_back(make_unchecked(s.mu, s.grid));
    return;
  }
  const auto [r, c] = s.cells[k];
  int lo = 1;
  if (c > s.mu.part(r + 1)) lo = std::max(lo, s.grid[idx(r)][idx(c - 1)]);
  if (r > 0 && c >= s.mu.part(r)) lo = std::max(lo, s.grid[idx(r - 1)][idx(c)] + 1);
  for (int v = lo; v <= s.max_entry; ++v) {
    s.grid[idx(r)][idx(c)] = v;
    fill_rec(s, k + 1);
  }
  s.grid[idx(r)][idx(c)] = 0;
}

void standard_rec(const Partition& mu, Grid& grid, std::vector<int>& len, int next, int n,
                  std::vector<SkewTableau>& out) {
  if (next > n) {
    out.push_back(make_unchecked(mu, grid));
    return;
  }
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const int c = len[r];
    if (c >= static_cast<int>(grid[r].size())) continue;
    if (r > 0 && len[r - 1] <= c) continue;
    grid[r][idx(c)] = next;
    ++len[r];
    standard_rec(mu, grid, len, next + 1, n, out);
    --len[r];
    grid[r][idx(c)] = 0;
  }
}

}  // namespace

std::vector<SkewTableau> all_tableaux(const Partition& lambda, const Partition& mu,
                                      int max_entry) {
  if (!contains(lambda, mu)) throw precondition_error("inner shape not contained in outer shape");
  FillState s{lambda, mu, max_entry, {}, {}, {}};
  for (int r = 0; r < lambda.length(); ++r) {
    s.grid.emplace_back(idx(lambda.part(r + 1)), 0);
    for (int c = mu.part(r + 1); c < lambda.part(r + 1); ++c) s.cells.push_back({r, c});
  }
  fill_rec(s, 0);
  sort_canonical(s.out);
  return std::move(s.out);
}

std::vector<SkewTableau> standard_tableaux(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) throw precondition_error("inner shape not contained in outer shape");
  Grid grid;
  std::vector<int> len;
  for (int r = 0; r < lambda.length(); ++r) {
    grid.emplace_back(idx(lambda.part(r + 1)), 0);
    len.push_back(mu.part(r + 1));
  }
  std::vector<SkewTableau> out;
  standard_rec(mu, grid, len, 1, lambda.size() - mu.size(), out);
  sort_canonical(out);
  return out;
}

}  // namespace nclr
