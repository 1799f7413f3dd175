#include "nclr/frank.hpp"

#include <algorithm>
#include <charconv>

#include "nclr/error.hpp"

namespace nclr {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Two columns read top to bottom, both top-justified at row height-1. The
// unfilled cells below `left` form the inner shape.
SkewTableau two_column_tableau(const Partition& inner, const Word& left, const Word& right,
                               int height) {
  Grid grid(idx(height));
  const int left_start = height - static_cast<int>(left.size());
  const int right_start = height - static_cast<int>(right.size());
  for (int r = 0; r < height; ++r) {
    auto& row = grid[idx(r)];
    row.push_back(r < left_start ? 0 : left[left.size() - 1 - idx(r - left_start)]);
    if (r >= right_start) row.push_back(right[right.size() - 1 - idx(r - right_start)]);
  }
  return SkewTableau(inner, std::move(grid));
}

void require_two_columns(std::span<const int> w, const std::vector<Word>& cols) {
  if (cols.size() != 2 || !is_frank(w)) {
    throw precondition_error("iota needs a frank word with two columns, got " +
                             format_frank(w));
  }
}

}  // namespace

std::vector<Word> column_factorization(std::span<const int> w) {
  std::vector<Word> cols;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k == 0 || w[k - 1] <= w[k]) cols.emplace_back();
    cols.back().push_back(w[k]);
  }
  return cols;
}

Composition column_form(std::span<const int> w) {
  std::vector<int> parts;
  for (const auto& col : column_factorization(w)) parts.push_back(static_cast<int>(col.size()));
  return Composition(std::move(parts));
}

Word concat(const std::vector<Word>& columns) {
  Word w;
  for (const auto& col : columns) w.insert(w.end(), col.begin(), col.end());
  return w;
}

bool is_frank(std::span<const int> w) {
  return insertion_shape(w) == transpose(sort_composition(column_form(w)));
}

std::string format_frank(std::span<const int> w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  bool first = true;
  for (const auto& col : column_factorization(w)) {
    if (!first) out += '|';
    first = false;
    out += digits ? join(col, "") : join(col, ",");
  }
  return out;
}

Word parse_frank(std::string_view text) {
  if (text.empty()) return {};
  Word w;
  std::size_t factors = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('|', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    const bool separated = part.find_first_of(", ") != std::string_view::npos;
    if (separated) {
      std::string normalized(part);
      std::replace(normalized.begin(), normalized.end(), ' ', ',');
      normalized.erase(std::unique(normalized.begin(), normalized.end(),
                                   [](char a, char b) { return a == ',' && b == ','; }),
                       normalized.end());
      for (int x : parse_int_list(normalized)) w.push_back(x);
    } else {
      for (char ch : part) {
        if (ch < '1' || ch > '9') throw parse_error("bad letter in frank word \"" + std::string(text) + "\"");
        w.push_back(ch - '0');
      }
    }
    ++factors;
    if (end == text.size()) break;
    start = end + 1;
  }
  if (column_factorization(w).size() != factors) {
    throw parse_error("\"" + std::string(text) + "\" is not split into maximal column words");
  }
  return w;
}

Word iota(std::span<const int> w) {
  const auto cols = column_factorization(w);
  require_two_columns(w, cols);
  const Word& u = cols[0];
  const Word& v = cols[1];
  const int p = static_cast<int>(u.size());
  const int q = static_cast<int>(v.size());
  if (p == q) return Word(w.begin(), w.end());
  if (p > q) {
    // Straight tableau with columns u, v; reverse slides out of the empty
    // cells of the second column, lowest first.
    Grid grid(idx(p));
    for (int r = 0; r < p; ++r) {
      grid[idx(r)].push_back(u[idx(p - 1 - r)]);
      if (r < q) grid[idx(r)].push_back(v[idx(q - 1 - r)]);
    }
    SkewTableau t({}, std::move(grid));
    for (int r = q; r < p; ++r) t = jdt_reverse_slide(t, {r, 1});
    return column_reading_word(t);
  }
  // First column shorter: top-justify it in the q-row rectangle and slide
  // the holes out.
  std::vector<int> inner(idx(q - p), 1);
  SkewTableau t = two_column_tableau(Partition(inner), u, v, q);
  for (int r = q - p - 1; r >= 0; --r) t = jdt_slide(t, {r, 0});
  return column_reading_word(t);
}

Word iota_reference(std::span<const int> w) {
  const auto cols = column_factorization(w);
  require_two_columns(w, cols);
  const std::size_t p = cols[0].size();
  const std::size_t q = cols[1].size();
  if (p == q) return Word(w.begin(), w.end());
  if (p < q) {
    // Column-insert v from its smallest letter, then a_p down to a_1.
    return column_reading_word(rs_insert(reversed(w), InsertionScheme::column).p);
  }
  Word letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  const SkewTableau target = insertion_tableau(w);
  std::vector<Word> found;
  std::vector<bool> pick(letters.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(q), pick.end(), true);
  do {
    Word x;
    Word y;
    for (std::size_t k = letters.size(); k-- > 0;) (pick[k] ? x : y).push_back(letters[k]);
    if (!is_column_word(x) || !is_column_word(y)) continue;
    Word cand = x;
    cand.insert(cand.end(), y.begin(), y.end());
    if (x.back() <= y.front() && insertion_tableau(cand) == target &&
        std::find(found.begin(), found.end(), cand) == found.end()) {
      found.push_back(std::move(cand));
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  if (found.size() != 1) {
    throw internal_error("expected a unique swapped frank word for " + format_frank(w) +
                         ", found " + std::to_string(found.size()));
  }
  return found.front();
}

Word frank_si(int i, std::span<const int> w) {
  auto cols = column_factorization(w);
  const int m = static_cast<int>(cols.size());
  if (i < 1 || i >= m) {
    throw precondition_error("s_" + std::to_string(i) + " is undefined on a frank word with " +
                             std::to_string(m) + " columns");
  }
  Word pair = cols[idx(i - 1)];
  pair.insert(pair.end(), cols[idx(i)].begin(), cols[idx(i)].end());
  const auto swapped = column_factorization(iota(pair));
  if (swapped.size() != 2) throw internal_error("iota did not return two columns");
  cols[idx(i - 1)] = swapped[0];
  cols[idx(i)] = swapped[1];
  Word out = concat(cols);
  if (column_factorization(out).size() != cols.size()) {
    throw internal_error("s_" + std::to_string(i) + " merged columns of " + format_frank(w));
  }
  return out;
}

Word frank_apply_word(std::span<const int> generators, std::span<const int> w) {
  Word cur(w.begin(), w.end());
  for (auto it = generators.rbegin(); it != generators.rend(); ++it) cur = frank_si(*it, cur);
  return cur;
}

Word frank_apply(const Permutation& sigma, std::span<const int> w) {
  return frank_apply_word(reduced_word(sigma), w);
}

bool is_compatible(std::span<const int> w, const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) {
    throw precondition_error("(" + mu.to_string() + ") is not contained in (" +
                             lambda.to_string() + ")");
  }
  const Partition lt = transpose(lambda);
  std::vector<int> h = transpose(mu).parts();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int j = *it;
    if (j < 1) return false;
    if (static_cast<int>(h.size()) < j) h.resize(idx(j), 0);
    ++h[idx(j - 1)];
    if (j > 1 && h[idx(j - 1)] > h[idx(j - 2)]) return false;
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h == lt.parts();
}

namespace {

struct FrankSearch {
  std::vector<int> lt;      // column heights of lambda
  std::vector<int> h;       // current column heights
  std::vector<bool> start;  // start[k]: position k begins a column
  Word w;
  std::vector<Word> out;

  void run(int k) {
    if (k < 0) {
      if (h == lt && is_frank(w)) out.push_back(w);
      return;
    }
    const std::size_t n = w.size();
    for (int j = 1; j <= static_cast<int>(lt.size()); ++j) {
      if (h[idx(j - 1)] >= lt[idx(j - 1)]) continue;
      if (j > 1 && h[idx(j - 1)] + 1 > h[idx(j - 2)]) continue;
      if (idx(k) + 1 < n) {
        const int next = w[idx(k) + 1];
        // Inside a column the word descends; across a boundary it does not.
        if (start[idx(k) + 1] ? j > next : j <= next) continue;
      }
      w[idx(k)] = j;
      ++h[idx(j - 1)];
      run(k - 1);
      --h[idx(j - 1)];
    }
  }
};

}  // namespace

std::vector<Word> enumerate_lr_frank(const Partition& lambda, const Partition& mu,
                                     const Composition& alpha) {
  if (!contains(lambda, mu)) {
    throw precondition_error("(" + mu.to_string() + ") is not contained in (" +
                             lambda.to_string() + ")");
  }
  if (alpha.size() != lambda.size() - mu.size()) {
    throw precondition_error("|alpha| = " + std::to_string(alpha.size()) +
                             " but |lambda/mu| = " + std::to_string(lambda.size() - mu.size()));
  }
  FrankSearch s;
  s.lt = transpose(lambda).parts();
  s.h = transpose(mu).parts();
  s.h.resize(s.lt.size(), 0);
  s.w.assign(idx(alpha.size()), 0);
  s.start.assign(idx(alpha.size()), false);
  int pos = 0;
  for (int part : alpha.parts()) {
    s.start[idx(pos)] = true;
    pos += part;
  }
  s.run(alpha.size() - 1);
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

SkewTableau phi(std::span<const int> w, const Partition& lambda, const Partition& mu) {
  if (!is_compatible(w, lambda, mu)) {
    throw precondition_error(format_frank(w) + " is not compatible with (" + lambda.to_string() +
                             ")/(" + mu.to_string() + ")");
  }
  std::vector<int> h = transpose(lambda).parts();
  Grid grid;
  for (int r = 0; r < lambda.length(); ++r) grid.emplace_back(idx(lambda.part(r + 1)), 0);
  const auto cols = column_factorization(w);
  const int m = static_cast<int>(cols.size());
  for (int i = 0; i < m; ++i) {
    for (int j : cols[idx(i)]) {
      const int r = --h[idx(j - 1)];
      grid[idx(r)][idx(j - 1)] = m - i;
    }
  }
  return SkewTableau(mu, std::move(grid));
}

}  // namespace nclr
