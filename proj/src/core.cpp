#include "nclr/core.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "nclr/error.hpp"

namespace nclr {

bool is_valid_word(std::span<const int> w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 1; });
}

std::vector<std::pair<int, int>> inversions(std::span<const int> w) {
  std::vector<std::pair<int, int>> result;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) result.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return result;
}

Word reversed(std::span<const int> w) { return Word(w.rbegin(), w.rend()); }

bool is_column_word(std::span<const int> w) {
  return std::adjacent_find(w.begin(), w.end(), std::less_equal<>()) == w.end();
}

bool is_lattice(std::span<const int> w) {
  std::vector<int> count;
  for (int x : w) {
    if (static_cast<int>(count.size()) < x + 1) count.resize(static_cast<std::size_t>(x + 1), 0);
    ++count[static_cast<std::size_t>(x)];
    if (x > 1 && count[static_cast<std::size_t>(x)] > count[static_cast<std::size_t>(x - 1)]) {
      return false;
    }
  }
  return true;
}

bool is_reverse_lattice(std::span<const int> w) { return is_lattice(reversed(w)); }

std::vector<int> letter_content(std::span<const int> w) {
  std::vector<int> content;
  for (int x : w) {
    if (static_cast<int>(content.size()) < x) content.resize(static_cast<std::size_t>(x), 0);
    ++content[static_cast<std::size_t>(x - 1)];
  }
  return content;
}

////////////////////////////////////////////////////////////////////////
// Permutation
////////////////////////////////////////////////////////////////////////

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int x : one_line_) {
    if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x)]) {
      throw precondition_error("not a permutation: " + join(one_line_, " "));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.one_line_ = std::move(v);
  return p;
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) {
    throw precondition_error("s_" + std::to_string(i) + " is not a generator of S_" +
                             std::to_string(n));
  }
  Permutation p = identity(n);
  std::swap(p.one_line_[static_cast<std::size_t>(i - 1)], p.one_line_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p = identity(n);
  std::reverse(p.one_line_.begin(), p.one_line_.end());
  return p;
}

Permutation Permutation::from_reduced_word(std::span<const int> word, int n) {
  Permutation p = identity(n);
  for (int i : word) p = p * simple(i, n);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int x = 1; x <= degree(); ++x) p.one_line_[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return p;
}

int Permutation::length() const { return static_cast<int>(inversions(one_line_).size()); }

bool Permutation::is_identity() const { return *this == identity(degree()); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw precondition_error("permutation degrees differ");
  Permutation p = b;
  for (int x = 1; x <= b.degree(); ++x) p.one_line_[static_cast<std::size_t>(x - 1)] = a(b(x));
  return p;
}

Permutation standardize_word(std::span<const int> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)];
  });
  std::vector<int> one_line(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    one_line[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank + 1);
  }
  return Permutation(std::move(one_line));
}

std::vector<int> reduced_word(const Permutation& sigma) {
  // sigma = (sigma s_i) s_i with one fewer inversion whenever i is a right
  // descent, so peel descents off the right end.
  std::vector<int> word;
  std::vector<int> v = sigma.one_line();
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] < v[i + 1]) ++i;
    if (i + 1 >= v.size()) break;
    std::swap(v[i], v[i + 1]);
    word.push_back(static_cast<int>(i + 1));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> permute_sequence(const Permutation& sigma, std::span<const int> seq) {
  if (static_cast<int>(seq.size()) != sigma.degree()) {
    throw precondition_error("sequence length " + std::to_string(seq.size()) +
                             " does not match permutation degree " +
                             std::to_string(sigma.degree()));
  }
  const Permutation inv = sigma.inverse();
  std::vector<int> out(seq.size());
  for (int i = 1; i <= sigma.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = seq[static_cast<std::size_t>(inv(i) - 1)];
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Compositions and partitions
////////////////////////////////////////////////////////////////////////

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw precondition_error("composition parts must be positive: " + join(parts_));
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::part(int i) const {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Composition::largest_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

std::string Composition::to_string() const { return join(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw precondition_error("not a partition: " + join(parts_));
    }
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

std::string Partition::to_string() const { return join(parts_); }

Partition sort_composition(const Composition& alpha) {
  std::vector<int> p = alpha.parts();
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

Composition reverse(const Composition& alpha) {
  return Composition(std::vector<int>(alpha.parts().rbegin(), alpha.parts().rend()));
}

std::set<int> set_of(const Composition& alpha) {
  std::set<int> s;
  int sum = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    sum += alpha.parts()[static_cast<std::size_t>(i)];
    s.insert(sum);
  }
  return s;
}

Composition composition_from_set(const std::set<int>& s, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int x : s) {
    if (x <= prev || x >= n) throw precondition_error("subset is not inside [n-1]");
    parts.push_back(x - prev);
    prev = x;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int row : lambda.parts()) {
    for (int c = 0; c < row; ++c) ++t[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(t));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) return false;
  }
  return true;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> result;
  if (n < 0) return result;
  if (n == 0) return {Composition()};
  // Subsets of [n-1] in binary order, then sorted lexicographically.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> s;
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) s.insert(i);
    }
    result.push_back(composition_from_set(s, n));
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void inside_rec(const Partition& lambda, std::size_t row, int bound, std::vector<int>& cur,
                std::vector<Partition>& out) {
  if (row == static_cast<std::size_t>(lambda.length())) {
    std::vector<int> parts = cur;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.emplace_back(std::move(parts));
    return;
  }
  const int cap = std::min(bound, lambda.parts()[row]);
  for (int p = 0; p <= cap; ++p) {
    cur.push_back(p);
    inside_rec(lambda, row + 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  inside_rec(lambda, 0, lambda.part(1), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> rearrangements(const Partition& lambda) {
  std::vector<int> p = lambda.parts();
  std::sort(p.begin(), p.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation permutation_to(const Partition& nu, const Composition& alpha) {
  if (sort_composition(alpha) != nu) {
    throw precondition_error("(" + alpha.to_string() + ") is not a rearrangement of (" +
                             nu.to_string() + ")");
  }
  const int n = nu.length();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!used[static_cast<std::size_t>(j - 1)] && nu.part(j) == alpha.part(i)) {
        used[static_cast<std::size_t>(j - 1)] = true;
        one_line[static_cast<std::size_t>(j - 1)] = i;  // sigma(j) = i
        break;
      }
    }
  }
  return Permutation(std::move(one_line));
}

////////////////////////////////////////////////////////////////////////
// L_c
////////////////////////////////////////////////////////////////////////

std::vector<Composition> lc_covers(const Composition& beta) {
  std::vector<Composition> out;
  std::vector<int> parts = beta.parts();
  parts.push_back(1);
  out.emplace_back(parts);
  parts.pop_back();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    bool repeated_later = false;
    for (std::size_t i = k + 1; i < parts.size(); ++i) repeated_later |= parts[i] == parts[k];
    if (repeated_later) continue;
    ++parts[k];
    out.emplace_back(parts);
    --parts[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool lc_leq(const Composition& beta, const Composition& alpha) {
  if (beta.length() > alpha.length()) return false;
  for (int i = 1; i <= beta.length(); ++i) {
    if (beta.part(i) > alpha.part(i)) return false;
  }
  for (int i = 1; i <= beta.length(); ++i) {
    for (int j = 1; j < i; ++j) {
      if (beta.part(i) >= beta.part(j) && alpha.part(i) < alpha.part(j)) return false;
    }
  }
  return true;
}

std::vector<Composition> lc_above(const Composition& beta, int steps) {
  std::set<Composition> level{beta};
  for (int s = 0; s < steps; ++s) {
    std::set<Composition> next;
    for (const auto& c : level) {
      for (auto& up : lc_covers(c)) next.insert(std::move(up));
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

////////////////////////////////////////////////////////////////////////
// Parsing
////////////////////////////////////////////////////////////////////////

std::vector<int> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> values;
  if (text.empty()) return values;
  for (;;) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw parse_error("expected a comma-separated list of integers, got '" +
                        std::string(text) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

Composition parse_composition(std::string_view text) {
  auto values = parse_int_list(text);
  for (int v : values) {
    if (v <= 0) throw parse_error("composition parts must be positive: '" + std::string(text) + "'");
  }
  return Composition(std::move(values));
}

Partition parse_partition(std::string_view text) {
  auto values = parse_int_list(text);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0 || (i > 0 && values[i] > values[i - 1])) {
      throw parse_error("not a partition: '" + std::string(text) + "'");
    }
  }
  return Partition(std::move(values));
}

Permutation parse_permutation(std::string_view text) {
  try {
    return Permutation(parse_int_list(text));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace nclr
