#pragma once

// Words, permutations, compositions, partitions and the Young composition
// poset. Everything here is a value type; all free functions are pure.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nclr {

// A word over the positive integers. Letters are stored as-is.
using Word = std::vector<int>;

bool is_valid_word(std::span<const int> w);

// Inversion pairs (i, j), 1-based, with i < j and w_i > w_j.
std::vector<std::pair<int, int>> inversions(std::span<const int> w);

Word reversed(std::span<const int> w);

// True iff w is a strictly decreasing word (possibly empty).
bool is_column_word(std::span<const int> w);

bool is_lattice(std::span<const int> w);
bool is_reverse_lattice(std::span<const int> w);

// Letter multiplicities: result[k] counts letter k+1. Length is max letter.
std::vector<int> letter_content(std::span<const int> w);

////////////////////////////////////////////////////////////////////////
// Permutation
////////////////////////////////////////////////////////////////////////

// A permutation of [n] in one-line notation. Products compose as functions:
// (a * b)(x) = a(b(x)), so s_1 * s_2 means "apply s_2 first".
class Permutation {
 public:
  Permutation() = default;  // the unique element of S_0
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  // Adjacent transposition s_i in S_n, 1 <= i < n.
  static Permutation simple(int i, int n);
  static Permutation longest(int n);
  // Product s_{i_1} * ... * s_{i_k} in S_n.
  static Permutation from_reduced_word(std::span<const int> word, int n);

  int degree() const { return static_cast<int>(one_line_.size()); }
  // Image of x, 1 <= x <= degree().
  int operator()(int x) const { return one_line_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }

  Permutation inverse() const;
  int length() const;  // number of inversions
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// std(w): the permutation with the same inversion set as w. Equal letters
// are relabelled increasingly from left to right.
Permutation standardize_word(std::span<const int> w);

// Canonical reduced word: repeatedly split off the smallest right descent.
// The product s_{i_1} ... s_{i_k} of the result equals sigma and k is the
// number of inversions of sigma.
std::vector<int> reduced_word(const Permutation& sigma);

// (sigma . seq)_i = seq_{sigma^{-1}(i)}. Under the product convention above
// this satisfies (a * b) . seq = a . (b . seq).
std::vector<int> permute_sequence(const Permutation& sigma, std::span<const int> seq);

////////////////////////////////////////////////////////////////////////
// Compositions and partitions
////////////////////////////////////////////////////////////////////////

class Composition {
 public:
  Composition() = default;  // the empty composition
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // 1-based part access; returns 0 beyond the length.
  int part(int i) const;
  int largest_part() const;

  std::string to_string() const;  // "2,4,1"; "" for the empty composition

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // must be weakly decreasing
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int part(int i) const;  // 1-based; 0 beyond the length

  Composition as_composition() const { return Composition(parts_); }
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition sort_composition(const Composition& alpha);
Composition reverse(const Composition& alpha);
// {alpha_1, alpha_1 + alpha_2, ..., alpha_1 + ... + alpha_{l-1}}
std::set<int> set_of(const Composition& alpha);
// The composition of n whose set is `s` (inverse of set_of).
Composition composition_from_set(const std::set<int>& s, int n);
Partition transpose(const Partition& lambda);
// True iff mu is contained in lambda componentwise.
bool contains(const Partition& lambda, const Partition& mu);

std::vector<Composition> compositions_of(int n);
std::vector<Partition> partitions_of(int n);
// Partitions mu with mu contained in lambda.
std::vector<Partition> partitions_inside(const Partition& lambda);
// Distinct rearrangements of the parts of lambda, in lexicographic order.
std::vector<Composition> rearrangements(const Partition& lambda);

// The minimal-length permutation sigma in S_{l(nu)} with sigma . nu = alpha.
// Throws precondition_error unless sort(alpha) == nu.
Permutation permutation_to(const Partition& nu, const Composition& alpha);

////////////////////////////////////////////////////////////////////////
// Young composition poset L_c
////////////////////////////////////////////////////////////////////////

// Compositions covering beta: append a part 1, or increment beta_k when no
// later part equals beta_k. Sorted lexicographically.
std::vector<Composition> lc_covers(const Composition& beta);

// beta <=_c alpha (reflexive).
bool lc_leq(const Composition& beta, const Composition& alpha);

// Every composition reachable from beta by exactly `steps` covers, sorted.
std::vector<Composition> lc_above(const Composition& beta, int steps);

////////////////////////////////////////////////////////////////////////
// Parsing
////////////////////////////////////////////////////////////////////////

// "2,4,1" -> (2,4,1); "" -> empty. Whitespace around items is ignored.
std::vector<int> parse_int_list(std::string_view text);
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);
Permutation parse_permutation(std::string_view text);

std::string join(std::span<const int> values, std::string_view sep = ",");

}  // namespace nclr
