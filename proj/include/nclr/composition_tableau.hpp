#pragma once

// Composition tableaux of skew shape gamma // beta, the canonical tableau
// tau_alpha, the rho_beta bijection with Young tableaux, and box-adding
// operators on compositions.

#include <vector>

#include "nclr/core.hpp"
#include "nclr/young_tableau.hpp"

namespace nclr {

class CompositionTableau {
 public:
  CompositionTableau() = default;
  // `grid` has one row per part of the outer shape (row 0 = bottom) and
  // holds 0 in the cells of `inner`. Throws precondition_error unless the
  // filling satisfies is_composition_tableau.
  CompositionTableau(Composition inner, Grid grid);

  const Composition& inner() const { return inner_; }
  Composition outer() const;
  const Grid& grid() const { return grid_; }

  int num_rows() const { return static_cast<int>(grid_.size()); }
  int row_length(int r) const { return static_cast<int>(grid_[static_cast<std::size_t>(r)].size()); }
  bool in_inner(int r, int c) const { return c < inner_.part(r + 1); }
  int at(int r, int c) const { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  int size() const;
  std::vector<int> content() const;
  bool is_standard() const;

  friend bool operator==(const CompositionTableau&, const CompositionTableau&) = default;
  friend bool operator<(const CompositionTableau& a, const CompositionTableau& b);

 private:
  struct Unchecked {};
  CompositionTableau(Unchecked, Composition inner, Grid grid)
      : inner_(std::move(inner)), grid_(std::move(grid)) {}
  friend CompositionTableau make_unchecked_ct(Composition inner, Grid grid);

  Composition inner_;
  Grid grid_;
};

CompositionTableau make_unchecked_ct(Composition inner, Grid grid);

// True iff `grid` is a composition tableau with inner shape `inner`: rows
// weakly increase, the filled part of the leftmost column strictly
// increases upwards, the triple rule holds, and inner <=_c outer.
bool is_composition_tableau(const Composition& inner, const Grid& grid);

// Entries of every column in decreasing order, columns left to right.
Word column_reading_word(const CompositionTableau& t);

// tau_alpha: row i holds 1 + alpha_1 + ... + alpha_{i-1} through
// alpha_1 + ... + alpha_i.
CompositionTableau canonical_ct(const Composition& alpha);

// rho_beta: sort each column and bottom-justify it on sort(beta).
SkewTableau rho(const CompositionTableau& t);

// rho_beta^{-1}. The inner shape of `t` must equal sort(beta). Leftmost
// column entries open new rows above beta in increasing order; entries of
// later columns go, smallest first, to the highest row whose current last
// cell is inner or holds a value <= the entry.
CompositionTableau rho_inverse(const SkewTableau& t, const Composition& beta);

// rho^{-1}(rect(rho_beta(t))).
CompositionTableau rectify_ct(const CompositionTableau& t);

// t_i: the cover of alpha in L_c whose new box lies in column i.
Composition box_add(int i, const Composition& alpha);
// t_{w_1} ... t_{w_n}(beta); t_{w_n} acts first.
Composition box_add_word(std::span<const int> w, const Composition& beta);

// All standard composition tableaux of shape gamma // beta, ordered
// lexicographically by column reading word.
std::vector<CompositionTableau> enumerate_sct(const Composition& gamma, const Composition& beta);
// All composition tableaux of shape gamma // beta with entries in
// [max_entry], in the same order.
std::vector<CompositionTableau> enumerate_ct(const Composition& gamma, const Composition& beta,
                                             int max_entry);

}  // namespace nclr
