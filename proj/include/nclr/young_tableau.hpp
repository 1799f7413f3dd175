#pragma once

// Skew Young tableaux in French convention: row 1 is the bottom row, rows
// weakly increase to the right, columns strictly increase upwards.

#include <set>
#include <utility>
#include <vector>

#include "nclr/core.hpp"

namespace nclr {

// Row-major filling, row 0 = bottom. A row of the outer shape lambda has
// lambda_r cells; cells of the inner shape hold 0.
using Grid = std::vector<std::vector<int>>;

struct Cell {
  int row = 0;  // 0-based, counted from the bottom
  int col = 0;  // 0-based
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewTableau {
 public:
  SkewTableau() = default;  // empty tableau of shape {} / {}

  // `grid` is the full outer shape with 0 in inner cells. Throws
  // precondition_error if the filling is not a Young tableau of shape
  // outer / inner.
  SkewTableau(Partition inner, Grid grid);

  // Builds a tableau from the skew entries only: filled[r] lists the entries
  // of row r to the right of the inner shape.
  static SkewTableau from_skew_rows(const Partition& inner, const Grid& filled);
  // The empty filling of lambda / lambda.
  static SkewTableau empty_of(const Partition& shape);

  const Partition& inner() const { return inner_; }
  Partition outer() const;
  const Grid& grid() const { return grid_; }

  int num_rows() const { return static_cast<int>(grid_.size()); }
  int row_length(int r) const { return static_cast<int>(grid_[static_cast<std::size_t>(r)].size()); }
  bool in_outer(int r, int c) const;
  bool in_inner(int r, int c) const { return c < inner_.part(r + 1); }
  bool is_filled(int r, int c) const { return in_outer(r, c) && !in_inner(r, c); }
  int at(int r, int c) const { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  int size() const;  // number of skew cells
  int max_entry() const;
  // cont(T): entry k counts the letter k+1, up to the maximal entry.
  std::vector<int> content() const;
  bool is_standard() const;
  bool is_straight() const { return inner_.empty(); }

  // Skew cells in column reading order: columns left to right, each top to
  // bottom.
  std::vector<Cell> reading_cells() const;
  // Same shape, entries replaced along reading_cells() order.
  SkewTableau with_reading_word(std::span<const int> word) const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  // Orders by (inner, column reading word, outer) for canonical listings.
  friend bool operator<(const SkewTableau& a, const SkewTableau& b);

 private:
  struct Unchecked {};
  SkewTableau(Unchecked, Partition inner, Grid grid)
      : inner_(std::move(inner)), grid_(std::move(grid)) {}
  friend SkewTableau make_unchecked(Partition inner, Grid grid);

  Partition inner_;
  Grid grid_;
};

// Internal constructor for code paths that maintain the tableau invariants
// themselves. Not validated.
SkewTableau make_unchecked(Partition inner, Grid grid);

Word column_reading_word(const SkewTableau& t);

// Replaces the entries equal to i left to right by consecutive integers.
SkewTableau standardize_tableau(const SkewTableau& t);
// Inverse of standardize_tableau given the original content.
SkewTableau destandardize_tableau(const SkewTableau& standard, std::span<const int> content);

// Columns (1-based) of the entries n, n-1, ..., 1 of stan(T).
Word column_growth_word(const SkewTableau& t);

// {i : i+1 lies in a row strictly above i}. Requires a standard tableau.
std::set<int> descent_set(const SkewTableau& t);
Composition descent_composition(const SkewTableau& t);

////////////////////////////////////////////////////////////////////////
// Robinson-Schensted
////////////////////////////////////////////////////////////////////////

enum class InsertionScheme { row, column };

struct InsertionPair {
  SkewTableau p;  // insertion tableau, straight shape
  SkewTableau q;  // recording tableau, standard
};

InsertionPair rs_insert(std::span<const int> w, InsertionScheme scheme = InsertionScheme::row);
// Row-insertion P tableau of w.
SkewTableau insertion_tableau(std::span<const int> w);
Partition insertion_shape(std::span<const int> w);

// Knuth equivalence by comparing row-insertion P tableaux.
bool knuth_equivalent(std::span<const int> u, std::span<const int> v);

////////////////////////////////////////////////////////////////////////
// Jeu de taquin
////////////////////////////////////////////////////////////////////////

// Rectification, computed as P(crw(T)) under row insertion.
SkewTableau jdt_rectify(const SkewTableau& t);

// Forward slide into the inner corner `corner` (a cell of the inner shape
// whose removal leaves a partition).
SkewTableau jdt_slide(const SkewTableau& t, Cell corner);
// Reverse slide out of `cell`, which must be addable to the outer shape. The
// vacated hole joins the inner shape.
SkewTableau jdt_reverse_slide(const SkewTableau& t, Cell cell);
// Rectification by repeated forward slides into the topmost inner corner.
SkewTableau jdt_rectify_by_slides(const SkewTableau& t);

// Schuetzenberger evacuation of a standard tableau of straight shape.
SkewTableau evacuation(const SkewTableau& t);

// Transpose of a straight-shape tableau.
SkewTableau transpose_tableau(const SkewTableau& t);

// The unique standard tableau of shape sort(alpha) with descent composition
// alpha.
SkewTableau superstandard_tableau(const Composition& alpha);

////////////////////////////////////////////////////////////////////////
// Enumeration
////////////////////////////////////////////////////////////////////////

// All Young tableaux of shape lambda / mu with entries in [max_entry], in
// canonical order.
std::vector<SkewTableau> all_tableaux(const Partition& lambda, const Partition& mu, int max_entry);
// All standard tableaux of shape lambda / mu, in canonical order.
std::vector<SkewTableau> standard_tableaux(const Partition& lambda, const Partition& mu);

}  // namespace nclr
