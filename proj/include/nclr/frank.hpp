#pragma once

// Frank words, the involution iota on two-column frank words, the symmetric
// group action on frank words, lambda/mu-compatibility and the map phi from
// compatible words to skew tableaux.

#include <string>
#include <vector>

#include "nclr/core.hpp"
#include "nclr/young_tableau.hpp"

namespace nclr {

// Maximal strictly decreasing factors of w, left to right.
std::vector<Word> column_factorization(std::span<const int> w);
Composition column_form(std::span<const int> w);
Word concat(const std::vector<Word>& columns);

// P(w) has shape sort(colform(w))^t.
bool is_frank(std::span<const int> w);

// Factors joined with "|", letters written without separators when every
// letter is a single digit and with "," otherwise: "321|7621|5".
std::string format_frank(std::span<const int> w);
// Inverse of format_frank. Also accepts letters separated by "," or spaces
// inside a factor. Throws parse_error; the factors must be the maximal
// column factorization of the resulting word.
Word parse_frank(std::string_view text);

// iota on a frank word with exactly two columns, computed by jeu de taquin
// inside the bounding two-column rectangle.
Word iota(std::span<const int> w);
// The same map computed independently: by column insertion when the first
// column is shorter, and otherwise by searching for the unique two-column
// frank word of the swapped column form in the Knuth class of w.
Word iota_reference(std::span<const int> w);

// s_i on a frank word with m >= i+1 columns: iota applied to factors i, i+1.
Word frank_si(int i, std::span<const int> w);
// s_{g_1}(...(s_{g_k}(w))); the rightmost generator acts first.
Word frank_apply_word(std::span<const int> generators, std::span<const int> w);
Word frank_apply(const Permutation& sigma, std::span<const int> w);

// cont(w') + mu^t is a partition for every suffix w' and cont(w) + mu^t =
// lambda^t.
bool is_compatible(std::span<const int> w, const Partition& lambda, const Partition& mu);

// Frank words of column form alpha that are lambda/mu-compatible, sorted
// lexicographically.
std::vector<Word> enumerate_lr_frank(const Partition& lambda, const Partition& mu,
                                     const Composition& alpha);

// phi: the tableau of shape lambda/mu whose horizontal strips are read off
// the columns of w. Its content is colform(w)^r and cgw(phi(w)) = w.
SkewTableau phi(std::span<const int> w, const Partition& lambda, const Partition& mu);

}  // namespace nclr
