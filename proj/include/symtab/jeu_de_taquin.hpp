#pragma once

#include <vector>

#include "symtab/tableau.hpp"

namespace symtab {

// Result of sliding the hole at (r, c). route holds the sliding route
// (gamma_{r-1}, gamma_r, ..., gamma_k), where gamma_{r-1} = c and gamma_i is
// the column at which the hole leaves row i; terminal_row is k and the hole
// finally rests at (k, gamma_k).
struct SlideResult {
  PuncturedTableau tableau;
  std::vector<int> route;
  int terminal_row = 0;
};

// Forward jeu de taquin slide. The hole moves right when the entry to its
// right is strictly smaller than the entry below, and down otherwise; a
// missing neighbour counts as larger than any letter.
// Throws NotAHole / NotSemistandard.
SlideResult slide(const PuncturedTableau& t, int r, int c);

// Reverse slide. The hole moves left when the entry to its left is strictly
// larger than the entry above, and up otherwise; a missing neighbour is
// never chosen.
PuncturedTableau reverse_slide(const PuncturedTableau& t, int r, int c);

// Slides the lexicographically latest slidable hole until none is left and
// returns the hole-free result.
Tableau rectify(const PuncturedTableau& t);

// Reverse-slides the lexicographically first reversely slidable hole until
// none is left. The result keeps its holes, which then form the inner shape
// of a skew tableau (see as_skew).
PuncturedTableau reverse_rectify(const PuncturedTableau& t);

}  // namespace symtab
