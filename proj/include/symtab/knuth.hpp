#pragma once

#include <set>

#include "symtab/tableau.hpp"
#include "symtab/word.hpp"

namespace symtab {

// Words reachable by one elementary Knuth transformation (K1, K2, or an
// inverse) at any position.
std::set<Word> knuth_neighbors(const Word& w);

// The unique semistandard tableau whose row word is Knuth equivalent to w,
// computed by row-inserting the letters left to right. The bound defaults
// to the largest letter.
Tableau insertion_tableau(const Word& w, int bound);
Tableau insertion_tableau(const Word& w);

bool knuth_equivalent(const Word& w, const Word& v);

// Full Knuth class of w by breadth-first closure under knuth_neighbors.
// Exponential; intended for short words as a cross-check.
std::set<Word> knuth_class(const Word& w);

}  // namespace symtab
