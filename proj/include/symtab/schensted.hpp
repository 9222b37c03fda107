#pragma once

#include <utility>
#include <vector>

#include "symtab/tableau.hpp"

namespace symtab {

// Outcome of T <- x with the bumping route (c_1, ..., c_r) and the
// row-inserting letters (x_1, ..., x_r); the new box sits at (r, c_r).
struct RowInsertionRecord {
  Tableau result;
  std::vector<int> route;
  std::vector<int> letters;
  int final_row = 0;
};

// Schensted row-insertion. Requires a hole-free semistandard T and
// 1 <= x <= T.bound().
RowInsertionRecord row_insert(const Tableau& t, int x);

// Reverse bumping from the last box of row r: returns the unique (T, x)
// with row_insert(T, x).result == s and final_row == r.
std::pair<Tableau, int> row_insert_inverse(const Tableau& s, int r);

}  // namespace symtab
