#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symtab/partition.hpp"
#include "symtab/word.hpp"

namespace symtab {

// A filling of D(lambda, H) by letters in [1, bound]. Row i of the storage
// holds lambda_i slots; holes are stored as kHole. Cells outside the domain
// compare above every letter, which algorithms realize through at()
// returning nullopt rather than through a stored value.
class PuncturedTableau {
public:
  static constexpr int kHole = 0;

  PuncturedTableau() = default;
  // Throws Error(InvalidShape) if row lengths are not weakly decreasing or
  // an entry is out of [1, bound] (kHole marks a hole). Empty trailing rows
  // are dropped.
  PuncturedTableau(std::vector<std::vector<int>> rows, int bound);

  int bound() const noexcept { return bound_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  int row_length(int i) const noexcept {
    return i >= 1 && i <= row_count() ? static_cast<int>(rows_[static_cast<std::size_t>(i - 1)].size()) : 0;
  }

  Partition outer_shape() const;
  PuncturedPartition shape() const;
  std::vector<Cell> holes() const;
  bool has_holes() const noexcept;
  // Number of domain cells.
  int cell_count() const noexcept;

  bool in_shape(const Cell& c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
  }
  bool in_domain(const Cell& c) const noexcept { return in_shape(c) && raw(c) != kHole; }
  bool is_hole(const Cell& c) const noexcept { return in_shape(c) && raw(c) == kHole; }

  std::optional<int> at(const Cell& c) const noexcept {
    if (!in_domain(c)) return std::nullopt;
    return raw(c);
  }
  // Entry of a domain cell; precondition in_domain(c).
  int operator()(int row, int col) const noexcept { return raw({row, col}); }

  // Functional updates; the cell must lie inside the outer shape.
  PuncturedTableau with_entry(const Cell& c, int letter) const;
  PuncturedTableau with_hole(const Cell& c) const;
  PuncturedTableau with_bound(int bound) const;

  // Hole-free tableau with the domain as its shape; requires that no hole
  // is slidable (throws Error(HasSlidableHole) otherwise).
  PuncturedTableau straightened() const;

  friend bool operator==(const PuncturedTableau&, const PuncturedTableau&) = default;
  friend auto operator<=>(const PuncturedTableau&, const PuncturedTableau&) = default;

private:
  int raw(const Cell& c) const noexcept {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  }
  int& raw(const Cell& c) noexcept {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  }

  std::vector<std::vector<int>> rows_;
  int bound_ = 1;
};

// A hole-free PuncturedTableau. Operations taking a Tableau reject holes.
using Tableau = PuncturedTableau;

// Weak increase along rows and strict increase down columns, over all pairs
// of domain cells (holes are skipped, not treated as breaks).
bool is_semistandard(const PuncturedTableau& t) noexcept;

// Semistandard, hole-free, and T(i,1) >= 2i-1 for every row.
bool is_symplectic(const Tableau& t) noexcept;

// Rows left to right, bottom row first.
Word row_word(const PuncturedTableau& t);
// Columns bottom to top, leftmost column first.
Word column_word(const PuncturedTableau& t);

// Appends x at the end of row r. Throws NotAddable / NotSemistandard.
Tableau add_box(const Tableau& t, int r, int x);

// Entries of the first column, top to bottom.
Word first_column(const Tableau& t);
// The tableau with the first column deleted (S(i,j) = T(i,j+1)).
Tableau drop_first_column(const Tableau& t);

// Text format: one row per line, entries separated by single spaces, holes
// as "o". The empty tableau is the empty string.
std::string render(const PuncturedTableau& t);
// Throws ParseError with 1-based line/column.
PuncturedTableau parse_tableau(std::string_view text, int bound);

// JSON format: {"rows":[[1,"hole"],[2]]}.
std::string render_json(const PuncturedTableau& t);
PuncturedTableau parse_tableau_json(std::string_view text, int bound);

// Largest entry, or 0 for a tableau without entries.
int max_entry(const PuncturedTableau& t) noexcept;

}  // namespace symtab
