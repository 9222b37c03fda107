#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace symtab {

// A box of a Young diagram; rows and columns are 1-based. The defaulted
// ordering is the lexicographic order on (row, col).
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

// Weakly decreasing sequence of positive parts. Trailing zeros are never
// stored, so () is the unique empty partition.
class Partition {
public:
  Partition() = default;
  // Throws Error(InvalidShape) unless parts are positive and weakly
  // decreasing. Trailing zeros are stripped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  // Part i for i >= 1, zero beyond the length. Row 0 is the unbounded
  // virtual part and must be handled by the caller (see addable_rows).
  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  const std::vector<int>& parts() const noexcept { return parts_; }

  bool has_cell(const Cell& c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }

  // Cells of D(lambda) in lexicographic order.
  std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

struct SkewPartition {
  Partition outer;
  Partition inner;

  // Throws Error(InvalidShape) unless inner is contained in outer.
  SkewPartition(Partition outer_shape, Partition inner_shape);

  int size() const noexcept { return outer.size() - inner.size(); }
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewPartition&, const SkewPartition&) = default;
};

// A partition together with a set of holes inside its diagram. Holes are
// kept sorted lexicographically.
class PuncturedPartition {
public:
  PuncturedPartition() = default;
  // Throws Error(InvalidShape) if a hole lies outside D(shape).
  PuncturedPartition(Partition shape, std::vector<Cell> holes);
  explicit PuncturedPartition(const SkewPartition& skew);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<Cell>& holes() const noexcept { return holes_; }

  bool is_hole(const Cell& c) const noexcept;
  bool in_domain(const Cell& c) const noexcept { return shape_.has_cell(c) && !is_hole(c); }
  std::vector<Cell> domain() const;

  friend bool operator==(const PuncturedPartition&, const PuncturedPartition&) = default;

private:
  Partition shape_;
  std::vector<Cell> holes_;
};

std::vector<int> addable_rows(const Partition& lambda);
std::vector<int> removable_rows(const Partition& lambda);
bool is_addable(const Partition& lambda, int r) noexcept;
bool is_removable(const Partition& lambda, int r) noexcept;
Partition add_row(const Partition& lambda, int r);
Partition remove_row(const Partition& lambda, int r);

// mu is contained in lambda cellwise.
bool contains(const Partition& mu, const Partition& lambda) noexcept;

bool is_horizontal_strip(const SkewPartition& skew) noexcept;
bool is_vertical_strip(const SkewPartition& skew) noexcept;

// For a single-box difference between shapes, the row that differs, or 0.
int differing_row(const Partition& a, const Partition& b) noexcept;

std::vector<Cell> slidable_holes(const PuncturedPartition& pp);
std::vector<Cell> reversely_slidable_holes(const PuncturedPartition& pp);

// Reads a punctured partition without slidable holes as an ordinary
// partition whose diagram is the domain.
Partition as_partition(const PuncturedPartition& pp);
// Reads a punctured partition without reversely slidable holes as a skew
// partition whose diagram is the domain.
SkewPartition as_skew(const PuncturedPartition& pp);

std::string to_string(const Partition& lambda);
std::string to_string(const SkewPartition& skew);
// Accepts "(5,4,3,3,1)", "()", or bare "5,4,3". Throws ParseError.
Partition parse_partition(std::string_view text);

}  // namespace symtab
