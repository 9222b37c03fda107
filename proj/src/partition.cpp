#include "symtab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "symtab/error.hpp"

namespace symtab {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorKind::InvalidShape, "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::InvalidShape, "parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

SkewPartition::SkewPartition(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!contains(inner, outer))
    throw Error(ErrorKind::InvalidShape, to_string(inner) + " is not contained in " + to_string(outer));
}

std::vector<Cell> SkewPartition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer.length(); ++i)
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) out.push_back({i, j});
  return out;
}

PuncturedPartition::PuncturedPartition(Partition shape, std::vector<Cell> holes)
    : shape_(std::move(shape)), holes_(std::move(holes)) {
  std::sort(holes_.begin(), holes_.end());
  holes_.erase(std::unique(holes_.begin(), holes_.end()), holes_.end());
  for (const Cell& h : holes_)
    if (!shape_.has_cell(h))
      throw Error(ErrorKind::InvalidShape, "hole " + to_string(h) + " lies outside " + to_string(shape_));
}

PuncturedPartition::PuncturedPartition(const SkewPartition& skew)
    : PuncturedPartition(skew.outer, skew.inner.cells()) {}

bool PuncturedPartition::is_hole(const Cell& c) const noexcept {
  return std::binary_search(holes_.begin(), holes_.end(), c);
}

std::vector<Cell> PuncturedPartition::domain() const {
  std::vector<Cell> out;
  for (const Cell& c : shape_.cells())
    if (!is_hole(c)) out.push_back(c);
  return out;
}

// Row 0 carries the unbounded virtual part, so row 1 is always addable.
bool is_addable(const Partition& lambda, int r) noexcept {
  if (r < 1) return false;
  return r == 1 || lambda.part(r) < lambda.part(r - 1);
}

bool is_removable(const Partition& lambda, int r) noexcept {
  return r >= 1 && lambda.part(r) > lambda.part(r + 1);
}

std::vector<int> addable_rows(const Partition& lambda) {
  std::vector<int> rows;
  for (int r = 1; r <= lambda.length() + 1; ++r)
    if (is_addable(lambda, r)) rows.push_back(r);
  return rows;
}

std::vector<int> removable_rows(const Partition& lambda) {
  std::vector<int> rows;
  for (int r = 1; r <= lambda.length(); ++r)
    if (is_removable(lambda, r)) rows.push_back(r);
  return rows;
}

Partition add_row(const Partition& lambda, int r) {
  if (!is_addable(lambda, r))
    throw Error(ErrorKind::NotAddable, "row " + std::to_string(r) + " of " + to_string(lambda));
  std::vector<int> parts = lambda.parts();
  if (r > lambda.length()) parts.push_back(1);
  else ++parts[static_cast<std::size_t>(r - 1)];
  return Partition(std::move(parts));
}

Partition remove_row(const Partition& lambda, int r) {
  if (!is_removable(lambda, r))
    throw Error(ErrorKind::NotRemovable, "row " + std::to_string(r) + " of " + to_string(lambda));
  std::vector<int> parts = lambda.parts();
  --parts[static_cast<std::size_t>(r - 1)];
  return Partition(std::move(parts));
}

bool contains(const Partition& mu, const Partition& lambda) noexcept {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool is_horizontal_strip(const SkewPartition& skew) noexcept {
  for (int i = 1; i <= skew.outer.length(); ++i)
    if (skew.inner.part(i) < skew.outer.part(i + 1)) return false;
  return true;
}

bool is_vertical_strip(const SkewPartition& skew) noexcept {
  for (int i = 1; i <= skew.outer.length(); ++i)
    if (skew.outer.part(i) - skew.inner.part(i) > 1) return false;
  return true;
}

int differing_row(const Partition& a, const Partition& b) noexcept {
  const int len = std::max(a.length(), b.length());
  int row = 0;
  for (int i = 1; i <= len; ++i) {
    const int d = a.part(i) - b.part(i);
    if (d == 0) continue;
    if (row != 0 || (d != 1 && d != -1)) return 0;
    row = i;
  }
  return row;
}

std::vector<Cell> slidable_holes(const PuncturedPartition& pp) {
  std::vector<Cell> out;
  for (const Cell& h : pp.holes())
    if (pp.in_domain({h.row, h.col + 1}) || pp.in_domain({h.row + 1, h.col})) out.push_back(h);
  return out;
}

std::vector<Cell> reversely_slidable_holes(const PuncturedPartition& pp) {
  std::vector<Cell> out;
  for (const Cell& h : pp.holes())
    if (pp.in_domain({h.row, h.col - 1}) || pp.in_domain({h.row - 1, h.col})) out.push_back(h);
  return out;
}

Partition as_partition(const PuncturedPartition& pp) {
  if (!slidable_holes(pp).empty())
    throw Error(ErrorKind::HasSlidableHole, "cannot read the domain as a partition");
  std::vector<int> parts;
  for (int i = 1; i <= pp.shape().length(); ++i) {
    int mu = 0;
    while (mu < pp.shape().part(i) && pp.in_domain({i, mu + 1})) ++mu;
    parts.push_back(mu);
  }
  return Partition(std::move(parts));
}

SkewPartition as_skew(const PuncturedPartition& pp) {
  if (!reversely_slidable_holes(pp).empty())
    throw Error(ErrorKind::HasReverselySlidableHole, "cannot read the domain as a skew partition");
  std::vector<int> inner;
  for (int i = 1; i <= pp.shape().length(); ++i) {
    int nu = 0;
    while (nu < pp.shape().part(i) && pp.is_hole({i, nu + 1})) ++nu;
    inner.push_back(nu);
  }
  return SkewPartition(pp.shape(), Partition(std::move(inner)));
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (int i = 1; i <= lambda.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(lambda.part(i));
  }
  return out + ")";
}

std::string to_string(const SkewPartition& skew) {
  return to_string(skew.outer) + "/" + to_string(skew.inner);
}

Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  std::vector<int> parts;
  skip_ws();
  while (pos < text.size() && text[pos] != ')') {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(1, pos + 1, "expected a part");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    parts.push_back(v);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
    }
  }
  if (paren) {
    if (pos >= text.size()) throw ParseError(1, pos + 1, "missing ')'");
    ++pos;
  } else if (pos < text.size()) {
    throw ParseError(1, pos + 1, "unexpected ')'");
  }
  skip_ws();
  if (pos != text.size()) throw ParseError(1, pos + 1, "trailing characters");
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw ParseError(1, 1, e.what());
  }
}

}  // namespace symtab
