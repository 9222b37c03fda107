#include "symtab/schensted.hpp"

#include "symtab/error.hpp"

namespace symtab {

namespace {

void require_straight_semistandard(const Tableau& t) {
  if (t.has_holes()) throw Error(ErrorKind::InvalidShape, "expected a tableau without holes");
  if (!is_semistandard(t)) throw Error(ErrorKind::NotSemistandard, render(t));
}

}  // namespace

RowInsertionRecord row_insert(const Tableau& t, int x) {
  require_straight_semistandard(t);
  if (x < 1 || x > t.bound()) throw Error(ErrorKind::LetterOutOfRange, std::to_string(x));

  RowInsertionRecord rec;
  std::vector<std::vector<int>> rows = t.rows();
  int letter = x;
  for (std::size_t r = 0;; ++r) {
    rec.letters.push_back(letter);
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    std::size_t c = 0;
    while (c < row.size() && row[c] <= letter) ++c;
    rec.route.push_back(static_cast<int>(c) + 1);
    if (c == row.size()) {
      row.push_back(letter);
      rec.final_row = static_cast<int>(r) + 1;
      break;
    }
    std::swap(row[c], letter);
  }
  rec.result = Tableau(std::move(rows), t.bound());
  return rec;
}

std::pair<Tableau, int> row_insert_inverse(const Tableau& s, int r) {
  require_straight_semistandard(s);
  if (!is_removable(s.outer_shape(), r))
    throw Error(ErrorKind::NotRemovable, "row " + std::to_string(r) + " of " + to_string(s.outer_shape()));

  std::vector<std::vector<int>> rows = s.rows();
  auto& last = rows[static_cast<std::size_t>(r - 1)];
  int letter = last.back();
  last.pop_back();
  for (int i = r - 1; i >= 1; --i) {
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    // Rightmost entry strictly smaller than the descending letter.
    std::size_t c = row.size();
    while (c > 0 && row[c - 1] >= letter) --c;
    if (c == 0) throw std::logic_error("reverse bumping found no smaller entry");
    std::swap(row[c - 1], letter);
  }
  return {Tableau(std::move(rows), s.bound()), letter};
}

}  // namespace symtab
