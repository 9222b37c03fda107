#include "symtab/jeu_de_taquin.hpp"

#include "symtab/error.hpp"

namespace symtab {

namespace {

void require_hole(const PuncturedTableau& t, int r, int c) {
  if (!t.is_hole({r, c})) throw Error(ErrorKind::NotAHole, to_string(Cell{r, c}));
  if (!is_semistandard(t)) throw Error(ErrorKind::NotSemistandard, render(t));
}

// Moves the entry at `from` into the hole at `to`, leaving a hole at `from`.
PuncturedTableau move_hole(const PuncturedTableau& t, const Cell& hole, const Cell& from) {
  return t.with_entry(hole, *t.at(from)).with_hole(from);
}

SlideResult slide_unchecked(PuncturedTableau t, int r, int c) {
  SlideResult res;
  res.route.push_back(c);
  Cell hole{r, c};
  while (true) {
    const auto right = t.at({hole.row, hole.col + 1});
    const auto below = t.at({hole.row + 1, hole.col});
    if (!right && !below) break;
    if (right && (!below || *right < *below)) {
      t = move_hole(t, hole, {hole.row, hole.col + 1});
      ++hole.col;
    } else {
      t = move_hole(t, hole, {hole.row + 1, hole.col});
      res.route.push_back(hole.col);
      ++hole.row;
    }
  }
  res.route.push_back(hole.col);
  res.terminal_row = hole.row;
  res.tableau = std::move(t);
  return res;
}

PuncturedTableau reverse_slide_unchecked(PuncturedTableau t, int r, int c) {
  Cell hole{r, c};
  while (true) {
    const auto left = t.at({hole.row, hole.col - 1});
    const auto above = t.at({hole.row - 1, hole.col});
    if (!left && !above) break;
    if (left && (!above || *left > *above)) {
      t = move_hole(t, hole, {hole.row, hole.col - 1});
      --hole.col;
    } else {
      t = move_hole(t, hole, {hole.row - 1, hole.col});
      --hole.row;
    }
  }
  return t;
}

}  // namespace

SlideResult slide(const PuncturedTableau& t, int r, int c) {
  require_hole(t, r, c);
  return slide_unchecked(t, r, c);
}

PuncturedTableau reverse_slide(const PuncturedTableau& t, int r, int c) {
  require_hole(t, r, c);
  return reverse_slide_unchecked(t, r, c);
}

Tableau rectify(const PuncturedTableau& t) {
  if (!is_semistandard(t)) throw Error(ErrorKind::NotSemistandard, render(t));
  PuncturedTableau cur = t;
  while (true) {
    const auto holes = slidable_holes(cur.shape());
    if (holes.empty()) break;
    const Cell latest = holes.back();
    cur = slide_unchecked(std::move(cur), latest.row, latest.col).tableau;
  }
  return cur.straightened();
}

PuncturedTableau reverse_rectify(const PuncturedTableau& t) {
  if (!is_semistandard(t)) throw Error(ErrorKind::NotSemistandard, render(t));
  PuncturedTableau cur = t;
  while (true) {
    const auto holes = reversely_slidable_holes(cur.shape());
    if (holes.empty()) break;
    const Cell first = holes.front();
    cur = reverse_slide_unchecked(std::move(cur), first.row, first.col);
  }
  return cur;
}

}  // namespace symtab
