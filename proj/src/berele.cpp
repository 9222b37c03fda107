#include "symtab/berele.hpp"

#include <stdexcept>

#include "symtab/enumeration.hpp"
#include "symtab/error.hpp"
#include "symtab/jeu_de_taquin.hpp"
#include "symtab/knuth.hpp"
#include "symtab/schensted.hpp"

namespace symtab {

namespace {

void require_symplectic_input(const Tableau& t, int x) {
  if (t.has_holes() || !is_symplectic(t)) throw Error(ErrorKind::NotSymplectic, render(t));
  if (x < 1 || x > t.bound()) throw Error(ErrorKind::LetterOutOfRange, std::to_string(x));
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Slides the single hole at (r, 1) of `punctured` and fills in the removal
// half of the record.
void finish_cancellation(BereleRecord& rec, const PuncturedTableau& punctured, int r) {
  SlideResult sr = slide(punctured, r, 1);
  rec.result = sr.tableau.straightened();
  rec.change = BoxChange::removed(sr.terminal_row);
  rec.terminal_row = {sr.terminal_row, true};
  rec.slide_route.assign(sr.route.begin() + 1, sr.route.end());
}

}  // namespace

std::string to_string(const TerminalRow& r) {
  return (r.barred ? "bar" : "") + std::to_string(r.row);
}

std::string route_string(const BereleRecord& rec) {
  if (rec.change.is_added()) return "(" + join(rec.bump_route) + ")";
  return "(" + join(rec.bump_route) + ";" + join(rec.slide_route) + ")";
}

BereleRecord berele_insert(const Tableau& t, int x) {
  require_symplectic_input(t, x);
  std::vector<std::vector<int>> rows = t.rows();
  BereleRecord rec;
  int letter = x;
  for (int r = 1;; ++r) {
    rec.letters.push_back(letter);
    if (r > static_cast<int>(rows.size())) rows.emplace_back();
    auto& row = rows[static_cast<std::size_t>(r - 1)];
    const int nu_r = static_cast<int>(row.size());
    int c = 1;
    while (c <= nu_r && row[static_cast<std::size_t>(c - 1)] <= letter) ++c;
    rec.bump_route.push_back(c);
    if (c == nu_r + 1) {
      row.push_back(letter);
      rec.result = Tableau(std::move(rows), t.bound());
      rec.change = BoxChange::added(r);
      rec.terminal_row = {r, false};
      return rec;
    }
    int& cell = row[static_cast<std::size_t>(c - 1)];
    if (letter == 2 * r - 1 && cell == 2 * r) {
      cell = 2 * r - 1;
      row[0] = PuncturedTableau::kHole;
      finish_cancellation(rec, PuncturedTableau(std::move(rows), t.bound()), r);
      return rec;
    }
    std::swap(cell, letter);
  }
}

BereleRecord berele_insert_by_sliding(const Tableau& t, int x) {
  require_symplectic_input(t, x);
  const RowInsertionRecord ins = row_insert(t, x);
  const int len = static_cast<int>(ins.letters.size());
  int s = 0;
  for (int i = 1; i <= len && s == 0; ++i)
    if (ins.letters[static_cast<std::size_t>(i - 1)] < 2 * i - 1) s = i;

  BereleRecord rec;
  if (s == 0) {
    rec.result = ins.result;
    rec.change = BoxChange::added(ins.final_row);
    rec.terminal_row = {ins.final_row, false};
    rec.bump_route = ins.route;
    rec.letters = ins.letters;
    return rec;
  }
  if (s < 2) throw std::logic_error("first row-inserting letter below 1");
  PuncturedTableau punctured = t;
  for (int i = 1; i <= s - 1; ++i)
    punctured = punctured.with_entry({i, ins.route[static_cast<std::size_t>(i - 1)]},
                                     ins.letters[static_cast<std::size_t>(i - 1)]);
  punctured = punctured.with_hole({s - 1, 1});
  rec.bump_route.assign(ins.route.begin(), ins.route.begin() + (s - 1));
  rec.letters.assign(ins.letters.begin(), ins.letters.begin() + (s - 1));
  finish_cancellation(rec, punctured, s - 1);
  return rec;
}

Tableau aii_insert(const Tableau& t, int x) {
  require_symplectic_input(t, x);
  return lr_map(row_insert(t, x).result).p;
}

namespace {

bool maps_to(const Tableau& t, int x, const Tableau& s, BoxChange change) {
  if (!is_symplectic(t)) return false;
  const BereleRecord rec = berele_insert(t, x);
  return rec.result == s && rec.change == change;
}

// Undoes a cancellation at row r of the punctured tableau whose only hole is
// (r, 1), then un-bumps through the rows above.
std::pair<Tableau, int> undo_cancellation(const PuncturedTableau& punctured, int r) {
  std::vector<std::vector<int>> rows = punctured.rows();
  auto& row = rows[static_cast<std::size_t>(r - 1)];
  const int odd = 2 * r - 1;
  row[0] = odd;
  std::size_t c = 0;
  while (c + 1 < row.size() && row[c + 1] == odd) ++c;
  row[c] = odd + 1;
  int letter = odd;
  for (int i = r - 1; i >= 1; --i) {
    auto& above = rows[static_cast<std::size_t>(i - 1)];
    std::size_t j = above.size();
    while (j > 0 && above[j - 1] >= letter) --j;
    if (j == 0) throw Error(ErrorKind::NoPreimage, "reverse bumping stalled");
    std::swap(above[j - 1], letter);
  }
  return {Tableau(std::move(rows), punctured.bound()), letter};
}

}  // namespace

std::pair<Tableau, int> berele_inverse(const Tableau& s, BoxChange change) {
  if (s.has_holes() || !is_symplectic(s)) throw Error(ErrorKind::NotSymplectic, render(s));
  const Partition xi = s.outer_shape();

  if (change.is_added()) {
    if (!is_removable(xi, change.row)) throw Error(ErrorKind::NoPreimage, "row not removable");
    auto pre = row_insert_inverse(s, change.row);
    if (!maps_to(pre.first, pre.second, s, change)) throw Error(ErrorKind::NoPreimage, render(s));
    return pre;
  }

  const int k = change.row;
  if (!is_addable(xi, k)) throw Error(ErrorKind::NoPreimage, "row not addable");
  // Put the removed box back as a hole and walk it backwards; the slide
  // started wherever the reversed path meets the first column.
  std::vector<std::vector<int>> rows = s.rows();
  if (k > static_cast<int>(rows.size())) rows.emplace_back();
  rows[static_cast<std::size_t>(k - 1)].push_back(PuncturedTableau::kHole);
  PuncturedTableau cur(std::move(rows), s.bound());
  Cell hole{k, xi.part(k) + 1};
  while (true) {
    if (hole.col == 1) {
      try {
        auto pre = undo_cancellation(cur, hole.row);
        if (maps_to(pre.first, pre.second, s, change)) return pre;
      } catch (const Error&) {
      }
    }
    const auto left = cur.at({hole.row, hole.col - 1});
    const auto above = cur.at({hole.row - 1, hole.col});
    if (!left && !above) break;
    const Cell from = left && (!above || *left > *above) ? Cell{hole.row, hole.col - 1} : Cell{hole.row - 1, hole.col};
    cur = cur.with_entry(hole, *cur.at(from)).with_hole(from);
    hole = from;
  }
  throw Error(ErrorKind::NoPreimage, render(s));
}

RemRed rem_red(const Word& a) {
  if (!is_strictly_increasing(a)) throw Error(ErrorKind::NotStrictlyIncreasing, to_string(a));
  const int l = static_cast<int>(a.size());
  // rem[m] lists the 1-based positions of rem(a[m]).
  std::vector<std::vector<int>> rem(static_cast<std::size_t>(l) + 1);
  for (int m = 2; m <= l; ++m) {
    const int am = a[static_cast<std::size_t>(m - 1)];
    const int prev = a[static_cast<std::size_t>(m - 2)];
    const auto& base = rem[static_cast<std::size_t>(m - 2)];
    if (am % 2 == 0 && prev == am - 1 && am < 2 * m - static_cast<int>(base.size()) - 1) {
      rem[static_cast<std::size_t>(m)] = base;
      rem[static_cast<std::size_t>(m)].push_back(m - 1);
      rem[static_cast<std::size_t>(m)].push_back(m);
    } else {
      rem[static_cast<std::size_t>(m)] = rem[static_cast<std::size_t>(m - 1)];
    }
  }
  RemRed out;
  const auto& pos = rem[static_cast<std::size_t>(l)];
  std::size_t p = 0;
  for (int i = 1; i <= l; ++i) {
    if (p < pos.size() && pos[p] == i) {
      out.rem.push_back(a[static_cast<std::size_t>(i - 1)]);
      ++p;
    } else {
      out.red.push_back(a[static_cast<std::size_t>(i - 1)]);
    }
  }
  return out;
}

Tableau suc(const Tableau& t) {
  if (t.has_holes() || !is_semistandard(t)) throw Error(ErrorKind::NotSemistandard, render(t));
  const Word red = rem_red(first_column(t)).red;
  return insertion_tableau(red.reversed() + column_word(drop_first_column(t)), t.bound());
}

LRResult lr_map(const Tableau& t) {
  if (t.has_holes() || !is_semistandard(t)) throw Error(ErrorKind::NotSemistandard, render(t));
  const Partition lambda = t.outer_shape();
  std::vector<std::vector<int>> q;
  for (int i = 1; i <= lambda.length(); ++i)
    q.emplace_back(static_cast<std::size_t>(lambda.part(i)), PuncturedTableau::kHole);

  LRResult res{t, {}, 0};
  const int cap = lambda.size() + 1;
  while (true) {
    Tableau next = suc(res.p);
    if (next == res.p) break;
    if (res.iterations == cap) throw std::logic_error("lr_map exceeded its iteration cap");
    const Partition before = res.p.outer_shape();
    const Partition after = next.outer_shape();
    if (!contains(after, before)) throw std::logic_error("suc enlarged the shape");
    for (const Cell& c : before.cells())
      if (!after.has_cell(c)) q[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = res.iterations + 1;
    res.p = std::move(next);
    ++res.iterations;
  }
  res.q = PuncturedTableau(std::move(q), cap);
  return res;
}

std::set<PuncturedTableau> rec_set(const Partition& lambda, const Partition& nu, int two_n) {
  std::set<PuncturedTableau> out;
  enumerate::for_each_sst(lambda, two_n, [&](const Tableau& t) {
    LRResult r = lr_map(t);
    if (r.p.outer_shape() == nu) out.insert(std::move(r.q));
  });
  return out;
}

}  // namespace symtab
