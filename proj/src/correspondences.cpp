#include "symtab/correspondences.hpp"

#include <algorithm>
#include <stdexcept>

#include "symtab/error.hpp"

namespace symtab {

namespace {

PieriResult run_pieri(const Tableau& t, const Word& w, bool barred_first) {
  PieriResult res{t, {t.outer_shape(), t.outer_shape(), t.outer_shape()}, {}};
  bool leading = true;
  for (int x : w) {
    const BereleRecord rec = berele_insert(res.p, x);
    res.p = rec.result;
    res.terminal_rows.push_back(rec.terminal_row);
    if (rec.terminal_row.barred == barred_first) {
      if (!leading) throw std::logic_error("Pieri step out of terminal-row order");
      res.triple.middle = res.p.outer_shape();
    } else {
      leading = false;
    }
  }
  res.triple.target = res.p.outer_shape();
  return res;
}

BoxChange step_change(const Partition& from, const Partition& to) {
  const int r = differing_row(from, to);
  if (r == 0) throw Error(ErrorKind::NoPreimage, "shapes " + to_string(from) + " and " + to_string(to));
  return to.size() > from.size() ? BoxChange::added(r) : BoxChange::removed(r);
}

// nu >= middle <= xi: remove row by row from the top, then add from the
// bottom.
std::vector<Partition> horizontal_chain(const PieriTriple& t) {
  std::vector<Partition> chain{t.source};
  Partition cur = t.source;
  for (int r = 1; r <= t.source.length(); ++r)
    while (cur.part(r) > t.middle.part(r)) chain.push_back(cur = remove_row(cur, r));
  for (int r = t.target.length(); r >= 1; --r)
    while (cur.part(r) < t.target.part(r)) chain.push_back(cur = add_row(cur, r));
  return chain;
}

// nu <= middle >= xi: add from the top, then remove from the bottom.
std::vector<Partition> vertical_chain(const PieriTriple& t) {
  std::vector<Partition> chain{t.source};
  Partition cur = t.source;
  for (int r = 1; r <= t.middle.length(); ++r)
    if (cur.part(r) < t.middle.part(r)) chain.push_back(cur = add_row(cur, r));
  for (int r = t.middle.length(); r >= 1; --r)
    if (cur.part(r) > t.target.part(r)) chain.push_back(cur = remove_row(cur, r));
  return chain;
}

template <class Forward>
std::pair<Tableau, std::vector<Word>> undo_pieri_steps(const Tableau& p, const std::vector<Partition>& chain, int rank,
                                                       bool horizontal, Forward forward) {
  if (chain.empty() || chain.size() % 2 == 0) throw Error(ErrorKind::NoPreimage, "malformed chain");
  if (chain.back() != p.outer_shape()) throw Error(ErrorKind::NoPreimage, "final shape differs from P");
  Tableau cur = p;
  std::vector<Word> words(chain.size() / 2);
  for (std::size_t i = chain.size() / 2; i >= 1; --i) {
    const PieriTriple triple{chain[2 * i - 2], chain[2 * i - 1], chain[2 * i]};
    if (horizontal ? !is_horizontal_triple(triple) : !is_vertical_triple(triple))
      throw Error(ErrorKind::NoPreimage, "step " + std::to_string(i) + " is not a strip triple");
    const auto steps = horizontal ? horizontal_chain(triple) : vertical_chain(triple);
    auto [prev, w] = rs_inverse(cur, OscillatingTableau{steps, rank});
    const bool ordered = horizontal ? is_weakly_increasing(w) : is_strictly_decreasing(w);
    if (!ordered) throw Error(ErrorKind::NoPreimage, "recovered word " + to_string(w));
    const PieriResult check = forward(prev, w);
    if (check.p != cur || check.triple != triple) throw Error(ErrorKind::NoPreimage, "forward check failed");
    words[i - 1] = std::move(w);
    cur = std::move(prev);
  }
  return {cur, words};
}

}  // namespace

RSResult rs(const Tableau& t, const Word& w) {
  RSResult res{t, {{t.outer_shape()}, t.bound() / 2}};
  for (int x : w) {
    res.p = berele_insert(res.p, x).result;
    res.q.chain.push_back(res.p.outer_shape());
  }
  return res;
}

std::pair<Tableau, Word> rs_inverse(const Tableau& p, const OscillatingTableau& q) {
  if (q.chain.empty() || q.chain.back() != p.outer_shape())
    throw Error(ErrorKind::NoPreimage, "final shape differs from P");
  Tableau cur = p;
  std::vector<int> letters;
  for (std::size_t i = q.chain.size() - 1; i >= 1; --i) {
    auto [prev, x] = berele_inverse(cur, step_change(q.chain[i - 1], q.chain[i]));
    letters.push_back(x);
    cur = std::move(prev);
  }
  std::reverse(letters.begin(), letters.end());
  return {cur, Word(letters)};
}

PieriResult pieri_split(const Tableau& t, const Word& w) {
  if (!is_weakly_increasing(w)) throw Error(ErrorKind::NotWeaklyIncreasing, to_string(w));
  return run_pieri(t, w, true);
}

PieriResult dual_pieri_split(const Tableau& t, const Word& w) {
  if (!is_strictly_decreasing(w)) throw Error(ErrorKind::NotStrictlyDecreasing, to_string(w));
  return run_pieri(t, w, false);
}

RSKResult rsk(const Tableau& t, const std::vector<Word>& rows) {
  RSKResult res{t, {{t.outer_shape()}, t.bound() / 2}};
  for (const Word& w : rows) {
    PieriResult step = pieri_split(res.p, w);
    res.p = std::move(step.p);
    res.q.chain.push_back(step.triple.middle);
    res.q.chain.push_back(step.triple.target);
  }
  return res;
}

DualRSKResult drsk(const Tableau& t, const std::vector<Word>& cols) {
  DualRSKResult res{t, {{t.outer_shape()}, t.bound() / 2}};
  for (const Word& w : cols) {
    PieriResult step = dual_pieri_split(res.p, w);
    res.p = std::move(step.p);
    res.q.chain.push_back(step.triple.middle);
    res.q.chain.push_back(step.triple.target);
  }
  return res;
}

std::pair<Tableau, std::vector<Word>> rsk_inverse(const Tableau& p, const ColumnStrictOT& u) {
  return undo_pieri_steps(p, u.chain, u.rank, true, pieri_split);
}

std::pair<Tableau, std::vector<Word>> drsk_inverse(const Tableau& p, const RowStrictOT& u) {
  return undo_pieri_steps(p, u.chain, u.rank, false, dual_pieri_split);
}

}  // namespace symtab
