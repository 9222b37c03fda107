#pragma once

#include <utility>
#include <vector>

#include "symtab/berele.hpp"
#include "symtab/oscillating.hpp"
#include "symtab/tableau.hpp"
#include "symtab/word.hpp"

namespace symtab {

struct RSResult {
  Tableau p;
  OscillatingTableau q;
};

// Inserts the letters of w one by one with berele_insert; Q records the
// shape after each step. The rank is t.bound() / 2.
RSResult rs(const Tableau& t, const Word& w);
// Throws NoPreimage when (p, q) is not in the image of rs.
std::pair<Tableau, Word> rs_inverse(const Tableau& p, const OscillatingTableau& q);

struct PieriResult {
  Tableau p;
  PieriTriple triple;
  std::vector<TerminalRow> terminal_rows;
};

// Insertion of a weakly increasing word. The barred steps come first;
// their count j gives the middle shape. Throws NotWeaklyIncreasing.
PieriResult pieri_split(const Tableau& t, const Word& w);
// Insertion of a strictly decreasing word; the unbarred steps come first.
// Throws NotStrictlyDecreasing.
PieriResult dual_pieri_split(const Tableau& t, const Word& w);

struct RSKResult {
  Tableau p;
  ColumnStrictOT q;
};

struct DualRSKResult {
  Tableau p;
  RowStrictOT q;
};

RSKResult rsk(const Tableau& t, const std::vector<Word>& rows);
DualRSKResult drsk(const Tableau& t, const std::vector<Word>& cols);

// Each Pieri step is undone along the single shape chain compatible with
// the terminal-row order: removals top to bottom then additions bottom to
// top (rsk), or additions top to bottom then removals bottom to top (drsk).
std::pair<Tableau, std::vector<Word>> rsk_inverse(const Tableau& p, const ColumnStrictOT& u);
std::pair<Tableau, std::vector<Word>> drsk_inverse(const Tableau& p, const RowStrictOT& u);

}  // namespace symtab
