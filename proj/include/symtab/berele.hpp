#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symtab/partition.hpp"
#include "symtab/tableau.hpp"
#include "symtab/word.hpp"

namespace symtab {

// Element of the totally ordered set 1 < 2 < ... < bar2 < bar1.
struct TerminalRow {
  int row = 0;
  bool barred = false;

  friend bool operator==(const TerminalRow&, const TerminalRow&) = default;
  friend std::strong_ordering operator<=>(const TerminalRow& a, const TerminalRow& b) {
    if (a.barred != b.barred) return a.barred ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.barred ? b.row <=> a.row : a.row <=> b.row;
  }
};

// "4" or "bar4".
std::string to_string(const TerminalRow& r);

// How an insertion changed the shape: a box added to or removed from `row`.
struct BoxChange {
  enum class Kind { Added, Removed };
  Kind kind = Kind::Added;
  int row = 0;

  static BoxChange added(int r) { return {Kind::Added, r}; }
  static BoxChange removed(int r) { return {Kind::Removed, r}; }
  bool is_added() const noexcept { return kind == Kind::Added; }

  friend bool operator==(const BoxChange&, const BoxChange&) = default;
  friend auto operator<=>(const BoxChange&, const BoxChange&) = default;
};

struct BereleRecord {
  Tableau result;
  BoxChange change;
  TerminalRow terminal_row;
  // (c_1, ..., c_r) when a box is added, (c_1, ..., c_{s-1}) otherwise.
  std::vector<int> bump_route;
  // (gamma_{s-1}, ..., gamma_k) of the cancelling slide; empty when a box
  // is added.
  std::vector<int> slide_route;
  // Letters inserted into rows 1, 2, ... before the insertion stopped.
  std::vector<int> letters;
};

// "(4,3;3,3,3)" for a cancelling insertion, "(4,3,1)" otherwise.
std::string route_string(const BereleRecord& rec);

// Berele row-insertion of x into a symplectic tableau over [2n], where 2n
// is t.bound(). Throws NotSymplectic / LetterOutOfRange.
BereleRecord berele_insert(const Tableau& t, int x);

// The same insertion computed from the Schensted record of T <- x: puncture
// (s-1, 1) after placing the first s-1 bumped letters and rectify.
BereleRecord berele_insert_by_sliding(const Tableau& t, int x);

// P(T <- x) through the Littlewood-Richardson map of type AII.
Tableau aii_insert(const Tableau& t, int x);

// Unique (T, x) with berele_insert(T, x) giving s with the given change.
// Throws NoPreimage when no such pair exists.
std::pair<Tableau, int> berele_inverse(const Tableau& s, BoxChange change);

struct RemRed {
  Word rem;
  Word red;
};

// First-column pruning of a strictly increasing word.
// Throws NotStrictlyIncreasing.
RemRed rem_red(const Word& a);

// Insertion tableau of reverse(red(first column)) . column_word(rest).
Tableau suc(const Tableau& t);

struct LRResult {
  Tableau p;
  // Skew tableau of shape lambda / sh(p): holes fill D(sh(p)), and a cell
  // removed by the t-th application of suc carries t.
  PuncturedTableau q;
  int iterations = 0;
};

// Littlewood-Richardson map of type AII for a semistandard tableau over
// [2n]. Throws NotSemistandard.
LRResult lr_map(const Tableau& t);

// Recording tableaux {Q(T) : T in SST_{2n}(lambda), sh(P(T)) = nu}, by
// enumeration.
std::set<PuncturedTableau> rec_set(const Partition& lambda, const Partition& nu, int two_n);

}  // namespace symtab
