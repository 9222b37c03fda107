#pragma once

#include <string>
#include <vector>

#include "symtab/partition.hpp"

namespace symtab {

// (nu^0, ..., nu^N): consecutive shapes differ by one box, all of length at
// most `rank`.
struct OscillatingTableau {
  std::vector<Partition> chain;
  int rank = 0;

  int size() const noexcept { return static_cast<int>(chain.size()) - 1; }
  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
  friend auto operator<=>(const OscillatingTableau&, const OscillatingTableau&) = default;
};

// (xi^0, nu^1, xi^1, ..., nu^k, xi^k) with xi^{i-1} / nu^i and xi^i / nu^i
// horizontal strips.
struct ColumnStrictOT {
  std::vector<Partition> chain;
  int rank = 0;

  int depth() const noexcept { return static_cast<int>(chain.size()) / 2; }
  friend bool operator==(const ColumnStrictOT&, const ColumnStrictOT&) = default;
  friend auto operator<=>(const ColumnStrictOT&, const ColumnStrictOT&) = default;
};

// (xi^0, nu^1, xi^1, ..., nu^l, xi^l) with nu^i / xi^{i-1} and nu^i / xi^i
// vertical strips.
struct RowStrictOT {
  std::vector<Partition> chain;
  int rank = 0;

  int width() const noexcept { return static_cast<int>(chain.size()) / 2; }
  friend bool operator==(const RowStrictOT&, const RowStrictOT&) = default;
  friend auto operator<=>(const RowStrictOT&, const RowStrictOT&) = default;
};

// Summary (nu, nu', xi) of one Pieri step.
struct PieriTriple {
  Partition source;
  Partition middle;
  Partition target;

  friend bool operator==(const PieriTriple&, const PieriTriple&) = default;
  friend auto operator<=>(const PieriTriple&, const PieriTriple&) = default;
};

bool is_valid(const OscillatingTableau& u);
bool is_valid(const ColumnStrictOT& u);
bool is_valid(const RowStrictOT& u);

// nu >= nu' <= xi with both differences horizontal strips.
bool is_horizontal_triple(const PieriTriple& t);
// nu <= nu' >= xi with both differences vertical strips.
bool is_vertical_triple(const PieriTriple& t);

// l_i = |xi^{i-1}/nu^i| + |xi^i/nu^i|.
std::vector<int> content(const ColumnStrictOT& u);
// k_i = |nu^i/xi^{i-1}| + |nu^i/xi^i|.
std::vector<int> content(const RowStrictOT& u);

// "[(),(1),(2)]"
std::string to_string(const std::vector<Partition>& chain);
// Parses "[(),(1),(2)]" or a JSON array of part arrays.
std::vector<Partition> parse_chain(const std::string& text);

}  // namespace symtab
