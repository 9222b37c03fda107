#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "symtab/oscillating.hpp"
#include "symtab/partition.hpp"
#include "symtab/tableau.hpp"
#include "symtab/word.hpp"

// Exhaustive generators. Each for_each_* call streams its family to the
// visitor without materializing it; the vector-returning forms collect the
// same stream. Orders are fixed so that runs are reproducible.
namespace symtab::enumerate {

template <class T>
using Visitor = std::function<void(const T&)>;

// Every partition with |lambda| <= max_size and length <= max_length, by
// size ascending and then lexicographically descending parts.
void for_each_partition(int max_size, int max_length, const Visitor<Partition>& visit);
std::vector<Partition> partitions(int max_size, int max_length);
// Partitions of exactly `size` with length <= max_length, lex descending.
std::vector<Partition> partitions_of(int size, int max_length);

// Semistandard fillings of D(pp) over [1, n], in row-major lexicographic
// order of entries. Hole-free shapes give SST_n(lambda).
void for_each_sst(const PuncturedPartition& pp, int n, const Visitor<PuncturedTableau>& visit);
void for_each_sst(const Partition& lambda, int n, const Visitor<Tableau>& visit);
std::vector<Tableau> sst(const Partition& lambda, int n);

// Symplectic tableaux SpT_{2n}(nu); empty when nu has more than n rows.
void for_each_spt(const Partition& nu, int two_n, const Visitor<Tableau>& visit);
std::vector<Tableau> spt(const Partition& nu, int two_n);

// All hole sets of size <= max_holes inside D(lambda), as punctured
// partitions, ordered by hole count and then lexicographically.
std::vector<PuncturedPartition> punctured_shapes(const Partition& lambda, int max_holes);

enum class WordMode { All, WeaklyIncreasing, StrictlyDecreasing };

// Words of the given length over [1, n], in lexicographic order.
void for_each_word(int n, int length, WordMode mode, const Visitor<Word>& visit);
std::vector<Word> words(int n, int length, WordMode mode);

// mu inside lambda with lambda/mu a horizontal (vertical) strip of `size`
// boxes, and the dual additions capped at max_length rows.
std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int size);
std::vector<Partition> horizontal_strip_additions(const Partition& lambda, int size, int max_length);
std::vector<Partition> vertical_strip_removals(const Partition& lambda, int size);
std::vector<Partition> vertical_strip_additions(const Partition& lambda, int size, int max_length);

// OT_{n,N}(nu, xi); xi == nullopt leaves the final shape free.
void for_each_ot(int n, int size, const Partition& nu, const std::optional<Partition>& xi,
                 const Visitor<OscillatingTableau>& visit);
std::vector<OscillatingTableau> ot(int n, int size, const Partition& nu, const std::optional<Partition>& xi);

// Column-strict (row-strict) oscillating tableaux with the given content.
void for_each_csot(int n, const Partition& nu, const std::optional<Partition>& xi,
                   const std::vector<int>& content, const Visitor<ColumnStrictOT>& visit);
std::vector<ColumnStrictOT> csot(int n, const Partition& nu, const std::optional<Partition>& xi,
                                 const std::vector<int>& content);
void for_each_rsot(int n, const Partition& nu, const std::optional<Partition>& xi,
                   const std::vector<int>& content, const Visitor<RowStrictOT>& visit);
std::vector<RowStrictOT> rsot(int n, const Partition& nu, const std::optional<Partition>& xi,
                              const std::vector<int>& content);

// Sequences of `parts` integers in [0, max_part] with sum <= max_sum, in
// lexicographic order.
std::vector<std::vector<int>> weak_compositions(int parts, int max_part, int max_sum);

}  // namespace symtab::enumerate
