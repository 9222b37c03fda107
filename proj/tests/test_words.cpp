#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/knuth.hpp"
#include "symtab/word.hpp"

using namespace symtab;
using testing::o;
using testing::tab;

namespace {

std::set<Word> as_words(const std::set<std::vector<int>>& s) {
  std::set<Word> out;
  for (const auto& v : s) out.insert(Word(v));
  return out;
}

}  // namespace

TEST_CASE("word basics") {
  const Word w{3, 1, 4, 1, 5};
  CHECK(w.slice(2, 4) == Word{1, 4, 1});
  CHECK(w.slice(4, 2).empty());
  CHECK(w.prefix(2) == Word{3, 1});
  CHECK(w.reversed() == Word{5, 1, 4, 1, 3});
  CHECK(Word{1} + Word{2, 3} == Word{1, 2, 3});
  CHECK(is_weakly_increasing(Word{1, 1, 2}));
  CHECK_FALSE(is_strictly_increasing(Word{1, 1, 2}));
  CHECK(is_strictly_decreasing(Word{3, 2}));
  CHECK(is_strictly_decreasing(Word{}));
  CHECK(to_string(w) == "(3,1,4,1,5)");
  CHECK(parse_word("(3,1,4,1,5)") == w);
  CHECK(parse_word("3 1 4") == Word{3, 1, 4});
  CHECK(parse_word("()").empty());
  CHECK_THROWS_AS(parse_word("(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_word("(1,a)"), ParseError);
}

TEST_CASE("knuth neighbours") {
  CHECK(knuth_neighbors(Word{2, 3, 1}) == std::set<Word>{Word{2, 1, 3}});
  CHECK(knuth_neighbors(Word{1, 3, 2}) == std::set<Word>{Word{3, 1, 2}});
  CHECK(knuth_neighbors(Word{1, 1}).empty());
  for (int len = 0; len <= 5; ++len)
    enumerate::for_each_word(3, len, enumerate::WordMode::All, [](const Word& w) {
      CHECK(knuth_neighbors(w) == as_words(oracle::knuth_neighbors(w.letters())));
    });
}

TEST_CASE("insertion tableau") {
  CHECK(insertion_tableau(Word{5, 3, 2, 6, 4, 9, 8, 4, 2, 4}).rows() ==
        std::vector<std::vector<int>>{{2, 2, 4, 4}, {3, 4, 8}, {5, 6}, {9}});
  CHECK(insertion_tableau(Word{}) == Tableau{});
  for (int len = 0; len <= 5; ++len)
    enumerate::for_each_word(3, len, enumerate::WordMode::All, [](const Word& w) {
      CHECK(insertion_tableau(w).rows() == oracle::insertion_tableau(w.letters()));
    });
  for (const auto& l : enumerate::partitions(5, 5))
    for (const auto& t : enumerate::sst(l, 3)) CHECK(insertion_tableau(row_word(t), 3) == t);
}

TEST_CASE("knuth equivalence") {
  const auto t = tab({{2, o, o, 2, 4}, {3, 4, 4, o}, {o, 6, 8}, {o, o, 9}, {5}}, 9);
  CHECK(knuth_equivalent(row_word(t), column_word(t)));
  CHECK_FALSE(knuth_equivalent(Word{1, 2}, Word{2, 1}));
  CHECK(knuth_equivalent(Word{3, 1, 2}, Word{3, 1, 2}));
  // Knuth classes are exactly the fibres of the insertion tableau.
  for (int len = 0; len <= 4; ++len)
    enumerate::for_each_word(3, len, enumerate::WordMode::All, [](const Word& w) {
      const auto cls = as_words(oracle::knuth_class(w.letters()));
      CHECK(knuth_class(w) == cls);
      enumerate::for_each_word(3, static_cast<int>(w.size()), enumerate::WordMode::All, [&](const Word& v) {
        CHECK(cls.count(v) == (oracle::insertion_tableau(v.letters()) == oracle::insertion_tableau(w.letters())));
      });
    });
}
