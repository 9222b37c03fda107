#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/error.hpp"
#include "symtab/tableau.hpp"

using namespace symtab;
using testing::o;
using testing::tab;

namespace {

PuncturedTableau punctured_example() {
  return tab({{2, o, o, 2, 4}, {3, 4, 4, o}, {o, 6, 8}, {o, o, 9}, {5}}, 9);
}

const std::vector<std::vector<int>> kBereleInput{{1, 1, 2, 3, 3}, {3, 3, 4, 8}, {6, 6, 8}, {8, 8, 9}, {9}};

}  // namespace

TEST_CASE("construction and accessors") {
  const auto t = punctured_example();
  CHECK(t.outer_shape() == Partition{5, 4, 3, 3, 1});
  CHECK(t.holes() == std::vector<Cell>{{1, 2}, {1, 3}, {2, 4}, {3, 1}, {4, 1}, {4, 2}});
  CHECK(t.cell_count() == 10);
  CHECK(t.at({1, 4}) == 2);
  CHECK_FALSE(t.at({1, 2}).has_value());
  CHECK_FALSE(t.at({6, 1}).has_value());
  CHECK(t.is_hole({3, 1}));
  CHECK_FALSE(t.is_hole({3, 2}));
  CHECK(tab({{1}, {}}, 2).row_count() == 1);
  CHECK_THROWS_KIND(tab({{1}, {1, 2}}, 2), InvalidShape);
  CHECK_THROWS_KIND(tab({{3}}, 2), InvalidShape);
  CHECK_THROWS_KIND(t.with_entry({9, 9}, 1), InvalidShape);
}

TEST_CASE("semistandard") {
  CHECK(is_semistandard(punctured_example()));
  CHECK(is_semistandard(Tableau{}));
  CHECK_FALSE(is_semistandard(tab({{1, 1}, {1}}, 2)));
  // Across a hole the comparison still applies.
  CHECK_FALSE(is_semistandard(tab({{2, o, 1}}, 2)));
  CHECK_FALSE(is_semistandard(tab({{2}, {o}, {2}}, 2)));
  for (const auto& shape : oracle::partitions(4, 4)) {
    const Partition l(shape);
    long long count = 0;
    for (const auto& rows : oracle::all_fillings(shape, 3)) {
      const bool expected = oracle::semistandard(rows);
      CHECK(is_semistandard(tab(rows, 3)) == expected);
      count += expected;
    }
    CHECK(enumerate::sst(l, 3).size() == static_cast<std::size_t>(count));
  }
}

TEST_CASE("hole insertion keeps semistandardness") {
  for (const auto& t : enumerate::sst(Partition{3, 2, 1}, 3))
    for (const auto& c : t.outer_shape().cells()) CHECK(is_semistandard(t.with_hole(c)));
}

TEST_CASE("symplectic") {
  CHECK(is_symplectic(tab(kBereleInput, 10)));
  CHECK_FALSE(is_symplectic(tab({{1, 1, 2, 2, 3}, {3, 3, 3, 8}, {4, 6, 8}, {6, 8, 9}, {8}, {9}}, 10)));
  CHECK(is_symplectic(Tableau{}));
  for (const auto& t : enumerate::sst(Partition{3}, 4)) CHECK(is_symplectic(t));
  for (const auto& shape : oracle::partitions(4, 3))
    for (const auto& rows : oracle::all_fillings(shape, 4))
      CHECK(is_symplectic(tab(rows, 4)) == oracle::symplectic(rows));
}

TEST_CASE("reading words") {
  const auto t = punctured_example();
  CHECK(row_word(t) == Word{5, 9, 6, 8, 3, 4, 4, 2, 2, 4});
  CHECK(column_word(t) == Word{5, 3, 2, 6, 4, 9, 8, 4, 2, 4});
  CHECK(row_word(Tableau{}).empty());
  CHECK(column_word(Tableau{}).empty());
  for (const auto& s : enumerate::sst(Partition{3, 2}, 3)) CHECK(row_word(s).size() == 5);
}

TEST_CASE("add_box") {
  CHECK(add_box(tab({{1}}, 2), 2, 2) == tab({{1}, {2}}, 2));
  // A 9 under the 9 of row 5 would repeat in column 1.
  CHECK_THROWS_KIND(add_box(tab(kBereleInput, 10), 6, 9), NotSemistandard);
  auto grown = kBereleInput;
  grown.push_back({10});
  CHECK(add_box(tab(kBereleInput, 10), 6, 10) == tab(grown, 10));
  CHECK_THROWS_KIND(add_box(tab({{1}}, 2), 2, 1), NotSemistandard);
  CHECK_THROWS_KIND(add_box(tab({{1}}, 2), 3, 2), NotAddable);
  CHECK_THROWS_KIND(add_box(tab({{1}}, 2), 1, 3), LetterOutOfRange);
}

TEST_CASE("first column") {
  const auto t = tab(kBereleInput, 10);
  CHECK(first_column(t) == Word{1, 3, 6, 8, 9});
  CHECK(drop_first_column(t) == tab({{1, 2, 3, 3}, {3, 4, 8}, {6, 8}, {8, 9}}, 10));
  CHECK(drop_first_column(tab({{1}, {2}}, 2)).row_count() == 0);
}

TEST_CASE("straightened") {
  const auto t = tab({{1, 2, o}, {3, o}}, 3);
  CHECK(t.straightened() == tab({{1, 2}, {3}}, 3));
  CHECK_THROWS_KIND(tab({{o, 2}}, 3).straightened(), HasSlidableHole);
}

TEST_CASE("text format") {
  CHECK(parse_tableau("1 1 2\n3 4", 4) == tab({{1, 1, 2}, {3, 4}}, 4));
  CHECK(render(tab({{1, 1, 2}, {3, 4}}, 4)) == "1 1 2\n3 4");
  CHECK(parse_tableau("2 o o 2 4\n3 4 4 o\no 6 8\no o 9\n5", 9) == punctured_example());
  CHECK(render(punctured_example()) == "2 o o 2 4\n3 4 4 o\no 6 8\no o 9\n5");
  CHECK(parse_tableau("", 3) == Tableau{}.with_bound(3));
  CHECK(render(Tableau{}) == "");
  CHECK(parse_tableau("1 O\n2\n", 3) == tab({{1, o}, {2}}, 3));
}

TEST_CASE("text format errors") {
  try {
    (void)parse_tableau("1 2\n3 x", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_tableau("1\n2 3", 4), ParseError);
  CHECK_THROWS_AS(parse_tableau("1\n\n2", 4), ParseError);
  CHECK_THROWS_AS(parse_tableau("5", 4), ParseError);
  CHECK_THROWS_AS(parse_tableau("1ab", 4), ParseError);
}

TEST_CASE("json format") {
  const auto t = tab({{1, o}, {2}}, 3);
  CHECK(render_json(t) == R"({"rows":[[1,"hole"],[2]]})");
  CHECK(parse_tableau_json(R"({"rows":[[1,"hole"],[2]]})", 3) == t);
  CHECK(parse_tableau_json(R"({"rows":[]})", 3) == Tableau{}.with_bound(3));
  CHECK_THROWS_AS(parse_tableau_json(R"({"rows":[[1],[2,3]]})", 3), ParseError);
  CHECK_THROWS_AS(parse_tableau_json(R"({"cols":[]})", 3), ParseError);
  CHECK_THROWS_AS(parse_tableau_json(R"({"rows":[["x"]]})", 3), ParseError);
  CHECK_THROWS_AS(parse_tableau_json("{", 3), ParseError);
}

TEST_CASE("serialization round trip over generated families") {
  for (const auto& l : enumerate::partitions(4, 4))
    for (const auto& pp : enumerate::punctured_shapes(l, 2))
      enumerate::for_each_sst(pp, 3, [](const PuncturedTableau& t) {
        CHECK(parse_tableau(render(t), 3) == t);
        CHECK(parse_tableau_json(render_json(t), 3) == t);
      });
}
