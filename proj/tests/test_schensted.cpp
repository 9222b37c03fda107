#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/schensted.hpp"

using namespace symtab;
using testing::tab;

namespace {

const std::vector<std::vector<int>> kInput{{1, 1, 2, 3, 3}, {3, 3, 4, 8}, {6, 6, 8}, {8, 8, 9}, {9}};
const std::vector<std::vector<int>> kBumped{{1, 1, 2, 2, 3}, {3, 3, 3, 8}, {4, 6, 8}, {6, 8, 9}, {8}, {9}};

}  // namespace

TEST_CASE("row insertion") {
  const auto rec = row_insert(tab(kInput, 10), 2);
  CHECK(rec.result == tab(kBumped, 10));
  CHECK(rec.route == std::vector<int>{4, 3, 1, 1, 1, 1});
  CHECK(rec.letters == std::vector<int>{2, 3, 4, 6, 8, 9});
  CHECK(rec.final_row == 6);

  const auto one = row_insert(Tableau{}.with_bound(5), 5);
  CHECK(one.result == tab({{5}}, 5));
  CHECK(one.route == std::vector<int>{1});
  CHECK(one.letters == std::vector<int>{5});

  const auto two = row_insert(tab({{1, 3}}, 3), 2);
  CHECK(two.result == tab({{1, 2}, {3}}, 3));
  CHECK(two.route == std::vector<int>{2, 1});
  CHECK(two.letters == std::vector<int>{2, 3});
}

TEST_CASE("row insertion errors") {
  CHECK_THROWS_KIND(row_insert(tab({{1}}, 2), 3), LetterOutOfRange);
  CHECK_THROWS_KIND(row_insert(tab({{1}}, 2), 0), LetterOutOfRange);
  CHECK_THROWS_KIND(row_insert(tab({{2, 1}}, 2), 1), NotSemistandard);
  CHECK_THROWS_KIND(row_insert(tab({{testing::o, 1}}, 2), 1), InvalidShape);
  CHECK_THROWS_KIND(row_insert_inverse(tab({{1, 2}, {3}}, 3), 3), NotRemovable);
}

TEST_CASE("row insertion inverse") {
  CHECK(row_insert_inverse(tab({{1, 2}, {3}}, 3), 2) == std::pair{tab({{1, 3}}, 3), 2});
  CHECK(row_insert_inverse(tab({{5}}, 5), 1) == std::pair{Tableau{}.with_bound(5), 5});
  CHECK(row_insert_inverse(tab(kBumped, 10), 6) == std::pair{tab(kInput, 10), 2});
}

TEST_CASE("row insertion agrees with the reference and is a bijection") {
  for (const auto& l : enumerate::partitions(4, 4))
    for (const auto& t : enumerate::sst(l, 3))
      for (int x = 1; x <= 3; ++x) {
        const auto rec = row_insert(t, x);
        CHECK(rec.result.rows() == oracle::schensted(t.rows(), x));
        CHECK(is_semistandard(rec.result));
        CHECK(rec.route.size() == static_cast<std::size_t>(rec.final_row));
        CHECK(row_insert_inverse(rec.result, rec.final_row) == std::pair{t, x});
      }
  // Every (S, removable row) arises exactly once.
  for (const auto& l : enumerate::partitions(5, 5))
    for (const auto& s : enumerate::sst(l, 3))
      for (int r : removable_rows(l)) {
        const auto [t, x] = row_insert_inverse(s, r);
        const auto rec = row_insert(t, x);
        CHECK(rec.result == s);
        CHECK(rec.final_row == r);
      }
}
