#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/jeu_de_taquin.hpp"

using namespace symtab;
using testing::o;
using testing::tab;

namespace {

std::vector<std::vector<int>> oracle_rect(const PuncturedTableau& t) {
  return oracle::insertion_tableau(row_word(t).letters());
}

}  // namespace

TEST_CASE("slide") {
  const auto t = tab({{1, 1, 2, 2, 3}, {o, 3, 3, 8}, {6, 6, 8}, {8, 8, 9}, {9}}, 10);
  const auto res = slide(t, 2, 1);
  CHECK(res.tableau == tab({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8, o}, {9}}, 10));
  CHECK(res.route == std::vector<int>{1, 3, 3, 3});
  CHECK(res.terminal_row == 4);

  const auto small = slide(tab({{o, 1}, {2}}, 2), 1, 1);
  CHECK(small.tableau == tab({{1, o}, {2}}, 2));
  CHECK(small.route == std::vector<int>{1, 2});
  CHECK(small.terminal_row == 1);
}

TEST_CASE("slide of a hole that is not slidable") {
  const auto t = tab({{1, 2, o}, {3}}, 3);
  const auto res = slide(t, 1, 3);
  CHECK(res.tableau == t);
  CHECK(res.route == std::vector<int>{3, 3});
  CHECK(res.terminal_row == 1);
}

TEST_CASE("slide errors") {
  const auto t = tab({{o, 1}, {2}}, 2);
  CHECK_THROWS_KIND(slide(t, 1, 2), NotAHole);
  CHECK_THROWS_KIND(slide(t, 5, 5), NotAHole);
  CHECK_THROWS_KIND(slide(tab({{o, 2, 1}}, 2), 1, 1), NotSemistandard);
  CHECK_THROWS_KIND(reverse_slide(t, 2, 1), NotAHole);
  CHECK_THROWS_KIND(rectify(tab({{2, 1}}, 2)), NotSemistandard);
  CHECK_THROWS_KIND(reverse_rectify(tab({{2, 1}}, 2)), NotSemistandard);
}

TEST_CASE("reverse slide") {
  const auto t = tab({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8, o}, {9}}, 10);
  CHECK(reverse_slide(t, 4, 3) == tab({{o, 1, 2, 2, 3}, {1, 3, 3, 8}, {6, 6, 8}, {8, 8, 9}, {9}}, 10));
  const auto fixed = tab({{o, 1}, {2}}, 2);
  CHECK(reverse_slide(fixed, 1, 1) == fixed);
}

TEST_CASE("rectify") {
  CHECK(rectify(tab({{1, 1, 2, 2, 3}, {o, 3, 3, 8}, {o, 6, 8}, {6, 8, 9}, {8}, {9}}, 10)) ==
        tab({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8}, {9}}, 10));
  const auto plain = tab({{1, 2}, {3}}, 3);
  CHECK(rectify(plain) == plain);
  CHECK(rectify(tab({{o, o}, {o}}, 3)) == Tableau{}.with_bound(3));
}

TEST_CASE("reverse rectify") {
  const auto t = tab({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8, o}, {9}, {o}}, 10);
  const auto skew = reverse_rectify(t);
  CHECK(skew == tab({{o, 1, 2, 2, 3}, {o, 3, 3, 8}, {1, 6, 8}, {6, 8, 9}, {8}, {9}}, 10));
  CHECK(as_skew(skew.shape()) == SkewPartition(Partition{5, 4, 3, 3, 1, 1}, Partition{1, 1}));
  const auto plain = tab({{1, 2}, {3}}, 3);
  CHECK(reverse_rectify(plain) == plain);
}

TEST_CASE("skew tableaux rectify to the insertion tableau of their row word") {
  for (const auto& outer : enumerate::partitions(5, 4))
    for (const auto& inner : enumerate::partitions(outer.size(), outer.length())) {
      if (!contains(inner, outer)) continue;
      const PuncturedPartition pp(SkewPartition(outer, inner));
      enumerate::for_each_sst(pp, 3, [](const PuncturedTableau& t) {
        CHECK(rectify(t).rows() == oracle_rect(t));
      });
    }
}

TEST_CASE("slides at the latest and first holes keep the Knuth class") {
  for (const auto& l : enumerate::partitions(4, 4))
    for (const auto& pp : enumerate::punctured_shapes(l, 2)) {
      const auto fwd = slidable_holes(pp);
      const auto rev = reversely_slidable_holes(pp);
      enumerate::for_each_sst(pp, 3, [&](const PuncturedTableau& t) {
        const auto expected = oracle_rect(t);
        if (!fwd.empty()) {
          const Cell h = fwd.back();
          CHECK(oracle_rect(slide(t, h.row, h.col).tableau) == expected);
        }
        if (!rev.empty()) {
          const Cell h = rev.front();
          CHECK(oracle_rect(reverse_slide(t, h.row, h.col)) == expected);
        }
      });
    }
}

TEST_CASE("slide at the latest hole with a hole diagonally above") {
  // The hole at (2,1) has only a hole above it, so the entry to its right
  // moves in under the 1 of the first row.
  const auto t = tab({{1, o}, {o, 1}}, 2);
  const auto res = slide(t, 2, 1);
  CHECK(res.tableau == tab({{1, o}, {1, o}}, 2));
  CHECK_FALSE(is_semistandard(res.tableau));
}
