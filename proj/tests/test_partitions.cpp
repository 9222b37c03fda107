#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/partition.hpp"

using namespace symtab;

namespace {

const Partition kLambda{5, 4, 3, 3, 1};

PuncturedPartition example_punctured() {
  return PuncturedPartition(kLambda, {{1, 2}, {1, 3}, {2, 4}, {3, 1}, {4, 1}, {4, 2}});
}

// Row r is addable iff lambda_r < lambda_{r-1}, with lambda_0 infinite.
std::vector<int> addable_by_definition(const Partition& l) {
  std::vector<int> out;
  for (int r = 1; r <= l.length() + 1; ++r)
    if (r == 1 || l.part(r) < l.part(r - 1)) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("partition construction") {
  CHECK(Partition{3, 0, 0} == Partition{3});
  CHECK(Partition{}.empty());
  CHECK(kLambda.size() == 16);
  CHECK(kLambda.part(6) == 0);
  CHECK_THROWS_KIND(Partition({1, 2}), InvalidShape);
  CHECK_THROWS_KIND(Partition({2, -1}), InvalidShape);
  CHECK_THROWS_KIND(SkewPartition(Partition{1}, Partition{2}), InvalidShape);
  CHECK_THROWS_KIND(PuncturedPartition(Partition{1}, {{1, 2}}), InvalidShape);
}

TEST_CASE("addable rows") {
  CHECK(addable_rows(kLambda) == std::vector<int>{1, 2, 3, 5, 6});
  CHECK(addable_rows(Partition{}) == std::vector<int>{1});
  CHECK(addable_rows(Partition{2, 2}) == std::vector<int>{1, 3});
  for (const auto& l : enumerate::partitions(6, 6)) CHECK(addable_rows(l) == addable_by_definition(l));
}

TEST_CASE("add and remove rows") {
  CHECK(add_row(kLambda, 6) == Partition{5, 4, 3, 3, 1, 1});
  CHECK(add_row(Partition{}, 1) == Partition{1});
  CHECK(add_row(Partition{2, 2}, 3) == Partition{2, 2, 1});
  CHECK(removable_rows(kLambda) == std::vector<int>{1, 2, 4, 5});
  CHECK(remove_row(kLambda, 2) == Partition{5, 3, 3, 3, 1});
  CHECK(remove_row(Partition{1}, 1) == Partition{});
  CHECK_THROWS_KIND(add_row(kLambda, 4), NotAddable);
  CHECK_THROWS_KIND(remove_row(kLambda, 3), NotRemovable);
  CHECK_THROWS_KIND(remove_row(Partition{}, 1), NotRemovable);
  for (const auto& l : enumerate::partitions(5, 5)) {
    for (int r : addable_rows(l)) CHECK(remove_row(add_row(l, r), r) == l);
    for (int r : removable_rows(l)) CHECK(add_row(remove_row(l, r), r) == l);
  }
}

TEST_CASE("containment and strips") {
  CHECK(contains(Partition{4, 3, 1}, kLambda));
  CHECK(contains(kLambda, kLambda));
  CHECK_FALSE(contains(Partition{3}, Partition{2, 2}));
  CHECK(is_horizontal_strip(SkewPartition(kLambda, Partition{4, 4, 3, 1, 1})));
  CHECK(is_vertical_strip(SkewPartition(kLambda, Partition{5, 3, 2, 2})));
  CHECK_FALSE(is_horizontal_strip(SkewPartition(Partition{2, 2}, Partition{})));
  CHECK(is_vertical_strip(SkewPartition(Partition{2, 2}, Partition{1, 1})));
  CHECK(differing_row(Partition{2, 1}, Partition{3, 2}) == 0);
  CHECK(differing_row(Partition{2, 1}, Partition{2, 2}) == 2);
  CHECK(differing_row(Partition{2, 1}, Partition{2, 1, 1}) == 3);
  CHECK(differing_row(Partition{2, 1}, Partition{2}) == 2);
}

TEST_CASE("slidable holes") {
  const auto pp = example_punctured();
  CHECK(slidable_holes(pp) == std::vector<Cell>{{1, 2}, {1, 3}, {3, 1}, {4, 1}, {4, 2}});
  CHECK(reversely_slidable_holes(pp) == std::vector<Cell>{{1, 2}, {2, 4}, {3, 1}, {4, 2}});
  const PuncturedPartition plain(kLambda, {});
  CHECK(slidable_holes(plain).empty());
  CHECK(reversely_slidable_holes(plain).empty());
}

TEST_CASE("punctured partitions as ordinary shapes") {
  CHECK(as_partition(PuncturedPartition(Partition{3, 2}, {{1, 3}, {2, 2}})) == Partition{2, 1});
  CHECK(as_partition(PuncturedPartition(kLambda, {})) == kLambda);
  CHECK(as_skew(PuncturedPartition(Partition{2, 1}, {{1, 1}})) ==
        SkewPartition(Partition{2, 1}, Partition{1}));
  CHECK_THROWS_KIND(as_partition(PuncturedPartition(Partition{2}, {{1, 1}})), HasSlidableHole);
  CHECK_THROWS_KIND(as_skew(PuncturedPartition(Partition{2}, {{1, 2}})), HasReverselySlidableHole);
  const SkewPartition skew(Partition{3, 2}, Partition{1});
  CHECK(as_skew(PuncturedPartition(skew)) == skew);
}

TEST_CASE("partition text") {
  CHECK(to_string(kLambda) == "(5,4,3,3,1)");
  CHECK(to_string(Partition{}) == "()");
  CHECK(parse_partition("(5,4,3,3,1)") == kLambda);
  CHECK(parse_partition("5,4,3") == Partition{5, 4, 3});
  CHECK(parse_partition("()") == Partition{});
  CHECK_THROWS_AS(parse_partition("(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_partition("(3,x)"), ParseError);
  CHECK_THROWS_AS(parse_partition("(3"), ParseError);
  for (const auto& p : oracle::partitions(6, 6)) {
    const Partition l(p);
    CHECK(parse_partition(to_string(l)) == l);
  }
}
