#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "symtab/verify.hpp"

using namespace symtab::verify;

TEST_CASE("pinned examples") {
  const auto r = check_pinned();
  CHECK(r.passed());
  CHECK(r.pinned > 0);
}

TEST_CASE("coincidence") {
  const auto tiny = check_coincidence(2, 0);
  CHECK(tiny.passed());
  CHECK(tiny.cases == 2);
  CHECK(tiny.pinned == 1);
  const auto full = check_coincidence(4, 4);
  CHECK(full.passed());
  CHECK(full.cases > 0);
}

TEST_CASE("small bijection checks") {
  CHECK(check_berele_bijection(2, 2).passed());
  CHECK(check_rs(4, 2, 0).passed());
  CHECK(check_rsk(2, 2).passed());
  CHECK(check_drsk(2, 2).passed());
  CHECK(check_lr(2, 3).passed());
  CHECK(check_bumping_lemma(2, 2).passed());
  CHECK(check_bumping_structure(4, 2).passed());
  CHECK(check_schensted(3, 3).passed());
  CHECK(check_round_trips(3, 3).passed());
  CHECK(check_knuth_sliding(3, 3, 2).passed());
}

TEST_CASE("empty ranges pass with no cases") {
  for (const auto& r : {check_coincidence(2, -1), check_berele_bijection(2, -1), check_bumping_lemma(2, -1),
                        check_lr(2, -1), check_knuth_sliding(3, -1), check_schensted(3, -1)}) {
    CHECK(r.passed());
    CHECK(r.cases == 0);
  }
}

TEST_CASE("counts follow the enumeration") {
  // Coincidence at 2n = 2 runs over SpT_2(nu) x [2] with one row.
  long long expected = 0;
  for (const auto& shape : oracle::partitions(3, 1)) expected += 2 * static_cast<long long>(oracle::spt(shape, 2).size());
  CHECK(check_coincidence(2, 3).cases == expected);
}

TEST_CASE("report formats") {
  CheckReport r;
  r.name = "demo";
  r.range = "2n=2";
  r.cases = 3;
  CHECK(to_text(r) == "PASS demo (2n=2): 3 cases\n");
  r.fail("{\"rows\":[[1]]}");
  CHECK_FALSE(r.passed());
  CHECK(to_text(r) == "FAIL demo (2n=2): 3 cases, 1 failures\n  {\"rows\":[[1]]}\n");
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["passed"] == false);
  CHECK(j["failure_count"] == 1);
  CHECK(j["failures"][0] == "{\"rows\":[[1]]}");
}

TEST_CASE("registry") {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"pinned", "coincidence", "berele-bijection", "bumping-lemma",
                                          "bumping-structure", "rs", "rsk", "drsk", "lr", "knuth-sliding",
                                          "schensted", "round-trip"});
  Bounds small;
  small.max_two_n = 2;
  small.shape_size = 2;
  for (const auto& c : registry())
    if (c.name == "coincidence") CHECK(c.run(small).size() == 1);
}
