#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "symtab/error.hpp"
#include "symtab/tableau.hpp"

namespace testing {

constexpr int o = symtab::PuncturedTableau::kHole;

inline symtab::PuncturedTableau tab(std::vector<std::vector<int>> rows, int bound) {
  return symtab::PuncturedTableau(std::move(rows), bound);
}

// Hole-free rows of a tableau, for comparison with the oracles.
inline std::vector<std::vector<int>> rows_of(const symtab::PuncturedTableau& t) { return t.rows(); }

}  // namespace testing

#define CHECK_THROWS_KIND(expr, k)                  \
  do {                                              \
    try {                                           \
      (void)(expr);                                 \
      FAIL("expected " #k);                         \
    } catch (const symtab::Error& e) {              \
      CHECK(e.kind() == symtab::ErrorKind::k);      \
    }                                               \
  } while (false)
