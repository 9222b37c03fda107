#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symtab::verify {

// Outcome of one exhaustive check. Counterexamples are stored in the
// canonical JSON/word formats so that they can be replayed; only the first
// few are kept, but failure_count counts all of them.
struct CheckReport {
  std::string name;
  std::string range;
  long long cases = 0;
  int pinned = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failure_count == 0; }
  void fail(std::string counterexample);
};

// Worked examples from the literature, always run in full.
CheckReport check_pinned();

// Berele insertion against the AII insertion, the direct loop against the
// sliding form, and the punctured-first-column rectification, over all
// (T, x) with T in SpT_{2n}(nu), |nu| <= max_shape_size.
CheckReport check_coincidence(int two_n, int max_shape_size);

// Injectivity, exact image and the counting identity for (T, x) -> T <- x,
// together with the berele_inverse round trip.
CheckReport check_berele_bijection(int two_n, int max_shape_size);

// Terminal-row monotonicity for chained insertions of x then x'.
CheckReport check_bumping_lemma(int two_n, int max_shape_size);

// Shape of the row-inserting letters when T <- x leaves SpT: the minimal
// failing index s satisfies s >= 2, x_{s-1} = 2s-3, x_s = 2s-2 and the tail
// repeats the first column of T.
CheckReport check_bumping_structure(int two_n, int max_shape_size);

// RS over SpT_{2n}(nu) x [2n]^N for |nu| <= max_nu_size and N <= max_length.
CheckReport check_rs(int two_n, int max_length, int max_nu_size = 1);
// RSK and dual RSK over all contents with total <= max_total_content.
CheckReport check_rsk(int two_n, int max_total_content, int max_nu_size = 0);
CheckReport check_drsk(int two_n, int max_total_content, int max_nu_size = 0);

// LR map bijectivity and the suc fixed-point characterization over
// SST_{2n}(lambda), |lambda| <= max_shape_size.
CheckReport check_lr(int two_n, int max_shape_size);

// Slides, rectification and reverse rectification against the insertion
// tableau of the row word, over punctured shapes with |lambda| <=
// max_shape_size and at most max_holes holes, alphabet [n].
CheckReport check_knuth_sliding(int n, int max_shape_size, int max_holes = 2);

// row_insert / row_insert_inverse round trip and the Pieri count over
// SST_n(lambda), |lambda| <= max_shape_size.
CheckReport check_schensted(int n, int max_shape_size);

// Text and JSON serializations of tableaux, words, partitions and chains.
CheckReport check_round_trips(int n, int max_shape_size);

struct Bounds {
  int max_two_n = 4;
  int shape_size = 4;
  int bumping_size = 3;
  int rs_length = 3;
  int rs_nu_size = 1;
  int content = 3;
  int lr_size = 4;
  int knuth_alphabet = 4;
  int knuth_size = 5;
  int holes = 2;
};

struct NamedCheck {
  std::string name;
  std::function<std::vector<CheckReport>(const Bounds&)> run;
};

// Registry used by the command line; checks that depend on 2n run once for
// every even 2n up to max_two_n.
const std::vector<NamedCheck>& registry();

std::string to_text(const CheckReport& r);
std::string to_json(const CheckReport& r);

}  // namespace symtab::verify
