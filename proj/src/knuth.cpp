#include "symtab/knuth.hpp"

#include <algorithm>
#include <deque>

#include "symtab/schensted.hpp"

namespace symtab {

std::set<Word> knuth_neighbors(const Word& w) {
  std::set<Word> out;
  const std::vector<int>& a = w.letters();
  auto swapped = [&](std::size_t i, std::size_t j) {
    std::vector<int> b = a;
    std::swap(b[i], b[j]);
    return Word(std::move(b));
  };
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    const int p = a[i], q = a[i + 1], s = a[i + 2];
    // K1: y z x -> y x z when x < y <= z.
    if (s < p && p <= q) out.insert(swapped(i + 1, i + 2));
    // K1 inverse: y x z -> y z x when x < y <= z.
    if (q < p && p <= s) out.insert(swapped(i + 1, i + 2));
    // K2: x z y -> z x y when x <= y < z.
    if (p <= s && s < q) out.insert(swapped(i, i + 1));
    // K2 inverse: z x y -> x z y when x <= y < z.
    if (q <= s && s < p) out.insert(swapped(i, i + 1));
  }
  return out;
}

Tableau insertion_tableau(const Word& w, int bound) {
  Tableau t({}, bound);
  for (int x : w) t = row_insert(t, x).result;
  return t;
}

Tableau insertion_tableau(const Word& w) {
  const int bound = w.empty() ? 1 : *std::max_element(w.begin(), w.end());
  return insertion_tableau(w, bound);
}

bool knuth_equivalent(const Word& w, const Word& v) {
  if (w.size() != v.size()) return false;
  const int bound = std::max({1, w.empty() ? 1 : *std::max_element(w.begin(), w.end()),
                              v.empty() ? 1 : *std::max_element(v.begin(), v.end())});
  return insertion_tableau(w, bound) == insertion_tableau(v, bound);
}

std::set<Word> knuth_class(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (const Word& next : knuth_neighbors(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

}  // namespace symtab
