#pragma once

// Brute-force reference implementations used by the tests. They work on
// plain nested vectors and share no code with the library algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;
using Letters = std::vector<int>;

// All weakly decreasing positive sequences with sum <= max_size and at most
// max_length parts.
inline std::vector<Letters> partitions(int max_size, int max_length) {
  std::vector<Letters> out;
  std::function<void(Letters&, int, int)> rec = [&](Letters& cur, int left, int cap) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = 1; p <= std::min(left, cap); ++p) {
      cur.push_back(p);
      rec(cur, left - p, p);
      cur.pop_back();
    }
  };
  Letters cur;
  rec(cur, max_size, max_size);
  return out;
}

inline bool semistandard(const Rows& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j + 1 < t[i].size() && t[i][j] > t[i][j + 1]) return false;
      if (i + 1 < t.size() && j < t[i + 1].size() && t[i][j] >= t[i + 1][j]) return false;
    }
  return true;
}

inline bool symplectic(const Rows& t) {
  if (!semistandard(t)) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i][0] < 2 * static_cast<int>(i) + 1) return false;
  return true;
}

// Every filling of the shape by [1, n], filtered afterwards.
inline std::vector<Rows> all_fillings(const Letters& shape, int n) {
  int cells = 0;
  for (int p : shape) cells += p;
  std::vector<Rows> out;
  Letters flat(static_cast<std::size_t>(cells), 1);
  while (true) {
    Rows t;
    std::size_t k = 0;
    for (int p : shape) {
      t.emplace_back(flat.begin() + static_cast<long>(k), flat.begin() + static_cast<long>(k + p));
      k += static_cast<std::size_t>(p);
    }
    out.push_back(t);
    int pos = cells - 1;
    while (pos >= 0 && flat[static_cast<std::size_t>(pos)] == n) flat[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++flat[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline std::vector<Rows> sst(const Letters& shape, int n) {
  std::vector<Rows> out;
  for (auto& t : all_fillings(shape, n))
    if (semistandard(t)) out.push_back(t);
  return out;
}

inline std::vector<Rows> spt(const Letters& shape, int two_n) {
  std::vector<Rows> out;
  for (auto& t : all_fillings(shape, two_n))
    if (symplectic(t)) out.push_back(t);
  return out;
}

// Textbook Schensted row insertion.
inline Rows schensted(Rows t, int x) {
  for (auto& row : t) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return t;
    }
    std::swap(*it, x);
  }
  t.push_back({x});
  return t;
}

inline Rows insertion_tableau(const Letters& w) {
  Rows t;
  for (int x : w) t = schensted(t, x);
  return t;
}

// One application of K1, K2 or their inverses at every position.
inline std::set<Letters> knuth_neighbors(const Letters& w) {
  std::set<Letters> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    int a = w[i], b = w[i + 1], c = w[i + 2];
    auto with = [&](int p, int q, int r) {
      Letters v = w;
      v[i] = p;
      v[i + 1] = q;
      v[i + 2] = r;
      out.insert(v);
    };
    // K1: y z x -> y x z with x < y <= z.
    if (c < a && a <= b) with(a, c, b);
    // K1 inverse: y x z -> y z x.
    if (b < a && a <= c) with(a, c, b);
    // K2: x z y -> z x y with x <= y < z.
    if (a <= c && c < b) with(b, a, c);
    // K2 inverse: z x y -> x z y.
    if (b <= c && c < a) with(b, a, c);
  }
  return out;
}

inline std::set<Letters> knuth_class(const Letters& w) {
  std::set<Letters> seen{w};
  std::vector<Letters> todo{w};
  while (!todo.empty()) {
    Letters cur = todo.back();
    todo.pop_back();
    for (auto& v : knuth_neighbors(cur))
      if (seen.insert(v).second) todo.push_back(v);
  }
  return seen;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long power(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Inverse of any map by tabulating its forward images.
template <class In, class Out>
class Tabulated {
public:
  void add(const In& in, const Out& out) { images_[out].push_back(in); }
  const std::vector<In>* preimages(const Out& out) const {
    auto it = images_.find(out);
    return it == images_.end() ? nullptr : &it->second;
  }
  std::size_t image_size() const { return images_.size(); }

private:
  std::map<Out, std::vector<In>> images_;
};

}  // namespace oracle
