#include "symtab/enumeration.hpp"

#include <algorithm>

namespace symtab::enumerate {

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    const Visitor<Partition>& visit) {
  if (remaining == 0) {
    visit(Partition(cur));
    return;
  }
  if (static_cast<int>(cur.size()) >= max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, visit);
    cur.pop_back();
  }
}

template <class T>
std::vector<T> collect(const std::function<void(const Visitor<T>&)>& run) {
  std::vector<T> out;
  run([&](const T& v) { out.push_back(v); });
  return out;
}

// Backtracking fill of the domain in row-major order. A cell is bounded
// below by its nearest domain neighbour to the left (weakly) and above
// (strictly); `symplectic` adds T(i,1) >= 2i-1.
class Filler {
public:
  Filler(const PuncturedPartition& pp, int n, bool symplectic,
         const Visitor<PuncturedTableau>& visit)
      : n_(n), symplectic_(symplectic), visit_(visit), cells_(pp.domain()) {
    const Partition& lambda = pp.shape();
    for (int i = 1; i <= lambda.length(); ++i)
      rows_.emplace_back(static_cast<std::size_t>(lambda.part(i)), PuncturedTableau::kHole);
  }

  void run() { fill(0); }

private:
  int& at(const Cell& c) {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  }

  int lower_bound(const Cell& c) {
    int lo = 1;
    for (int j = c.col - 1; j >= 1; --j)
      if (int v = at({c.row, j}); v != PuncturedTableau::kHole) {
        lo = std::max(lo, v);
        break;
      }
    for (int i = c.row - 1; i >= 1; --i)
      if (int v = at({i, c.col}); v != PuncturedTableau::kHole) {
        lo = std::max(lo, v + 1);
        break;
      }
    if (symplectic_ && c.col == 1) lo = std::max(lo, 2 * c.row - 1);
    return lo;
  }

  void fill(std::size_t k) {
    if (k == cells_.size()) {
      visit_(PuncturedTableau(rows_, std::max(n_, 1)));
      return;
    }
    const Cell c = cells_[k];
    for (int v = lower_bound(c); v <= n_; ++v) {
      at(c) = v;
      fill(k + 1);
    }
    at(c) = PuncturedTableau::kHole;
  }

  int n_;
  bool symplectic_;
  const Visitor<PuncturedTableau>& visit_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> rows_;
};

void words_rec(int n, int length, WordMode mode, std::vector<int>& cur, const Visitor<Word>& visit) {
  if (static_cast<int>(cur.size()) == length) {
    visit(Word(cur));
    return;
  }
  int lo = 1, hi = n;
  if (!cur.empty() && mode == WordMode::WeaklyIncreasing) lo = cur.back();
  if (!cur.empty() && mode == WordMode::StrictlyDecreasing) hi = cur.back() - 1;
  for (int x = lo; x <= hi; ++x) {
    cur.push_back(x);
    words_rec(n, length, mode, cur, visit);
    cur.pop_back();
  }
}

// Picks part i from ranges[i] so that the parts sum to target_total and
// stay weakly decreasing.
std::vector<Partition> vary_parts(const std::vector<std::pair<int, int>>& ranges, int target_total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int total) {
    if (i == ranges.size()) {
      if (total == target_total) out.emplace_back(cur);
      return;
    }
    for (int v = ranges[i].first; v <= ranges[i].second; ++v) {
      if (!cur.empty() && v > cur.back()) break;
      if (v == 0) {
        // Remaining parts must also vanish.
        bool ok = true;
        for (std::size_t k = i + 1; k < ranges.size(); ++k) ok = ok && ranges[k].first == 0;
        if (!ok) continue;
        if (total == target_total) out.emplace_back(cur);
        continue;
      }
      cur.push_back(v);
      rec(i + 1, total + v);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void for_each_partition(int max_size, int max_length, const Visitor<Partition>& visit) {
  std::vector<int> cur;
  for (int s = 0; s <= max_size; ++s) partitions_rec(s, s, max_length, cur, visit);
}

std::vector<Partition> partitions(int max_size, int max_length) {
  return collect<Partition>([&](const Visitor<Partition>& v) { for_each_partition(max_size, max_length, v); });
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(size, size, max_length, cur, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_sst(const PuncturedPartition& pp, int n, const Visitor<PuncturedTableau>& visit) {
  Filler(pp, n, false, visit).run();
}

void for_each_sst(const Partition& lambda, int n, const Visitor<Tableau>& visit) {
  Filler(PuncturedPartition(lambda, {}), n, false, visit).run();
}

std::vector<Tableau> sst(const Partition& lambda, int n) {
  return collect<Tableau>([&](const Visitor<Tableau>& v) { for_each_sst(lambda, n, v); });
}

void for_each_spt(const Partition& nu, int two_n, const Visitor<Tableau>& visit) {
  if (2 * nu.length() > two_n) return;
  Filler(PuncturedPartition(nu, {}), two_n, true, visit).run();
}

std::vector<Tableau> spt(const Partition& nu, int two_n) {
  return collect<Tableau>([&](const Visitor<Tableau>& v) { for_each_spt(nu, two_n, v); });
}

std::vector<PuncturedPartition> punctured_shapes(const Partition& lambda, int max_holes) {
  const std::vector<Cell> cells = lambda.cells();
  std::vector<PuncturedPartition> out;
  std::vector<Cell> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.emplace_back(lambda, chosen);
      return;
    }
    for (std::size_t i = start; i < cells.size(); ++i) {
      chosen.push_back(cells[i]);
      rec(i + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  for (int h = 0; h <= std::min<int>(max_holes, static_cast<int>(cells.size())); ++h) rec(0, h);
  return out;
}

void for_each_word(int n, int length, WordMode mode, const Visitor<Word>& visit) {
  std::vector<int> cur;
  words_rec(n, length, mode, cur, visit);
}

std::vector<Word> words(int n, int length, WordMode mode) {
  return collect<Word>([&](const Visitor<Word>& v) { for_each_word(n, length, mode, v); });
}

std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int size) {
  std::vector<std::pair<int, int>> ranges;
  for (int i = 1; i <= lambda.length(); ++i) ranges.push_back({lambda.part(i + 1), lambda.part(i)});
  return vary_parts(ranges, lambda.size() - size);
}

std::vector<Partition> horizontal_strip_additions(const Partition& lambda, int size, int max_length) {
  std::vector<std::pair<int, int>> ranges;
  const int rows = std::max(lambda.length(), std::min(lambda.length() + 1, max_length));
  for (int i = 1; i <= rows; ++i) {
    const int hi = i == 1 ? lambda.part(1) + size : lambda.part(i - 1);
    ranges.push_back({lambda.part(i), hi});
  }
  if (size == 0) return {lambda};
  return vary_parts(ranges, lambda.size() + size);
}

std::vector<Partition> vertical_strip_removals(const Partition& lambda, int size) {
  std::vector<std::pair<int, int>> ranges;
  for (int i = 1; i <= lambda.length(); ++i) ranges.push_back({lambda.part(i) - 1, lambda.part(i)});
  return vary_parts(ranges, lambda.size() - size);
}

std::vector<Partition> vertical_strip_additions(const Partition& lambda, int size, int max_length) {
  std::vector<std::pair<int, int>> ranges;
  const int rows = std::max(lambda.length(), std::min(lambda.length() + size, max_length));
  for (int i = 1; i <= rows; ++i) ranges.push_back({lambda.part(i), lambda.part(i) + 1});
  if (size == 0) return {lambda};
  return vary_parts(ranges, lambda.size() + size);
}

void for_each_ot(int n, int size, const Partition& nu, const std::optional<Partition>& xi,
                 const Visitor<OscillatingTableau>& visit) {
  if (nu.length() > n) return;
  OscillatingTableau cur{{nu}, n};
  std::function<void()> rec = [&] {
    const Partition last = cur.chain.back();
    if (cur.size() == size) {
      if (!xi || last == *xi) visit(cur);
      return;
    }
    for (int r : addable_rows(last)) {
      if (r > n) continue;
      cur.chain.push_back(add_row(last, r));
      rec();
      cur.chain.pop_back();
    }
    for (int r : removable_rows(last)) {
      cur.chain.push_back(remove_row(last, r));
      rec();
      cur.chain.pop_back();
    }
  };
  rec();
}

std::vector<OscillatingTableau> ot(int n, int size, const Partition& nu, const std::optional<Partition>& xi) {
  return collect<OscillatingTableau>(
      [&](const Visitor<OscillatingTableau>& v) { for_each_ot(n, size, nu, xi, v); });
}

void for_each_csot(int n, const Partition& nu, const std::optional<Partition>& xi,
                   const std::vector<int>& content, const Visitor<ColumnStrictOT>& visit) {
  if (nu.length() > n) return;
  ColumnStrictOT cur{{nu}, n};
  std::function<void(std::size_t)> rec = [&](std::size_t step) {
    const Partition last = cur.chain.back();
    if (step == content.size()) {
      if (!xi || last == *xi) visit(cur);
      return;
    }
    const int l = content[step];
    for (int a = 0; a <= l; ++a) {
      for (const Partition& mid : horizontal_strip_removals(last, a)) {
        for (const Partition& next : horizontal_strip_additions(mid, l - a, n)) {
          cur.chain.push_back(mid);
          cur.chain.push_back(next);
          rec(step + 1);
          cur.chain.resize(cur.chain.size() - 2);
        }
      }
    }
  };
  rec(0);
}

std::vector<ColumnStrictOT> csot(int n, const Partition& nu, const std::optional<Partition>& xi,
                                 const std::vector<int>& content) {
  return collect<ColumnStrictOT>(
      [&](const Visitor<ColumnStrictOT>& v) { for_each_csot(n, nu, xi, content, v); });
}

void for_each_rsot(int n, const Partition& nu, const std::optional<Partition>& xi,
                   const std::vector<int>& content, const Visitor<RowStrictOT>& visit) {
  if (nu.length() > n) return;
  RowStrictOT cur{{nu}, n};
  std::function<void(std::size_t)> rec = [&](std::size_t step) {
    const Partition last = cur.chain.back();
    if (step == content.size()) {
      if (!xi || last == *xi) visit(cur);
      return;
    }
    const int k = content[step];
    for (int a = 0; a <= k; ++a) {
      for (const Partition& mid : vertical_strip_additions(last, a, n)) {
        for (const Partition& next : vertical_strip_removals(mid, k - a)) {
          cur.chain.push_back(mid);
          cur.chain.push_back(next);
          rec(step + 1);
          cur.chain.resize(cur.chain.size() - 2);
        }
      }
    }
  };
  rec(0);
}

std::vector<RowStrictOT> rsot(int n, const Partition& nu, const std::optional<Partition>& xi,
                              const std::vector<int>& content) {
  return collect<RowStrictOT>(
      [&](const Visitor<RowStrictOT>& v) { for_each_rsot(n, nu, xi, content, v); });
}

std::vector<std::vector<int>> weak_compositions(int parts, int max_part, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int sum) {
    if (static_cast<int>(cur.size()) == parts) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= max_part && sum + v <= max_sum; ++v) {
      cur.push_back(v);
      rec(sum + v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace symtab::enumerate
