#include "symtab/verify.hpp"

#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symtab/berele.hpp"
#include "symtab/correspondences.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/error.hpp"
#include "symtab/jeu_de_taquin.hpp"
#include "symtab/knuth.hpp"
#include "symtab/schensted.hpp"

namespace symtab::verify {

namespace {

constexpr std::size_t kKeptFailures = 10;

std::string tab(const PuncturedTableau& t) { return render_json(t); }

std::string pair_case(const Tableau& t, int x) { return "T=" + tab(t) + " x=" + std::to_string(x); }

std::string words_case(const std::vector<Word>& ws) {
  std::string out = "[";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? "," : "") + to_string(ws[i]);
  return out + "]";
}

// Runs body and turns any exception into a failure for `what`.
template <class F>
void guarded(CheckReport& rep, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rep.fail(what + " threw: " + e.what());
  }
}

Tableau empty_tableau(int bound) { return Tableau({}, bound); }

std::vector<Partition> symplectic_shapes(int two_n, int max_size) {
  return enumerate::partitions(max_size, two_n / 2);
}

class SpTCounter {
public:
  explicit SpTCounter(int two_n) : two_n_(two_n) {}
  long long operator()(const Partition& nu) {
    auto it = cache_.find(nu);
    if (it != cache_.end()) return it->second;
    long long n = 0;
    enumerate::for_each_spt(nu, two_n_, [&](const Tableau&) { ++n; });
    return cache_[nu] = n;
  }

private:
  int two_n_;
  std::map<Partition, long long> cache_;
};

std::string range_2n(int two_n, const std::string& rest) { return "2n=" + std::to_string(two_n) + ", " + rest; }

// Expected-value comparison for the pinned suite.
void expect(CheckReport& rep, const std::string& what, bool ok) {
  ++rep.pinned;
  if (!ok) rep.fail(what);
}

}  // namespace

void CheckReport::fail(std::string counterexample) {
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(counterexample));
}

CheckReport check_pinned() {
  CheckReport rep{"pinned", "worked examples", 0, 0, 0, {}};
  const Tableau t({{1, 1, 2, 3, 3}, {3, 3, 4, 8}, {6, 6, 8}, {8, 8, 9}, {9}}, 10);
  const Tableau berele_result({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8}, {9}}, 10);
  const Tableau bumped({{1, 1, 2, 2, 3}, {3, 3, 3, 8}, {4, 6, 8}, {6, 8, 9}, {8}, {9}}, 10);
  constexpr int o = PuncturedTableau::kHole;

  guarded(rep, "row insertion", [&] {
    const auto rec = row_insert(t, 2);
    expect(rep, "row insertion result", rec.result == bumped);
    expect(rep, "row insertion route", rec.route == std::vector<int>{4, 3, 1, 1, 1, 1});
    expect(rep, "row insertion letters", rec.letters == std::vector<int>{2, 3, 4, 6, 8, 9});
  });
  guarded(rep, "slide", [&] {
    const PuncturedTableau in({{1, 1, 2, 2, 3}, {o, 3, 3, 8}, {6, 6, 8}, {8, 8, 9}, {9}}, 10);
    const PuncturedTableau out({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8, o}, {9}}, 10);
    const auto res = slide(in, 2, 1);
    expect(rep, "slide result", res.tableau == out);
    expect(rep, "slide route", res.route == std::vector<int>{1, 3, 3, 3});
    expect(rep, "slide terminal row", res.terminal_row == 4);
  });
  guarded(rep, "rectification", [&] {
    const PuncturedTableau in({{1, 1, 2, 2, 3}, {o, 3, 3, 8}, {o, 6, 8}, {6, 8, 9}, {8}, {9}}, 10);
    expect(rep, "rectification result", rectify(in) == berele_result);
  });
  guarded(rep, "reverse slide", [&] {
    const PuncturedTableau in({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8, o}, {9}}, 10);
    const PuncturedTableau out({{o, 1, 2, 2, 3}, {1, 3, 3, 8}, {6, 6, 8}, {8, 8, 9}, {9}}, 10);
    expect(rep, "reverse slide result", reverse_slide(in, 4, 3) == out);
  });
  guarded(rep, "reverse rectification", [&] {
    const PuncturedTableau in({{1, 1, 2, 2, 3}, {3, 3, 8, 8}, {6, 6, 9}, {8, 8, o}, {9}, {o}}, 10);
    const PuncturedTableau out({{o, 1, 2, 2, 3}, {o, 3, 3, 8}, {1, 6, 8}, {6, 8, 9}, {8}, {9}}, 10);
    const auto res = reverse_rectify(in);
    expect(rep, "reverse rectification result", res == out);
    expect(rep, "reverse rectification skew shape",
           as_skew(res.shape()) == SkewPartition(Partition({5, 4, 3, 3, 1, 1}), Partition({1, 1})));
  });
  guarded(rep, "Berele insertion", [&] {
    const auto rec = berele_insert(t, 2);
    expect(rep, "Berele result", rec.result == berele_result);
    expect(rep, "Berele route", route_string(rec) == "(4,3;3,3,3)");
    expect(rep, "Berele terminal row", rec.terminal_row == TerminalRow{4, true});
    expect(rep, "Berele shape change", rec.change == BoxChange::removed(4));
  });
  guarded(rep, "rem/red", [&] {
    const auto rr = rem_red(Word{1, 3, 4, 6, 8, 9});
    expect(rep, "rem", rr.rem == Word{3, 4});
    expect(rep, "red", rr.red == Word{1, 6, 8, 9});
  });
  guarded(rep, "suc", [&] { expect(rep, "suc result", suc(bumped) == berele_result); });
  guarded(rep, "AII insertion", [&] {
    expect(rep, "AII insertion result", aii_insert(t, 2) == berele_result);
    expect(rep, "P of the bumped tableau", lr_map(bumped).p == berele_result);
  });
  guarded(rep, "punctured partition", [&] {
    const PuncturedPartition pp(Partition({5, 4, 3, 3, 1}), {{1, 2}, {1, 3}, {2, 4}, {3, 1}, {4, 1}, {4, 2}});
    expect(rep, "slidable holes",
           slidable_holes(pp) == std::vector<Cell>{{1, 2}, {1, 3}, {3, 1}, {4, 1}, {4, 2}});
    expect(rep, "reversely slidable holes",
           reversely_slidable_holes(pp) == std::vector<Cell>{{1, 2}, {2, 4}, {3, 1}, {4, 2}});
  });
  guarded(rep, "reading words", [&] {
    const PuncturedTableau pt({{2, o, o, 2, 4}, {3, 4, 4, o}, {o, 6, 8}, {o, o, 9}, {5}}, 9);
    expect(rep, "punctured tableau is semistandard", is_semistandard(pt));
    expect(rep, "row word", row_word(pt) == Word{5, 9, 6, 8, 3, 4, 4, 2, 2, 4});
    expect(rep, "column word", column_word(pt) == Word{5, 3, 2, 6, 4, 9, 8, 4, 2, 4});
  });
  guarded(rep, "addable and removable rows", [&] {
    const Partition lambda({5, 4, 3, 3, 1});
    expect(rep, "addable rows", addable_rows(lambda) == std::vector<int>{1, 2, 3, 5, 6});
    expect(rep, "removable rows", removable_rows(lambda) == std::vector<int>{1, 2, 4, 5});
  });
  return rep;
}

CheckReport check_coincidence(int two_n, int max_shape_size) {
  CheckReport rep{"coincidence", range_2n(two_n, "|nu|<=" + std::to_string(max_shape_size)), 0, 0, 0, {}};
  guarded(rep, "pinned example", [&] {
    const Tableau t({{1, 1, 2, 3, 3}, {3, 3, 4, 8}, {6, 6, 8}, {8, 8, 9}, {9}}, 10);
    expect(rep, "pinned AII = Berele", aii_insert(t, 2) == berele_insert(t, 2).result);
  });
  for (const Partition& nu : symplectic_shapes(two_n, max_shape_size)) {
    enumerate::for_each_spt(nu, two_n, [&](const Tableau& t) {
      for (int x = 1; x <= two_n; ++x) {
        ++rep.cases;
        guarded(rep, pair_case(t, x), [&] {
          const BereleRecord direct = berele_insert(t, x);
          const Tableau aii = aii_insert(t, x);
          if (aii != direct.result) rep.fail(pair_case(t, x) + ": AII " + tab(aii) + " vs Berele " + tab(direct.result));
          const BereleRecord sliding = berele_insert_by_sliding(t, x);
          if (sliding.result != direct.result || sliding.change != direct.change ||
              sliding.bump_route != direct.bump_route || sliding.slide_route != direct.slide_route)
            rep.fail(pair_case(t, x) + ": sliding form differs");
          const Tableau bumped = row_insert(t, x).result;
          if (is_symplectic(bumped)) return;
          int s = 1;
          while (bumped(s, 1) >= 2 * s - 1) ++s;
          if (s < 2) {
            rep.fail(pair_case(t, x) + ": first row already fails");
            return;
          }
          const Tableau rect = rectify(bumped.with_hole({s - 1, 1}).with_hole({s, 1}));
          if (rect != aii) rep.fail(pair_case(t, x) + ": first-column puncture gives " + tab(rect));
        });
      }
    });
  }
  return rep;
}

CheckReport check_berele_bijection(int two_n, int max_shape_size) {
  CheckReport rep{"berele-bijection", range_2n(two_n, "|nu|<=" + std::to_string(max_shape_size)), 0, 0, 0, {}};
  const int n = two_n / 2;
  SpTCounter count(two_n);
  for (const Partition& nu : symplectic_shapes(two_n, max_shape_size)) {
    std::set<Tableau> image;
    enumerate::for_each_spt(nu, two_n, [&](const Tableau& t) {
      for (int x = 1; x <= two_n; ++x) {
        ++rep.cases;
        guarded(rep, pair_case(t, x), [&] {
          const BereleRecord rec = berele_insert(t, x);
          const Partition xi = rec.result.outer_shape();
          const bool shape_ok = rec.change.is_added() ? is_addable(nu, rec.change.row) && xi == add_row(nu, rec.change.row)
                                                      : is_removable(nu, rec.change.row) && xi == remove_row(nu, rec.change.row);
          if (!shape_ok || xi.length() > n || !is_symplectic(rec.result) ||
              rec.terminal_row != TerminalRow{rec.change.row, !rec.change.is_added()})
            rep.fail(pair_case(t, x) + ": image " + tab(rec.result) + " outside the codomain");
          if (!image.insert(rec.result).second) rep.fail(pair_case(t, x) + ": image repeated " + tab(rec.result));
          const auto [back, y] = berele_inverse(rec.result, rec.change);
          if (back != t || y != x) rep.fail(pair_case(t, x) + ": inverse gives " + pair_case(back, y));
        });
      }
    });
    long long rhs = 0;
    for (int r : addable_rows(nu))
      if (r <= n) rhs += count(add_row(nu, r));
    for (int r : removable_rows(nu)) rhs += count(remove_row(nu, r));
    const long long lhs = count(nu) * two_n;
    if (lhs != rhs || static_cast<long long>(image.size()) != lhs)
      rep.fail("nu=" + to_string(nu) + ": |SpT(nu)|*2n=" + std::to_string(lhs) + " image=" +
               std::to_string(image.size()) + " codomain=" + std::to_string(rhs));
  }
  if (two_n == 2 && max_shape_size >= 1) {
    guarded(rep, "2n=2 table", [&] {
      const Tableau one({{1}}, 2), two({{2}}, 2);
      expect(rep, "[1]<-1", berele_insert(one, 1).result == Tableau({{1, 1}}, 2));
      expect(rep, "[1]<-2", berele_insert(one, 2).result == Tableau({{1, 2}}, 2));
      expect(rep, "[2]<-2", berele_insert(two, 2).result == Tableau({{2, 2}}, 2));
      expect(rep, "[2]<-1", berele_insert(two, 1).result == empty_tableau(2));
      expect(rep, "4 = 1+3+0", count(Partition({1})) * 2 == 4 && count(Partition()) == 1 &&
                                   count(Partition({2})) == 3 && count(Partition({1, 1})) == 0);
    });
  }
  if (two_n == 4 && max_shape_size >= 2) {
    expect(rep, "16 = 1+10+5", count(Partition({1})) * 4 == 16 && count(Partition()) == 1 &&
                                   count(Partition({2})) == 10 && count(Partition({1, 1})) == 5);
  }
  return rep;
}

CheckReport check_bumping_lemma(int two_n, int max_shape_size) {
  CheckReport rep{"bumping-lemma", range_2n(two_n, "|nu|<=" + std::to_string(max_shape_size)), 0, 0, 0, {}};
  for (const Partition& nu : symplectic_shapes(two_n, max_shape_size)) {
    enumerate::for_each_spt(nu, two_n, [&](const Tableau& t) {
      for (int x = 1; x <= two_n; ++x) {
        const BereleRecord first = berele_insert(t, x);
        for (int y = 1; y <= two_n; ++y) {
          ++rep.cases;
          const BereleRecord second = berele_insert(first.result, y);
          const TerminalRow r = first.terminal_row, r2 = second.terminal_row;
          const bool ok = x <= y ? r >= r2 : r < r2;
          if (!ok)
            rep.fail(pair_case(t, x) + " then " + std::to_string(y) + ": terminal rows " + to_string(r) + ", " +
                     to_string(r2));
        }
      }
    });
  }
  return rep;
}

CheckReport check_bumping_structure(int two_n, int max_shape_size) {
  CheckReport rep{"bumping-structure", range_2n(two_n, "|nu|<=" + std::to_string(max_shape_size)), 0, 0, 0, {}};
  for (const Partition& nu : symplectic_shapes(two_n, max_shape_size)) {
    enumerate::for_each_spt(nu, two_n, [&](const Tableau& t) {
      for (int x = 1; x <= two_n; ++x) {
        ++rep.cases;
        const RowInsertionRecord rec = row_insert(t, x);
        const auto& xs = rec.letters;
        const int len = static_cast<int>(xs.size());
        auto letter = [&](int i) { return xs[static_cast<std::size_t>(i - 1)]; };
        int s = 0;
        for (int i = 1; i <= len && s == 0; ++i)
          if (letter(i) < 2 * i - 1) s = i;
        if (s == 0) {
          if (!is_symplectic(rec.result)) rep.fail(pair_case(t, x) + ": letters fine but result not symplectic");
          continue;
        }
        bool ok = !is_symplectic(rec.result) && s >= 2 && letter(s - 1) == 2 * s - 3 && letter(s) == 2 * s - 2;
        for (int i = s + 1; ok && i <= len; ++i) ok = letter(i) == t(i - 1, 1);
        if (!ok) rep.fail(pair_case(t, x) + ": letters " + to_string(Word(xs)) + " with s=" + std::to_string(s));
      }
    });
  }
  return rep;
}

CheckReport check_rs(int two_n, int max_length, int max_nu_size) {
  CheckReport rep{"rs",
                  range_2n(two_n, "|nu|<=" + std::to_string(max_nu_size) + ", N<=" + std::to_string(max_length)),
                  0, 0, 0, {}};
  const int n = two_n / 2;
  SpTCounter count(two_n);
  for (const Partition& nu : symplectic_shapes(two_n, max_nu_size)) {
    for (int len = 0; len <= max_length; ++len) {
      std::set<std::pair<Tableau, std::vector<Partition>>> image;
      long long domain = 0;
      enumerate::for_each_spt(nu, two_n, [&](const Tableau& t) {
        enumerate::for_each_word(two_n, len, enumerate::WordMode::All, [&](const Word& w) {
          ++rep.cases;
          ++domain;
          const std::string what = "T=" + tab(t) + " w=" + to_string(w);
          guarded(rep, what, [&] {
            const RSResult res = rs(t, w);
            if (!is_valid(res.q) || res.q.rank != n || res.q.size() != len || res.q.chain.front() != nu ||
                res.q.chain.back() != res.p.outer_shape() || !is_symplectic(res.p))
              rep.fail(what + ": image outside OT x SpT");
            if (!image.insert({res.p, res.q.chain}).second) rep.fail(what + ": image repeated");
            const auto [back, v] = rs_inverse(res.p, res.q);
            if (back != t || v != w) rep.fail(what + ": inverse gives T=" + tab(back) + " w=" + to_string(v));
          });
        });
      });
      std::map<Partition, long long> ot_by_end;
      enumerate::for_each_ot(n, len, nu, std::nullopt,
                             [&](const OscillatingTableau& q) { ++ot_by_end[q.chain.back()]; });
      long long codomain = 0;
      for (const auto& [xi, m] : ot_by_end) codomain += count(xi) * m;
      if (codomain != domain || static_cast<long long>(image.size()) != domain)
        rep.fail("nu=" + to_string(nu) + " N=" + std::to_string(len) + ": domain " + std::to_string(domain) +
                 ", image " + std::to_string(image.size()) + ", codomain " + std::to_string(codomain));
      if (two_n == 4 && nu == Partition() && len == 2)
        expect(rep, "16 = 10+5+1", domain == 16 && codomain == 16 && ot_by_end[Partition({2})] == 1 &&
                                       ot_by_end[Partition({1, 1})] == 1 && ot_by_end[Partition()] == 1 &&
                                       count(Partition({2})) == 10 && count(Partition({1, 1})) == 5);
    }
  }
  return rep;
}

namespace {

// Shared body of the RSK and dual RSK checks.
template <class Result, class Chain>
CheckReport check_pieri_correspondence(const std::string& name, int two_n, int max_total, int max_nu_size,
                                       bool horizontal) {
  CheckReport rep{name,
                  range_2n(two_n, "|nu|<=" + std::to_string(max_nu_size) + ", content total<=" +
                                      std::to_string(max_total)),
                  0, 0, 0, {}};
  const int n = two_n / 2;
  const auto mode = horizontal ? enumerate::WordMode::WeaklyIncreasing : enumerate::WordMode::StrictlyDecreasing;
  SpTCounter count(two_n);
  std::vector<std::vector<int>> contents;
  for (int k = 0; k <= max_total; ++k)
    for (auto& c : enumerate::weak_compositions(k, max_total, max_total)) contents.push_back(std::move(c));

  for (const Partition& nu : symplectic_shapes(two_n, max_nu_size)) {
    for (const auto& wanted : contents) {
      std::set<std::pair<Tableau, std::vector<Partition>>> image;
      long long domain = 0;
      std::vector<Word> ws(wanted.size());
      std::function<void(const Tableau&, std::size_t)> rec = [&](const Tableau& t, std::size_t i) {
        if (i < wanted.size()) {
          enumerate::for_each_word(two_n, wanted[i], mode, [&](const Word& w) {
            ws[i] = w;
            rec(t, i + 1);
          });
          return;
        }
        ++rep.cases;
        ++domain;
        const std::string what = "T=" + tab(t) + " words=" + words_case(ws);
        guarded(rep, what, [&] {
          Tableau cur = t;
          for (const Word& w : ws) {
            const PieriResult step = horizontal ? pieri_split(cur, w) : dual_pieri_split(cur, w);
            for (std::size_t j = 1; j < step.terminal_rows.size(); ++j) {
              const auto& a = step.terminal_rows[j - 1];
              const auto& b = step.terminal_rows[j];
              if (horizontal ? !(a >= b) : !(a < b)) rep.fail(what + ": terminal rows out of order");
            }
            cur = step.p;
          }
          const Result res = [&] {
            if constexpr (std::is_same_v<Result, RSKResult>) return rsk(t, ws);
            else return drsk(t, ws);
          }();
          if (res.p != cur) rep.fail(what + ": fold differs from stepwise insertion");
          if (!is_valid(res.q) || res.q.rank != n || symtab::content(res.q) != wanted || res.q.chain.front() != nu ||
              res.q.chain.back() != res.p.outer_shape() || !is_symplectic(res.p))
            rep.fail(what + ": image outside the codomain");
          if (!image.insert({res.p, res.q.chain}).second) rep.fail(what + ": image repeated");
          const auto [back, vs] = [&] {
            if constexpr (std::is_same_v<Result, RSKResult>) return rsk_inverse(res.p, res.q);
            else return drsk_inverse(res.p, res.q);
          }();
          if (back != t || vs != ws) rep.fail(what + ": inverse gives T=" + tab(back) + " words=" + words_case(vs));
        });
      };
      enumerate::for_each_spt(nu, two_n, [&](const Tableau& t) { rec(t, 0); });

      std::map<Partition, long long> by_end;
      const auto tally = [&](const Chain& u) { ++by_end[u.chain.back()]; };
      if constexpr (std::is_same_v<Chain, ColumnStrictOT>)
        enumerate::for_each_csot(n, nu, std::nullopt, wanted, tally);
      else
        enumerate::for_each_rsot(n, nu, std::nullopt, wanted, tally);
      long long codomain = 0;
      for (const auto& [xi, m] : by_end) codomain += count(xi) * m;
      if (codomain != domain || static_cast<long long>(image.size()) != domain)
        rep.fail("nu=" + to_string(nu) + " content=" + to_string(Word(wanted)) + ": domain " +
                 std::to_string(domain) + ", image " + std::to_string(image.size()) + ", codomain " +
                 std::to_string(codomain));
    }
  }
  return rep;
}

}  // namespace

CheckReport check_rsk(int two_n, int max_total_content, int max_nu_size) {
  return check_pieri_correspondence<RSKResult, ColumnStrictOT>("rsk", two_n, max_total_content, max_nu_size, true);
}

CheckReport check_drsk(int two_n, int max_total_content, int max_nu_size) {
  return check_pieri_correspondence<DualRSKResult, RowStrictOT>("drsk", two_n, max_total_content, max_nu_size,
                                                                 false);
}

CheckReport check_lr(int two_n, int max_shape_size) {
  CheckReport rep{"lr", range_2n(two_n, "|lambda|<=" + std::to_string(max_shape_size)), 0, 0, 0, {}};
  const int n = two_n / 2;
  SpTCounter count(two_n);
  for (const Partition& lambda : enumerate::partitions(max_shape_size, two_n)) {
    std::set<std::pair<Tableau, PuncturedTableau>> image;
    std::map<Partition, std::set<Tableau>> ps;
    std::map<Partition, std::set<PuncturedTableau>> qs;
    std::map<Partition, long long> pairs;
    enumerate::for_each_sst(lambda, two_n, [&](const Tableau& t) {
      ++rep.cases;
      const std::string what = "T=" + tab(t);
      guarded(rep, what, [&] {
        if ((suc(t) == t) != is_symplectic(t)) rep.fail(what + ": suc fixed point disagrees with symplecticity");
        const LRResult res = lr_map(t);
        const Partition nu = res.p.outer_shape();
        if (!is_symplectic(res.p) || nu.length() > n || !contains(nu, lambda) || res.q.outer_shape() != lambda ||
            res.q.holes() != nu.cells())
          rep.fail(what + ": (P,Q) outside the codomain");
        if (!image.insert({res.p, res.q}).second) rep.fail(what + ": image repeated");
        ps[nu].insert(res.p);
        qs[nu].insert(res.q);
        ++pairs[nu];
      });
    });
    for (const auto& [nu, p_set] : ps) {
      const long long expected = count(nu) * static_cast<long long>(qs[nu].size());
      if (static_cast<long long>(p_set.size()) != count(nu) || pairs[nu] != expected)
        rep.fail("lambda=" + to_string(lambda) + " nu=" + to_string(nu) + ": image is not SpT x Rec");
    }
  }
  return rep;
}

CheckReport check_knuth_sliding(int n, int max_shape_size, int max_holes) {
  CheckReport rep{"knuth-sliding",
                  "alphabet [" + std::to_string(n) + "], |lambda|<=" + std::to_string(max_shape_size) +
                      ", holes<=" + std::to_string(max_holes),
                  0, 0, 0, {}};
  for (const Partition& lambda : enumerate::partitions(max_shape_size, max_shape_size)) {
    for (const PuncturedPartition& pp : enumerate::punctured_shapes(lambda, max_holes)) {
      const bool first_column_holes = [&] {
        for (const Cell& h : pp.holes())
          if (h.col != 1) return false;
        return true;
      }();
      enumerate::for_each_sst(pp, n, [&](const PuncturedTableau& t) {
        ++rep.cases;
        const std::string what = "T=" + tab(t);
        guarded(rep, what, [&] {
          const Tableau p = insertion_tableau(row_word(t), n);
          const auto slidable = slidable_holes(pp);
          if (!slidable.empty()) {
            const Cell h = slidable.back();
            const SlideResult sr = slide(t, h.row, h.col);
            if (insertion_tableau(row_word(sr.tableau), n) != p) rep.fail(what + ": slide changed the Knuth class");
            for (std::size_t i = 1; i < sr.route.size(); ++i)
              if (sr.route[i - 1] > sr.route[i]) rep.fail(what + ": sliding route decreases");
          }
          const auto reverse = reversely_slidable_holes(pp);
          if (!reverse.empty()) {
            const Cell h = reverse.front();
            if (insertion_tableau(row_word(reverse_slide(t, h.row, h.col)), n) != p)
              rep.fail(what + ": reverse slide changed the Knuth class");
          }
          const Tableau rect = rectify(t);
          if (rect != p) rep.fail(what + ": rectification " + tab(rect) + " vs insertion " + tab(p));
          const PuncturedTableau skew = reverse_rectify(t);
          if (!is_semistandard(skew))
            rep.fail(what + ": reverse rectification " + tab(skew) + " is not semistandard");
          else if (rectify(skew) != rect)
            rep.fail(what + ": rect(revRect(T)) differs");
          if (first_column_holes && insertion_tableau(column_word(t), n) != rect)
            rep.fail(what + ": column word not equivalent to the rectification");
        });
      });
    }
  }
  return rep;
}

CheckReport check_schensted(int n, int max_shape_size) {
  CheckReport rep{"schensted",
                  "alphabet [" + std::to_string(n) + "], |lambda|<=" + std::to_string(max_shape_size), 0, 0, 0, {}};
  std::map<Partition, long long> sizes;
  auto count = [&](const Partition& lambda) {
    auto it = sizes.find(lambda);
    if (it != sizes.end()) return it->second;
    long long c = 0;
    enumerate::for_each_sst(lambda, n, [&](const Tableau&) { ++c; });
    return sizes[lambda] = c;
  };
  for (const Partition& lambda : enumerate::partitions(max_shape_size, n)) {
    std::set<Tableau> image;
    enumerate::for_each_sst(lambda, n, [&](const Tableau& t) {
      for (int x = 1; x <= n; ++x) {
        ++rep.cases;
        guarded(rep, pair_case(t, x), [&] {
          const RowInsertionRecord rec = row_insert(t, x);
          if (rec.result.outer_shape() != add_row(lambda, rec.final_row) || !is_semistandard(rec.result))
            rep.fail(pair_case(t, x) + ": bad insertion shape");
          image.insert(rec.result);
          const auto [back, y] = row_insert_inverse(rec.result, rec.final_row);
          if (back != t || y != x) rep.fail(pair_case(t, x) + ": inverse gives " + pair_case(back, y));
        });
      }
    });
    long long codomain = 0;
    for (int r : addable_rows(lambda))
      if (r <= n) codomain += count(add_row(lambda, r));
    if (static_cast<long long>(image.size()) != count(lambda) * n || codomain != count(lambda) * n)
      rep.fail("lambda=" + to_string(lambda) + ": insertion is not a bijection onto the added shapes");
  }
  return rep;
}

CheckReport check_round_trips(int n, int max_shape_size) {
  CheckReport rep{"round-trip",
                  "alphabet [" + std::to_string(n) + "], |lambda|<=" + std::to_string(max_shape_size) + ", holes<=2",
                  0, 0, 0, {}};
  for (const Partition& lambda : enumerate::partitions(max_shape_size, max_shape_size)) {
    ++rep.cases;
    if (parse_partition(to_string(lambda)) != lambda) rep.fail("partition " + to_string(lambda));
    for (const PuncturedPartition& pp : enumerate::punctured_shapes(lambda, 2)) {
      enumerate::for_each_sst(pp, n, [&](const PuncturedTableau& t) {
        ++rep.cases;
        guarded(rep, tab(t), [&] {
          if (parse_tableau(render(t), n) != t) rep.fail("text " + tab(t));
          if (parse_tableau_json(render_json(t), n) != t) rep.fail("json " + tab(t));
        });
      });
    }
  }
  for (int len = 0; len <= max_shape_size; ++len) {
    enumerate::for_each_word(n, len, enumerate::WordMode::All, [&](const Word& w) {
      ++rep.cases;
      guarded(rep, to_string(w), [&] {
        if (parse_word(to_string(w)) != w) rep.fail("word " + to_string(w));
      });
    });
    enumerate::for_each_ot((n + 1) / 2, len, Partition(), std::nullopt, [&](const OscillatingTableau& q) {
      ++rep.cases;
      guarded(rep, to_string(q.chain), [&] {
        if (parse_chain(to_string(q.chain)) != q.chain) rep.fail("chain " + to_string(q.chain));
      });
    });
  }
  return rep;
}

const std::vector<NamedCheck>& registry() {
  auto per_two_n = [](auto check) {
    return [check](const Bounds& b) {
      std::vector<CheckReport> out;
      for (int two_n = 2; two_n <= b.max_two_n; two_n += 2) out.push_back(check(two_n, b));
      return out;
    };
  };
  static const std::vector<NamedCheck> checks{
      {"pinned", [](const Bounds&) { return std::vector<CheckReport>{check_pinned()}; }},
      {"coincidence", per_two_n([](int t, const Bounds& b) { return check_coincidence(t, b.shape_size); })},
      {"berele-bijection", per_two_n([](int t, const Bounds& b) { return check_berele_bijection(t, b.shape_size); })},
      {"bumping-lemma", per_two_n([](int t, const Bounds& b) { return check_bumping_lemma(t, b.bumping_size); })},
      {"bumping-structure",
       per_two_n([](int t, const Bounds& b) { return check_bumping_structure(t, b.shape_size); })},
      {"rs", [](const Bounds& b) {
         return std::vector<CheckReport>{check_rs(b.max_two_n, b.rs_length, b.rs_nu_size)};
       }},
      {"rsk", [](const Bounds& b) { return std::vector<CheckReport>{check_rsk(b.max_two_n, b.content)}; }},
      {"drsk", [](const Bounds& b) { return std::vector<CheckReport>{check_drsk(b.max_two_n, b.content)}; }},
      {"lr", [](const Bounds& b) { return std::vector<CheckReport>{check_lr(b.max_two_n, b.lr_size)}; }},
      {"knuth-sliding", [](const Bounds& b) {
         return std::vector<CheckReport>{check_knuth_sliding(b.knuth_alphabet, b.knuth_size, b.holes)};
       }},
      {"schensted", [](const Bounds& b) {
         return std::vector<CheckReport>{check_schensted(b.knuth_alphabet, b.shape_size)};
       }},
      {"round-trip", [](const Bounds& b) {
         return std::vector<CheckReport>{check_round_trips(b.knuth_alphabet, b.shape_size)};
       }},
  };
  return checks;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.range << "): " << r.cases << " cases";
  if (r.pinned) out << ", " << r.pinned << " pinned";
  if (!r.passed()) out << ", " << r.failure_count << " failures";
  out << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  return out.str();
}

std::string to_json(const CheckReport& r) {
  nlohmann::json j{{"name", r.name},       {"range", r.range},
                   {"cases", r.cases},     {"pinned", r.pinned},
                   {"passed", r.passed()}, {"failure_count", r.failure_count},
                   {"failures", r.failures}};
  return j.dump();
}

}  // namespace symtab::verify
