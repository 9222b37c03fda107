// Command-line front end for the symtab library.
#include <algorithm>
#include <climits>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symtab/berele.hpp"
#include "symtab/correspondences.hpp"
#include "symtab/enumeration.hpp"
#include "symtab/error.hpp"
#include "symtab/jeu_de_taquin.hpp"
#include "symtab/schensted.hpp"
#include "symtab/verify.hpp"

using nlohmann::json;
using namespace symtab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kParseBound = INT_MAX;

// One unit of work, filled either from command-line options or from one
// line of --batch input.
struct Request {
  std::optional<PuncturedTableau> tableau;
  std::optional<int> letter;
  std::optional<Cell> hole;
  std::optional<Word> word;
  std::optional<std::vector<Word>> words;
  std::optional<std::vector<Partition>> chain;
  std::optional<std::string> invert;
};

struct Output {
  json data;
  std::string text;
};

struct Options {
  bool as_json = false;
  bool trace = false;
  bool batch = false;
  int alphabet = 0;
  std::string input;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_all(f);
}

PuncturedTableau parse_any_tableau(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_tableau_json(text, kParseBound);
  std::string trimmed = text;
  while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' || trimmed.back() == ' '))
    trimmed.pop_back();
  return parse_tableau(trimmed, kParseBound);
}

std::vector<Word> parse_words(const std::string& text) {
  std::vector<Word> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(parse_word(part));
  return out;
}

Cell parse_cell(const std::string& text) {
  const Word w = parse_word(text);
  if (w.size() != 2) throw ParseError(1, 1, "expected a cell r,c");
  return {w[0], w[1]};
}

// Fixes the alphabet: the explicit --alphabet value, or the largest letter
// seen (rounded up to an even number for the symplectic commands).
int choose_bound(const Request& req, const Options& opt, bool symplectic) {
  if (opt.alphabet > 0) return opt.alphabet;
  int m = 1;
  if (req.tableau) m = std::max(m, max_entry(*req.tableau));
  if (req.letter) m = std::max(m, *req.letter);
  if (req.word)
    for (int x : *req.word) m = std::max(m, x);
  if (req.words)
    for (const Word& w : *req.words)
      for (int x : w) m = std::max(m, x);
  if (req.chain)
    for (const Partition& p : *req.chain) m = std::max(m, symplectic ? 2 * p.length() : p.length());
  if (symplectic && m % 2 == 1) ++m;
  return m;
}

PuncturedTableau bounded(const Request& req, const Options& opt, bool symplectic) {
  const int bound = choose_bound(req, opt, symplectic);
  return req.tableau ? req.tableau->with_bound(bound) : PuncturedTableau({}, bound);
}

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Error(ErrorKind::ParseError, std::string("missing ") + what);
  return *v;
}

std::string show(const PuncturedTableau& t) { return t.row_count() == 0 ? "(empty)" : render(t); }

json tableau_json(const PuncturedTableau& t) { return json::parse(render_json(t)); }

json terminal_json(const TerminalRow& r) { return {{"row", r.row}, {"barred", r.barred}}; }

json chain_json(const std::vector<Partition>& chain) {
  json out = json::array();
  for (const Partition& p : chain) out.push_back(p.parts());
  return out;
}

json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(w.letters());
  return out;
}

std::string words_text(const std::vector<Word>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ";" : "") + to_string(ws[i]);
  return out;
}

std::string join_ints(const std::vector<int>& v) { return to_string(Word(v)); }

TerminalRow parse_terminal(const std::string& text) {
  const bool barred = text.rfind("bar", 0) == 0;
  const std::string digits = barred ? text.substr(3) : text;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw ParseError(1, 1, "expected a row such as 4 or bar4");
  return {std::stoi(digits), barred};
}

using Handler = std::function<Output(const Request&, const Options&)>;

Output cmd_insert(const Request& req, const Options& opt) {
  const Tableau t = bounded(req, opt, false);
  Output out;
  if (req.invert) {
    const int row = parse_terminal(*req.invert).row;
    const auto [prev, x] = row_insert_inverse(t, row);
    out.data = {{"tableau", tableau_json(prev)}, {"letter", x}};
    out.text = show(prev) + "\nletter: " + std::to_string(x) + "\n";
    return out;
  }
  const RowInsertionRecord rec = row_insert(t, need(req.letter, "letter"));
  out.data = {{"result", tableau_json(rec.result)}};
  out.text = show(rec.result) + "\n";
  if (opt.trace) {
    out.data["route"] = rec.route;
    out.data["letters"] = rec.letters;
    out.data["final_row"] = rec.final_row;
    out.text += "route: " + join_ints(rec.route) + "\nletters: " + join_ints(rec.letters) + "\n";
  }
  return out;
}

Output cmd_berele(const Request& req, const Options& opt) {
  const Tableau t = bounded(req, opt, true);
  Output out;
  if (req.invert) {
    const TerminalRow r = parse_terminal(*req.invert);
    const auto [prev, x] = berele_inverse(t, r.barred ? BoxChange::removed(r.row) : BoxChange::added(r.row));
    out.data = {{"tableau", tableau_json(prev)}, {"letter", x}};
    out.text = show(prev) + "\nletter: " + std::to_string(x) + "\n";
    return out;
  }
  const BereleRecord rec = berele_insert(t, need(req.letter, "letter"));
  out.data = {{"result", tableau_json(rec.result)}};
  out.text = show(rec.result) + "\n";
  if (opt.trace) {
    out.data["route"] = route_string(rec);
    out.data["terminal_row"] = terminal_json(rec.terminal_row);
    out.data["letters"] = rec.letters;
    out.text += "route: " + route_string(rec) + "\nterminal row: " + to_string(rec.terminal_row) +
                "\nletters: " + join_ints(rec.letters) + "\n";
  }
  return out;
}

Output single_tableau(const Tableau& t) {
  return {{{"result", tableau_json(t)}}, show(t) + "\n"};
}

Output cmd_aii(const Request& req, const Options& opt) {
  return single_tableau(aii_insert(bounded(req, opt, true), need(req.letter, "letter")));
}

Output cmd_slide(const Request& req, const Options& opt) {
  const PuncturedTableau t = bounded(req, opt, false);
  const Cell h = need(req.hole, "hole");
  if (req.invert) return single_tableau(reverse_slide(t, h.row, h.col));
  const SlideResult res = slide(t, h.row, h.col);
  Output out = single_tableau(res.tableau);
  if (opt.trace) {
    out.data["route"] = res.route;
    out.data["terminal_row"] = res.terminal_row;
    out.text += "route: " + join_ints(res.route) + "\nterminal row: " + std::to_string(res.terminal_row) + "\n";
  }
  return out;
}

Output cmd_rectify(const Request& req, const Options& opt) { return single_tableau(rectify(bounded(req, opt, false))); }

Output cmd_revrect(const Request& req, const Options& opt) {
  const PuncturedTableau res = reverse_rectify(bounded(req, opt, false));
  Output out = single_tableau(res);
  const SkewPartition skew = as_skew(res.shape());
  out.data["shape"] = to_string(skew);
  out.text += "shape: " + to_string(skew) + "\n";
  return out;
}

Output cmd_suc(const Request& req, const Options& opt) { return single_tableau(suc(bounded(req, opt, false))); }

Output cmd_lr(const Request& req, const Options& opt) {
  const LRResult res = lr_map(bounded(req, opt, false));
  Output out;
  out.data = {{"p", tableau_json(res.p)}, {"q", tableau_json(res.q)}, {"iterations", res.iterations}};
  out.text = "P:\n" + show(res.p) + "\nQ:\n" + show(res.q) + "\n";
  return out;
}

Output cmd_rs(const Request& req, const Options& opt) {
  const Tableau t = bounded(req, opt, true);
  Output out;
  if (req.invert) {
    const auto [prev, w] = rs_inverse(t, OscillatingTableau{need(req.chain, "chain"), t.bound() / 2});
    out.data = {{"tableau", tableau_json(prev)}, {"word", w.letters()}};
    out.text = show(prev) + "\nword: " + to_string(w) + "\n";
    return out;
  }
  const RSResult res = rs(t, need(req.word, "word"));
  out.data = {{"p", tableau_json(res.p)}, {"q", chain_json(res.q.chain)}};
  out.text = "P:\n" + show(res.p) + "\nQ: " + to_string(res.q.chain) + "\n";
  return out;
}

template <class Chain, class Forward, class Inverse>
Output pieri_command(const Request& req, const Options& opt, Forward forward, Inverse inverse) {
  const Tableau t = bounded(req, opt, true);
  Output out;
  if (req.invert) {
    const auto [prev, ws] = inverse(t, Chain{need(req.chain, "chain"), t.bound() / 2});
    out.data = {{"tableau", tableau_json(prev)}, {"words", words_json(ws)}};
    out.text = show(prev) + "\nwords: " + words_text(ws) + "\n";
    return out;
  }
  const auto res = forward(t, need(req.words, "words"));
  out.data = {{"p", tableau_json(res.p)}, {"q", chain_json(res.q.chain)}, {"content", content(res.q)}};
  out.text = "P:\n" + show(res.p) + "\nQ: " + to_string(res.q.chain) + "\ncontent: " + join_ints(content(res.q)) + "\n";
  return out;
}

Output cmd_rsk(const Request& req, const Options& opt) {
  return pieri_command<ColumnStrictOT>(req, opt, rsk, rsk_inverse);
}

Output cmd_drsk(const Request& req, const Options& opt) {
  return pieri_command<RowStrictOT>(req, opt, drsk, drsk_inverse);
}

Request request_from_json(const std::string& line) {
  const json j = json::parse(line);
  Request req;
  if (j.contains("tableau")) req.tableau = parse_tableau_json(j["tableau"].dump(), kParseBound);
  if (j.contains("letter")) req.letter = j["letter"].get<int>();
  if (j.contains("hole")) {
    const auto h = j["hole"].get<std::vector<int>>();
    if (h.size() != 2) throw ParseError(1, 1, "hole must be [r, c]");
    req.hole = Cell{h[0], h[1]};
  }
  if (j.contains("word")) req.word = Word(j["word"].get<std::vector<int>>());
  if (j.contains("words")) {
    std::vector<Word> ws;
    for (const auto& w : j["words"]) ws.emplace_back(w.get<std::vector<int>>());
    req.words = ws;
  }
  if (j.contains("chain")) req.chain = parse_chain(j["chain"].dump());
  if (j.contains("invert")) req.invert = j["invert"].is_string() ? j["invert"].get<std::string>() : j["invert"].dump();
  return req;
}

void emit(const Output& out, const Options& opt) {
  if (opt.as_json || opt.batch)
    std::cout << out.data.dump() << "\n";
  else
    std::cout << out.text;
}

int run_handler(const Handler& handler, Request req, const Options& opt, bool reads_tableau) {
  if (opt.batch) {
    const std::string all = read_input(opt.input);
    std::stringstream lines(all);
    std::string line;
    int status = kExitOk;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        emit(handler(request_from_json(line), opt), opt);
      } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        status = kExitInput;
      }
    }
    return status;
  }
  if (reads_tableau) req.tableau = parse_any_tableau(read_input(opt.input));
  emit(handler(req, opt), opt);
  return kExitOk;
}

int run_enum(const std::string& family, const std::optional<Partition>& shape, int size, int length, int alphabet,
             const std::string& mode, const std::optional<Partition>& end, bool list, const Options& opt) {
  std::vector<std::string> items;
  json jitems = json::array();
  long long count = 0;
  auto take = [&](const std::string& text, const json& j) {
    ++count;
    if (list) {
      items.push_back(text);
      jitems.push_back(j);
    }
  };
  const Partition start = shape.value_or(Partition());
  if (family == "partitions") {
    enumerate::for_each_partition(size, length, [&](const Partition& p) { take(to_string(p), p.parts()); });
  } else if (family == "sst" || family == "spt") {
    if (!shape) throw Error(ErrorKind::ParseError, "missing --shape");
    auto visit = [&](const Tableau& t) { take(show(t), tableau_json(t)); };
    if (family == "sst")
      enumerate::for_each_sst(*shape, alphabet, visit);
    else
      enumerate::for_each_spt(*shape, alphabet, visit);
  } else if (family == "words") {
    const auto m = mode == "weak" ? enumerate::WordMode::WeaklyIncreasing
                   : mode == "strict-decreasing" ? enumerate::WordMode::StrictlyDecreasing
                                                 : enumerate::WordMode::All;
    enumerate::for_each_word(alphabet, length, m, [&](const Word& w) { take(to_string(w), w.letters()); });
  } else if (family == "ot") {
    enumerate::for_each_ot(alphabet / 2, length, start, end,
                           [&](const OscillatingTableau& q) { take(to_string(q.chain), chain_json(q.chain)); });
  } else {
    throw Error(ErrorKind::ParseError, "unknown family " + family);
  }
  if (opt.as_json) {
    json out{{"count", count}};
    if (list) out["items"] = jitems;
    std::cout << out.dump() << "\n";
  } else {
    if (list)
      for (const auto& s : items) std::cout << s << (family == "sst" || family == "spt" ? "\n\n" : "\n");
    std::cout << (list ? "count: " : "") << count << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& name, const std::vector<std::string>& bound_args, const Options& opt) {
  verify::Bounds b;
  const std::vector<std::pair<std::string, int*>> keys{
      {"two_n", &b.max_two_n},     {"shape_size", &b.shape_size}, {"bumping_size", &b.bumping_size},
      {"rs_length", &b.rs_length}, {"rs_nu_size", &b.rs_nu_size}, {"content", &b.content},
      {"lr_size", &b.lr_size},     {"alphabet", &b.knuth_alphabet}, {"knuth_size", &b.knuth_size},
      {"holes", &b.holes}};
  for (const std::string& arg : bound_args) {
    const auto eq = arg.find('=');
    const std::string key = arg.substr(0, eq);
    auto it = std::find_if(keys.begin(), keys.end(), [&](const auto& k) { return k.first == key; });
    if (eq == std::string::npos || it == keys.end()) throw Error(ErrorKind::ParseError, "bad --bound " + arg);
    *it->second = std::stoi(arg.substr(eq + 1));
  }
  bool found = false, ok = true;
  for (const auto& check : verify::registry()) {
    if (name != "all" && name != check.name) continue;
    found = true;
    for (const auto& rep : check.run(b)) {
      ok = ok && rep.passed();
      std::cout << (opt.as_json ? verify::to_json(rep) + "\n" : verify::to_text(rep));
    }
  }
  if (!found) throw Error(ErrorKind::ParseError, "unknown check " + name);
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic tableaux: Berele insertion, jeu de taquin and RS-type correspondences"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "JSON output");
  app.fallthrough();

  Request req;
  int letter = 0;
  std::string hole, word, words, chain, invert;

  struct Sub {
    const char* name;
    const char* help;
    Handler handler;
    bool letter, hole, word, words, chain, invert;
  };
  const std::vector<Sub> subs{
      {"insert", "Schensted row insertion", cmd_insert, true, false, false, false, false, true},
      {"berele", "Berele row insertion", cmd_berele, true, false, false, false, false, true},
      {"aii", "row insertion of type AII", cmd_aii, true, false, false, false, false, false},
      {"slide", "jeu de taquin slide (reverse slide with --invert)", cmd_slide, false, true, false, false, false, true},
      {"rectify", "rectification", cmd_rectify, false, false, false, false, false, false},
      {"revrect", "reverse rectification", cmd_revrect, false, false, false, false, false, false},
      {"suc", "successor map", cmd_suc, false, false, false, false, false, false},
      {"lr", "Littlewood-Richardson map of type AII", cmd_lr, false, false, false, false, false, false},
      {"rs", "Berele RS correspondence", cmd_rs, false, false, true, false, true, true},
      {"rsk", "RSK correspondence of type AII", cmd_rsk, false, false, false, true, true, true},
      {"drsk", "dual RSK correspondence of type AII", cmd_drsk, false, false, false, true, true, true},
  };
  struct Parsed {
    CLI::App* app;
    const Sub* sub;
    CLI::Option *letter = nullptr, *word = nullptr, *words = nullptr, *invert = nullptr;
  };
  std::vector<Parsed> tableau_cmds;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", opt.input, "tableau file (default: standard input)");
    sub->add_option("--alphabet", opt.alphabet, "alphabet bound n (entries in [1,n])");
    sub->add_flag("--batch", opt.batch, "read newline-delimited JSON requests");
    sub->add_flag("--trace,--route", opt.trace, "print routes, letters and terminal rows");
    Parsed p{sub, &s};
    if (s.letter) p.letter = sub->add_option("-x,--letter", letter, "letter to insert");
    if (s.hole) sub->add_option("--hole", hole, "hole position r,c");
    if (s.word) p.word = sub->add_option("--word", word, "word such as 1,2,2");
    if (s.words) p.words = sub->add_option("--words", words, "words separated by ';'");
    if (s.chain) sub->add_option("--chain", chain, "recording chain such as [(),(1)]");
    if (s.invert) {
      const char* what = std::string(s.name) == "slide" ? "reverse slide instead" : "invert; takes a row such as 4 or bar4";
      if (s.chain)
        p.invert = sub->add_flag("--invert")->description("invert using --chain");
      else if (std::string(s.name) == "slide")
        p.invert = sub->add_flag("--invert")->description(what);
      else
        p.invert = sub->add_option("--invert", invert, what);
    }
    tableau_cmds.push_back(p);
  }

  CLI::App* en = app.add_subcommand("enum", "enumerate a finite family");
  std::string family = "partitions", shape_text, mode = "all", end_text;
  int size = 4, length = 4, alphabet = 4;
  bool list = false, count_only = false;
  en->add_option("family", family, "partitions | sst | spt | words | ot");
  en->add_option("--shape", shape_text, "shape (start shape for ot)");
  en->add_option("--end", end_text, "final shape for ot");
  en->add_option("--size", size, "maximal size for partitions");
  en->add_option("--length", length, "maximal length / word length / number of steps");
  en->add_option("--alphabet", alphabet, "alphabet bound (2n for spt and ot)");
  en->add_option("--mode", mode, "words: all | weak | strict-decreasing");
  en->add_flag("--list", list, "print every member");
  en->add_flag("--count", count_only, "print only the count (default)");

  CLI::App* ver = app.add_subcommand("verify", "run exhaustive checks");
  std::string check = "all";
  std::vector<std::string> bound_args;
  ver->add_option("check", check, "check name or all");
  ver->add_option("--bound", bound_args, "override a bound, e.g. two_n=4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (en->parsed()) {
      std::optional<Partition> shape, end;
      if (!shape_text.empty()) shape = parse_partition(shape_text);
      if (!end_text.empty()) end = parse_partition(end_text);
      return run_enum(family, shape, size, length, alphabet, mode, end, list && !count_only, opt);
    }
    if (ver->parsed()) return run_verify(check, bound_args, opt);
    for (const Parsed& p : tableau_cmds) {
      if (!p.app->parsed()) continue;
      if (p.letter && p.letter->count()) req.letter = letter;
      if (!hole.empty()) req.hole = parse_cell(hole);
      if (p.word && p.word->count()) req.word = parse_word(word);
      if (p.words && p.words->count()) req.words = parse_words(words);
      if (!chain.empty()) req.chain = parse_chain(chain);
      if (p.invert && p.invert->count()) req.invert = invert.empty() ? "yes" : invert;
      return run_handler(p.sub->handler, req, opt, true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
