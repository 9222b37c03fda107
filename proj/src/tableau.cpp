#include "symtab/tableau.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "symtab/error.hpp"

namespace symtab {

PuncturedTableau::PuncturedTableau(std::vector<std::vector<int>> rows, int bound)
    : rows_(std::move(rows)), bound_(bound) {
  if (bound_ < 1) throw Error(ErrorKind::InvalidShape, "alphabet bound must be positive");
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty() || (i > 0 && rows_[i].size() > rows_[i - 1].size()))
      throw Error(ErrorKind::InvalidShape, "row lengths must be positive and weakly decreasing");
    for (int v : rows_[i])
      if (v != kHole && (v < 1 || v > bound_))
        throw Error(ErrorKind::InvalidShape,
                    "entry " + std::to_string(v) + " outside [1," + std::to_string(bound_) + "]");
  }
}

Partition PuncturedTableau::outer_shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::vector<Cell> PuncturedTableau::holes() const {
  std::vector<Cell> out;
  for (int i = 1; i <= row_count(); ++i)
    for (int j = 1; j <= row_length(i); ++j)
      if (raw({i, j}) == kHole) out.push_back({i, j});
  return out;
}

PuncturedPartition PuncturedTableau::shape() const {
  return PuncturedPartition(outer_shape(), holes());
}

bool PuncturedTableau::has_holes() const noexcept {
  for (const auto& row : rows_)
    if (std::find(row.begin(), row.end(), kHole) != row.end()) return true;
  return false;
}

int PuncturedTableau::cell_count() const noexcept {
  int n = 0;
  for (const auto& row : rows_)
    n += static_cast<int>(std::count_if(row.begin(), row.end(), [](int v) { return v != kHole; }));
  return n;
}

PuncturedTableau PuncturedTableau::with_entry(const Cell& c, int letter) const {
  if (!in_shape(c)) throw Error(ErrorKind::InvalidShape, "cell " + to_string(c) + " outside the shape");
  if (letter < 1 || letter > bound_) throw Error(ErrorKind::LetterOutOfRange, std::to_string(letter));
  PuncturedTableau out = *this;
  out.raw(c) = letter;
  return out;
}

PuncturedTableau PuncturedTableau::with_hole(const Cell& c) const {
  if (!in_shape(c)) throw Error(ErrorKind::InvalidShape, "cell " + to_string(c) + " outside the shape");
  PuncturedTableau out = *this;
  out.raw(c) = kHole;
  return out;
}

PuncturedTableau PuncturedTableau::with_bound(int bound) const {
  return PuncturedTableau(rows_, bound);
}

PuncturedTableau PuncturedTableau::straightened() const {
  const Partition mu = as_partition(shape());
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= mu.length(); ++i) {
    const auto& src = rows_[static_cast<std::size_t>(i - 1)];
    rows.emplace_back(src.begin(), src.begin() + mu.part(i));
  }
  return PuncturedTableau(std::move(rows), bound_);
}

bool is_semistandard(const PuncturedTableau& t) noexcept {
  // Checking consecutive domain entries suffices by transitivity.
  for (int i = 1; i <= t.row_count(); ++i) {
    int prev = 0;
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (!t.in_domain({i, j})) continue;
      if (t(i, j) < prev) return false;
      prev = t(i, j);
    }
  }
  const int width = t.row_length(1);
  for (int j = 1; j <= width; ++j) {
    int prev = 0;
    for (int i = 1; i <= t.row_count() && j <= t.row_length(i); ++i) {
      if (!t.in_domain({i, j})) continue;
      if (t(i, j) <= prev) return false;
      prev = t(i, j);
    }
  }
  return true;
}

bool is_symplectic(const Tableau& t) noexcept {
  if (t.has_holes() || !is_semistandard(t)) return false;
  for (int i = 1; i <= t.row_count(); ++i)
    if (t(i, 1) < 2 * i - 1) return false;
  return true;
}

Word row_word(const PuncturedTableau& t) {
  std::vector<int> out;
  for (int i = t.row_count(); i >= 1; --i)
    for (int j = 1; j <= t.row_length(i); ++j)
      if (t.in_domain({i, j})) out.push_back(t(i, j));
  return Word(std::move(out));
}

Word column_word(const PuncturedTableau& t) {
  std::vector<int> out;
  for (int j = 1; j <= t.row_length(1); ++j)
    for (int i = t.row_count(); i >= 1; --i)
      if (t.in_domain({i, j})) out.push_back(t(i, j));
  return Word(std::move(out));
}

Tableau add_box(const Tableau& t, int r, int x) {
  const Partition lambda = t.outer_shape();
  if (!is_addable(lambda, r))
    throw Error(ErrorKind::NotAddable, "row " + std::to_string(r) + " of " + to_string(lambda));
  if (x < 1 || x > t.bound()) throw Error(ErrorKind::LetterOutOfRange, std::to_string(x));
  std::vector<std::vector<int>> rows = t.rows();
  if (r > t.row_count()) rows.emplace_back();
  rows[static_cast<std::size_t>(r - 1)].push_back(x);
  Tableau out(std::move(rows), t.bound());
  if (!is_semistandard(out))
    throw Error(ErrorKind::NotSemistandard, "adding " + std::to_string(x) + " at row " + std::to_string(r));
  return out;
}

Word first_column(const Tableau& t) {
  std::vector<int> out;
  for (int i = 1; i <= t.row_count(); ++i) out.push_back(t(i, 1));
  return Word(std::move(out));
}

Tableau drop_first_column(const Tableau& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows())
    if (row.size() > 1) rows.emplace_back(row.begin() + 1, row.end());
  return Tableau(std::move(rows), t.bound());
}

std::string render(const PuncturedTableau& t) {
  std::string out;
  for (int i = 1; i <= t.row_count(); ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (j > 1) out += ' ';
      out += t.in_domain({i, j}) ? std::to_string(t(i, j)) : "o";
    }
  }
  return out;
}

PuncturedTableau parse_tableau(std::string_view text, int bound) {
  std::vector<std::vector<int>> rows;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view row_text = text.substr(pos, eol - pos);
    if (!row_text.empty() && row_text.back() == '\r') row_text.remove_suffix(1);
    std::vector<int> row;
    std::size_t k = 0;
    while (k < row_text.size()) {
      const char ch = row_text[k];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++k;
      } else if (ch == 'o' || ch == 'O') {
        row.push_back(PuncturedTableau::kHole);
        ++k;
        if (k < row_text.size() && !std::isspace(static_cast<unsigned char>(row_text[k])))
          throw ParseError(line, k + 1, "expected a separator after hole marker");
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        const std::size_t start = k;
        int v = 0;
        while (k < row_text.size() && std::isdigit(static_cast<unsigned char>(row_text[k]))) {
          v = v * 10 + (row_text[k] - '0');
          if (v > 1'000'000) throw ParseError(line, start + 1, "entry too large");
          ++k;
        }
        if (k < row_text.size() && !std::isspace(static_cast<unsigned char>(row_text[k])))
          throw ParseError(line, k + 1, "expected a separator after entry");
        if (v < 1 || v > bound)
          throw ParseError(line, start + 1,
                           "entry " + std::to_string(v) + " outside [1," + std::to_string(bound) + "]");
        row.push_back(v);
      } else {
        throw ParseError(line, k + 1, std::string("unexpected character '") + ch + "'");
      }
    }
    if (row.empty()) {
      // Blank lines are allowed only at the end.
      std::size_t rest = eol;
      while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
      if (rest != text.size()) throw ParseError(line, 1, "empty row inside a tableau");
      break;
    }
    if (!rows.empty() && row.size() > rows.back().size())
      throw ParseError(line, 1, "row is longer than the row above");
    rows.push_back(std::move(row));
    if (eol == text.size()) break;
    pos = eol + 1;
    ++line;
  }
  return PuncturedTableau(std::move(rows), bound);
}

std::string render_json(const PuncturedTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= t.row_count(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (t.in_domain({i, j})) row.push_back(t(i, j));
      else row.push_back("hole");
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", std::move(rows)}}.dump();
}

PuncturedTableau parse_tableau_json(std::string_view text, int bound) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw ParseError(1, 1, "expected an object with a \"rows\" array");
  std::vector<std::vector<int>> rows;
  std::size_t r = 0;
  for (const auto& row : doc["rows"]) {
    ++r;
    if (!row.is_array()) throw ParseError(1, 1, "row " + std::to_string(r) + " is not an array");
    std::vector<int> out;
    for (const auto& cell : row) {
      if (cell.is_string() && cell.get<std::string>() == "hole") {
        out.push_back(PuncturedTableau::kHole);
      } else if (cell.is_number_integer() && cell.get<long long>() >= 1 && cell.get<long long>() <= bound) {
        out.push_back(cell.get<int>());
      } else {
        throw ParseError(1, 1, "row " + std::to_string(r) + ": invalid cell " + cell.dump());
      }
    }
    if (out.empty()) throw ParseError(1, 1, "row " + std::to_string(r) + " is empty");
    if (!rows.empty() && out.size() > rows.back().size())
      throw ParseError(1, 1, "row " + std::to_string(r) + " is longer than the row above");
    rows.push_back(std::move(out));
  }
  return PuncturedTableau(std::move(rows), bound);
}

int max_entry(const PuncturedTableau& t) noexcept {
  int m = 0;
  for (const auto& row : t.rows())
    for (int v : row) m = std::max(m, v);
  return m;
}

}  // namespace symtab
