#include "symtab/word.hpp"

#include <algorithm>
#include <cctype>

#include "symtab/error.hpp"

namespace symtab {

Word Word::slice(std::size_t a, std::size_t b) const {
  if (a < 1) a = 1;
  b = std::min(b, letters_.size());
  if (b < a) return {};
  return Word(std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(a - 1),
                               letters_.begin() + static_cast<std::ptrdiff_t>(b)));
}

Word Word::reversed() const {
  return Word(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<int> out = lhs.letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

bool is_weakly_increasing(const Word& w) noexcept {
  return std::is_sorted(w.begin(), w.end());
}

bool is_strictly_increasing(const Word& w) noexcept {
  return std::adjacent_find(w.begin(), w.end(), [](int a, int b) { return a >= b; }) == w.end();
}

bool is_strictly_decreasing(const Word& w) noexcept {
  return std::adjacent_find(w.begin(), w.end(), [](int a, int b) { return a <= b; }) == w.end();
}

std::string to_string(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out + ")";
}

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip();
  const bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  std::vector<int> letters;
  skip();
  while (pos < text.size() && text[pos] != ')') {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(1, pos + 1, std::string("unexpected character '") + text[pos] + "'");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    if (v == 0) throw ParseError(1, pos, "letters must be positive");
    letters.push_back(v);
    skip();
  }
  if (paren) {
    if (pos >= text.size()) throw ParseError(1, pos + 1, "missing ')'");
    ++pos;
  } else if (pos < text.size()) {
    throw ParseError(1, pos + 1, "unexpected ')'");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError(1, pos + 1, "trailing characters");
  return Word(std::move(letters));
}

}  // namespace symtab
