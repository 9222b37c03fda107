#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace symtab {

// Finite sequence of positive letters.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // 0-based access.
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(int letter) { letters_.push_back(letter); }

  // Subword w[a,b] with 1-based inclusive bounds; empty when b < a.
  Word slice(std::size_t a, std::size_t b) const;
  // Prefix w[a].
  Word prefix(std::size_t a) const { return slice(1, a); }
  Word reversed() const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<int> letters_;
};

bool is_weakly_increasing(const Word& w) noexcept;
bool is_strictly_increasing(const Word& w) noexcept;
bool is_strictly_decreasing(const Word& w) noexcept;

std::string to_string(const Word& w);
// Comma- or space-separated integers, optionally parenthesized.
Word parse_word(std::string_view text);

}  // namespace symtab
