#include "symtab/oscillating.hpp"

#include <json.hpp>

#include "symtab/error.hpp"

namespace symtab {

namespace {

bool within_rank(const std::vector<Partition>& chain, int rank) {
  for (const Partition& p : chain)
    if (p.length() > rank) return false;
  return true;
}

bool horizontal_below(const Partition& outer, const Partition& inner) {
  return contains(inner, outer) && is_horizontal_strip(SkewPartition(outer, inner));
}

bool vertical_below(const Partition& outer, const Partition& inner) {
  return contains(inner, outer) && is_vertical_strip(SkewPartition(outer, inner));
}

}  // namespace

bool is_valid(const OscillatingTableau& u) {
  if (u.chain.empty() || !within_rank(u.chain, u.rank)) return false;
  for (std::size_t i = 1; i < u.chain.size(); ++i)
    if (differing_row(u.chain[i - 1], u.chain[i]) == 0) return false;
  return true;
}

bool is_horizontal_triple(const PieriTriple& t) {
  return horizontal_below(t.source, t.middle) && horizontal_below(t.target, t.middle);
}

bool is_vertical_triple(const PieriTriple& t) {
  return vertical_below(t.middle, t.source) && vertical_below(t.middle, t.target);
}

bool is_valid(const ColumnStrictOT& u) {
  if (u.chain.size() % 2 == 0 || !within_rank(u.chain, u.rank)) return false;
  for (std::size_t i = 1; i + 1 < u.chain.size(); i += 2)
    if (!is_horizontal_triple({u.chain[i - 1], u.chain[i], u.chain[i + 1]})) return false;
  return true;
}

bool is_valid(const RowStrictOT& u) {
  if (u.chain.size() % 2 == 0 || !within_rank(u.chain, u.rank)) return false;
  for (std::size_t i = 1; i + 1 < u.chain.size(); i += 2)
    if (!is_vertical_triple({u.chain[i - 1], u.chain[i], u.chain[i + 1]})) return false;
  return true;
}

std::vector<int> content(const ColumnStrictOT& u) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < u.chain.size(); i += 2)
    out.push_back(u.chain[i - 1].size() + u.chain[i + 1].size() - 2 * u.chain[i].size());
  return out;
}

std::vector<int> content(const RowStrictOT& u) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < u.chain.size(); i += 2)
    out.push_back(2 * u.chain[i].size() - u.chain[i - 1].size() - u.chain[i + 1].size());
  return out;
}

std::string to_string(const std::vector<Partition>& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(chain[i]);
  }
  return out + "]";
}

std::vector<Partition> parse_chain(const std::string& text) {
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos || text[pos] != '[') throw ParseError(1, 1, "expected '['");
  // JSON form: an array of arrays of integers.
  const std::size_t next = text.find_first_not_of(" \t\r\n", pos + 1);
  if (next != std::string::npos && (text[next] == '[' || text[next] == ']')) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, e.byte, e.what());
    }
    std::vector<Partition> chain;
    for (const auto& p : doc) {
      if (!p.is_array()) throw ParseError(1, 1, "chain entries must be arrays");
      try {
        chain.emplace_back(p.get<std::vector<int>>());
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, e.what());
      } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
      }
    }
    return chain;
  }
  std::vector<Partition> chain;
  ++pos;
  while (true) {
    pos = text.find_first_not_of(" \t\r\n,", pos);
    if (pos == std::string::npos) throw ParseError(1, text.size() + 1, "missing ']'");
    if (text[pos] == ']') break;
    if (text[pos] != '(') throw ParseError(1, pos + 1, "expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError(1, pos + 1, "missing ')'");
    chain.push_back(parse_partition(std::string_view(text).substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  if (text.find_first_not_of(" \t\r\n", pos + 1) != std::string::npos)
    throw ParseError(1, pos + 2, "trailing characters");
  return chain;
}

}  // namespace symtab
