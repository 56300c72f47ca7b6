#include "sierpack/word.hpp"

#include <algorithm>
#include <limits>

#include "sierpack/errors.hpp"

namespace sierpack {

char symbol_char(int symbol) {
  if (symbol < 0 || symbol >= 36) throw PreconditionError("symbol out of range: " + std::to_string(symbol));
  return symbol < 10 ? static_cast<char>('0' + symbol) : static_cast<char>('a' + symbol - 10);
}

int symbol_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw ParseError(std::string("invalid word symbol '") + c + "'");
}

std::uint64_t checked_power(int k, int n) {
  std::uint64_t result = 1;
  for (int t = 0; t < n; ++t) {
    if (result > std::numeric_limits<std::uint64_t>::max() / 2 / static_cast<std::uint64_t>(k)) return 0;
    result *= static_cast<std::uint64_t>(k);
  }
  return result;
}

Word Word::from_index(std::uint64_t index, int k, int n) {
  std::vector<int> symbols(static_cast<std::size_t>(n));
  for (int pos = n - 1; pos >= 0; --pos) {
    symbols[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::uint64_t>(k));
    index /= static_cast<std::uint64_t>(k);
  }
  return Word(std::move(symbols));
}

Word Word::parse(std::string_view text, int k) {
  if (text.empty()) throw ParseError("empty word");
  std::vector<int> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    int s = symbol_value(c);
    if (s >= k) throw ParseError("symbol '" + std::string(1, c) + "' not in [" + std::to_string(k) + "]");
    symbols.push_back(s);
  }
  return Word(std::move(symbols));
}

std::uint64_t Word::index(int k) const {
  std::uint64_t value = 0;
  for (int s : symbols_) value = value * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(s);
  return value;
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (int s : symbols_) out.push_back(symbol_char(s));
  return out;
}

bool Word::is_extreme() const {
  return !symbols_.empty() &&
         std::all_of(symbols_.begin(), symbols_.end(), [&](int s) { return s == symbols_.front(); });
}

}  // namespace sierpack
