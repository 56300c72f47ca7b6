#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sierpack {

/// A vertex label of S^n_G: a length-n sequence over [k].
///
/// Text form is one character per symbol, most significant symbol first:
/// `0`-`9` then `a`-`z` for symbols 10..35. The integer index is the base-k
/// value of the same digit string, which is also the vertex id in S^n_G.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> symbols) : symbols_(std::move(symbols)) {}

  static Word from_index(std::uint64_t index, int k, int n);
  static Word parse(std::string_view text, int k);
  /// i^n
  static Word extreme(int symbol, int n) { return Word(std::vector<int>(static_cast<std::size_t>(n), symbol)); }

  int length() const { return static_cast<int>(symbols_.size()); }
  int operator[](int pos) const { return symbols_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& symbols() const { return symbols_; }

  std::uint64_t index(int k) const;
  std::string str() const;
  bool is_extreme() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> symbols_;
};

char symbol_char(int symbol);
int symbol_value(char c);

/// k^n, or 0 when it does not fit in 63 bits.
std::uint64_t checked_power(int k, int n);

}  // namespace sierpack
