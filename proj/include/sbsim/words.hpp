#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace sbsim {

// Alphabet: '0', '1', separator '_', end marker '|'.
inline constexpr char kSep = '_';
inline constexpr char kMark = '|';

inline bool is_letter(char c) { return c == '0' || c == '1'; }
inline bool is_symbol(char c) { return c == '0' || c == '1' || c == kSep; }

// Fixed-capacity word. The tail beyond len is kept zeroed so that default
// comparisons and byte hashes see a canonical value.
template <int Cap>
struct BoundedWord {
  std::uint8_t len = 0;
  char data[Cap] = {};

  constexpr BoundedWord() = default;
  BoundedWord(std::string_view s) {
    if (static_cast<int>(s.size()) > Cap) throw InvalidInstanceError("bounded word overflow");
    len = static_cast<std::uint8_t>(s.size());
    std::memcpy(data, s.data(), s.size());
  }

  int size() const { return len; }
  bool empty() const { return len == 0; }
  char front() const { return data[0]; }
  char back() const { return data[len - 1]; }
  char operator[](int i) const { return data[i]; }

  void clear() {
    std::memset(data, 0, Cap);
    len = 0;
  }
  void push_back(char c) {
    data[len++] = c;
  }
  void push_front(char c) {
    std::memmove(data + 1, data, len);
    data[0] = c;
    ++len;
  }
  bool full() const { return len == Cap; }

  int count(char c) const {
    int k = 0;
    for (int i = 0; i < len; ++i) k += (data[i] == c);
    return k;
  }
  bool contains(char c) const {
    for (int i = 0; i < len; ++i)
      if (data[i] == c) return true;
    return false;
  }

  std::string_view view() const { return {data, static_cast<std::size_t>(len)}; }
  std::string str() const { return std::string(view()); }

  friend auto operator<=>(const BoundedWord&, const BoundedWord&) = default;
};

// Thue-Morse bit: parity of the population count of i.
inline int thue_morse_bit(std::uint64_t i) { return std::popcount(i) & 1; }

// T_k of length 2^k by repeated complement-append.
inline std::string thue_morse_word_by_complement(int k) {
  std::string w = "0";
  for (int step = 0; step < k; ++step) {
    std::string c = w;
    for (char& ch : c) ch = (ch == '0') ? '1' : '0';
    w += c;
  }
  return w;
}

// T_k of length 2^k via the morphism 0 -> 01, 1 -> 10.
inline std::string thue_morse_word_by_substitution(int k) {
  std::string w = "0";
  for (int step = 0; step < k; ++step) {
    std::string next;
    next.reserve(w.size() * 2);
    for (char ch : w) next += (ch == '0') ? "01" : "10";
    w = next;
  }
  return w;
}

// Pads a letter word with separators: x1 x2 ... -> _x1_x2_..._
// with every letter repeated block_len times.
inline std::string padded_word(std::string_view letters, long block_len = 1) {
  std::string w(1, kSep);
  for (char ch : letters) {
    w.append(static_cast<std::size_t>(block_len), ch);
    w += kSep;
  }
  return w;
}

// The i-th valid word: i applications to "_0_" of the letter substitutions
// 0 -> 0_1_1_0 and 1 -> 1_0_0_1 (separators are kept). Length 2*4^i + 1.
inline std::string valid_word(int i) {
  std::string w = "_0_";
  for (int step = 0; step < i; ++step) {
    std::string next;
    next.reserve(w.size() * 4);
    for (char ch : w) {
      if (ch == '0')
        next += "0_1_1_0";
      else if (ch == '1')
        next += "1_0_0_1";
      else
        next += ch;
    }
    w = next;
  }
  return w;
}

inline bool is_valid_word(std::string_view w) {
  // A valid word has length 2*4^i + 1; compare against the unique candidate.
  unsigned long long target = 2;  // letters for i = 0
  int i = 0;
  while (target + 1 < w.size() && i <= 24) {
    target *= 4;
    ++i;
  }
  if (w.size() != target + 1) return false;
  return w == valid_word(i);
}

// Collapses every maximal run of equal symbols to a single symbol.
inline std::string compress(std::string_view w) {
  std::string out;
  for (char ch : w)
    if (out.empty() || out.back() != ch) out += ch;
  return out;
}

// True iff w contains no subword XXX with X nonempty.
// Scans per period: a cube with period p is a run of 2p consecutive
// positions where w[i] == w[i+p].
inline bool is_cube_free(std::string_view w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; 3 * p <= n; ++p) {
    int streak = 0;
    for (int i = 0; i + p < n; ++i) {
      if (w[i] == w[i + p]) {
        if (++streak >= 2 * p) return false;
      } else {
        streak = 0;
      }
    }
  }
  return true;
}

}  // namespace sbsim
