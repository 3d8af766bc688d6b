#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/bigint.hpp"
#include "wordmaps/errors.hpp"

namespace wordmaps {

// A letter of a free group word: +i stands for the generator x_i, -i for its
// inverse. Generator indices are 1-based here and in all text forms; backends
// substitute tuple[i-1] for x_i.
using Letter = int32_t;

inline Letter letter_inverse(Letter l) { return -l; }

// Position of a letter in the normative letter order
// x1 < x1^-1 < x2 < x2^-1 < ... used by length-lex enumeration.
inline int letter_order_index(Letter l) {
  int i = std::abs(l);
  return 2 * (i - 1) + (l < 0 ? 1 : 0);
}

inline Letter letter_from_order_index(int code) {
  int gen = code / 2 + 1;
  return (code & 1) ? -gen : gen;
}

// A freely reduced word of F_n. Reduction happens at construction; unreduced
// letter sequences exist only transiently. Letters are stored flat, one entry
// per letter, so evaluation is a single linear scan.
class Word {
 public:
  Word() = default;

  static Word from_letters(std::span<const Letter> raw) {
    Word w;
    w.letters_.reserve(raw.size());
    for (Letter l : raw) {
      if (l == 0) throw PreconditionError("letter with generator index 0");
      if (!w.letters_.empty() && w.letters_.back() == -l) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    w.rank_ = 0;
    for (Letter l : w.letters_) w.rank_ = std::max(w.rank_, std::abs(l));
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Smallest n with w in F_n: the maximum generator index, 0 for the empty word.
  int rank() const { return rank_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::vector<Letter> letters_;
  int rank_ = 0;
};

inline Word reduce(std::span<const Letter> raw) { return Word::from_letters(raw); }

inline Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(-*it);
  }
  return Word::from_letters(out);
}

inline Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word::from_letters(out);
}

// Normative order: by length, then lexicographically in the letter order above.
inline bool length_lex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (size_t i = 0; i < la.size(); ++i) {
    int ca = letter_order_index(la[i]);
    int cb = letter_order_index(lb[i]);
    if (ca != cb) return ca < cb;
  }
  return false;
}

// Canonical text: maximal runs as powers, explicit ^-1, '*' separators,
// no brackets. The empty word renders as the empty string.
inline std::string to_string(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i);
    long exp = ls[i] > 0 ? run : -run;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(std::abs(ls[i]));
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
    i = j;
  }
  return out;
}

namespace detail {

// Recursive-descent parser for the word grammar:
//   word  := term { ("*" | whitespace) term }
//   term  := atom [ "^" integer ]
//   atom  := "x" index | "[" word "," word "]" | "(" word ")"
// Commutators expand as [u,v] = u^-1 v^-1 u v; powers expand by repetition.
class WordParser {
 public:
  explicit WordParser(std::string_view text) : s_(text) {}

  Word parse() {
    std::vector<Letter> letters = parse_sequence(/*depth=*/0);
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected character");
    return Word::from_letters(letters);
  }

 private:
  static constexpr size_t kMaxExpansion = 1'000'000;

  [[noreturn]] void fail(const std::string& msg) const {
    throw WordParseError(msg, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool at_atom_start() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'x' || c == '[' || c == '(';
  }

  std::vector<Letter> parse_sequence(int depth) {
    if (depth > 64) fail("nesting too deep");
    std::vector<Letter> out;
    skip_ws();
    if (!at_atom_start()) fail("expected a word");
    append_term(out, depth);
    for (;;) {
      size_t before = pos_;
      skip_ws();
      bool saw_ws = pos_ > before;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!at_atom_start()) fail("expected a term after '*'");
        append_term(out, depth);
      } else if (saw_ws && at_atom_start()) {
        append_term(out, depth);
      } else {
        return out;
      }
    }
  }

  void append_term(std::vector<Letter>& out, int depth) {
    std::vector<Letter> atom = parse_atom(depth);
    long exp = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      exp = parse_integer();
    }
    if (exp == 0 || atom.empty()) return;
    size_t reps = static_cast<size_t>(exp < 0 ? -exp : exp);
    if (atom.size() * reps > kMaxExpansion || out.size() + atom.size() * reps > kMaxExpansion) {
      fail("power expansion too large");
    }
    if (exp < 0) {
      std::reverse(atom.begin(), atom.end());
      for (Letter& l : atom) l = -l;
    }
    for (size_t r = 0; r < reps; ++r) {
      out.insert(out.end(), atom.begin(), atom.end());
    }
  }

  std::vector<Letter> parse_atom(int depth) {
    if (pos_ >= s_.size()) fail("expected an atom");
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      long idx = parse_unsigned();
      if (idx == 0) fail("generator index must be positive");
      return {static_cast<Letter>(idx)};
    }
    if (c == '[') {
      ++pos_;
      std::vector<Letter> u = parse_sequence(depth + 1);
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ',' in commutator");
      ++pos_;
      std::vector<Letter> v = parse_sequence(depth + 1);
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      ++pos_;
      // [u,v] = u^-1 v^-1 u v
      std::vector<Letter> out;
      out.reserve(2 * (u.size() + v.size()));
      for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(-*it);
      for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(-*it);
      out.insert(out.end(), u.begin(), u.end());
      out.insert(out.end(), v.begin(), v.end());
      return out;
    }
    if (c == '(') {
      ++pos_;
      std::vector<Letter> inner = parse_sequence(depth + 1);
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected 'x', '[' or '('");
  }

  long parse_unsigned() {
    if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail("expected digits");
    long v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    return v;
  }

  long parse_integer() {
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long v = parse_unsigned();
    return neg ? -v : v;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text) {
  return detail::WordParser(text).parse();
}

// Substitute tuple[i-1] for x_i and multiply left to right. Backend must
// provide identity(), mul(a,b) and inv(a); both the finite-group backends and
// the tower's matrix rings qualify.
template <class Backend, class Elt>
Elt evaluate(const Word& w, std::span<const Elt> tuple, const Backend& G) {
  if (static_cast<int>(tuple.size()) < w.rank()) {
    throw PreconditionError("tuple has fewer entries than the word's rank");
  }
  Elt acc = G.identity();
  for (Letter l : w.letters()) {
    size_t i = static_cast<size_t>(std::abs(l)) - 1;
    acc = G.mul(acc, l > 0 ? tuple[i] : G.inv(tuple[i]));
  }
  return acc;
}

// Length-lex stream of all nontrivial freely reduced words of length 1..max_len
// in F_rank. Words are emitted exactly once; the stream size is
// sum_{l=1}^{max_len} 2n (2n-1)^(l-1). A stream may be restricted to one first
// letter, which partitions the full stream for parallel consumers.
class ReducedWordStream {
 public:
  ReducedWordStream(int rank, int max_len)
      : rank_(rank), max_len_(max_len) {
    if (rank < 1 || max_len < 1) throw PreconditionError("rank and max length must be >= 1");
  }

  ReducedWordStream(int rank, int max_len, Letter first)
      : ReducedWordStream(rank, max_len) {
    if (std::abs(first) < 1 || std::abs(first) > rank) {
      throw PreconditionError("first letter outside F_rank");
    }
    fixed_first_ = letter_order_index(first);
  }

  std::optional<Word> next() {
    if (!advance()) return std::nullopt;
    std::vector<Letter> ls(codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) ls[i] = letter_from_order_index(codes_[i]);
    return Word::from_letters(ls);
  }

  static BigInt count(int rank, int max_len) {
    BigInt total = 0;
    BigInt layer = 2 * rank;
    for (int l = 1; l <= max_len; ++l) {
      total += layer;
      layer *= 2 * rank - 1;
    }
    return total;
  }

 private:
  // Smallest letter code allowed after `prev` (-1 for the first position).
  int min_code_after(int prev) const {
    if (prev >= 0 && (prev ^ 1) == 0) return 1;
    return 0;
  }

  bool start_length(int len) {
    if (len > max_len_) return false;
    codes_.assign(static_cast<size_t>(len), 0);
    codes_[0] = fixed_first_ >= 0 ? fixed_first_ : 0;
    for (size_t i = 1; i < codes_.size(); ++i) {
      codes_[i] = min_code_after(codes_[i - 1]);
    }
    return true;
  }

  bool advance() {
    if (codes_.empty()) return start_length(1);
    const int top = 2 * rank_;
    size_t fixed = fixed_first_ >= 0 ? 1 : 0;
    for (size_t j = codes_.size(); j-- > fixed;) {
      int forbidden = j > 0 ? (codes_[j - 1] ^ 1) : -1;
      for (int v = codes_[j] + 1; v < top; ++v) {
        if (v == forbidden) continue;
        codes_[j] = v;
        for (size_t i = j + 1; i < codes_.size(); ++i) {
          codes_[i] = min_code_after(codes_[i - 1]);
        }
        return true;
      }
    }
    return start_length(static_cast<int>(codes_.size()) + 1);
  }

  int rank_;
  int max_len_;
  int fixed_first_ = -1;
  std::vector<int> codes_;
};

}  // namespace wordmaps
