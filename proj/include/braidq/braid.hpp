#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidq {

// One symbol of a braid word. The enumerator value is the text encoding, so
// rendering is a cast and parsing is a membership check.
enum class Letter : char {
  SigmaPlus1 = 'A',   // strands 1-2 cross, first strand on top
  SigmaMinus1 = 'a',  // strands 1-2 cross, first strand underneath
  SigmaPlus2 = 'B',   // strands 2-3 cross, second strand on top
  SigmaMinus2 = 'b',  // strands 2-3 cross, second strand underneath
  Identity = '1',     // no crossing
};

inline constexpr char kAllLetters[] = "AaBb1";

constexpr char to_char(Letter l) { return static_cast<char>(l); }

constexpr bool is_letter(char c) {
  return c == 'A' || c == 'a' || c == 'B' || c == 'b' || c == '1';
}

// Signed crossing count contribution: +1 uppercase, -1 lowercase, 0 identity.
constexpr int exponent(char c) {
  return (c == 'A' || c == 'B') ? +1 : (c == 'a' || c == 'b') ? -1 : 0;
}

constexpr int exponent(Letter l) { return exponent(to_char(l)); }

// A fixed-length sequence of letters; the game board. Every rewrite in this
// library preserves length, so a word's size is stable for an episode.
class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(std::string text) : text_(std::move(text)) {
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (!is_letter(text_[i])) {
        throw std::invalid_argument("BraidWord: invalid letter '" +
                                    std::string(1, text_[i]) + "' at index " +
                                    std::to_string(i));
      }
    }
  }

  explicit BraidWord(const std::vector<Letter>& letters) {
    text_.reserve(letters.size());
    for (Letter l : letters) text_.push_back(to_char(l));
  }

  std::size_t size() const { return text_.size(); }
  Letter at(std::size_t i) const { return static_cast<Letter>(text_.at(i)); }
  const std::string& text() const { return text_; }

  bool all_identity() const {
    return text_.find_first_not_of('1') == std::string::npos;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord& x, const BraidWord& y) {
    return x.text_ <=> y.text_;
  }

 private:
  std::string text_;
};

inline BraidWord identity_word(std::size_t n) {
  return BraidWord(std::string(n, '1'));
}

// Conserved by every move: each rewrite pattern and its replacement carry the
// same signed crossing count.
inline int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (char c : word.text()) sum += exponent(c);
  return sum;
}

}  // namespace braidq
