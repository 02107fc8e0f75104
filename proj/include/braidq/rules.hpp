#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidq/braid.hpp"

namespace braidq {

enum class RuleVariant {
  TwoStrandInverse,     // 1a=a1, 1b=b1, ab=ba=11
  TwoStrandInvolutive,  // 1a=a1, 1b=b1, aa=bb=11
  ThreeStrand,          // Aa=aA=11, Bb=bB=11, X1=1X, ABA<->BAB
};

// A move system over a fixed alphabet. Three tables drive everything:
//   erasable pairs  P       with P <-> 11,
//   swap pairs      xy      with xy <-> yx (inverse pairs and 1-commutation),
//   relation triples T <-> U (three-strand only).
// All rewrites are available in both directions and preserve word length.
class RuleSet {
 public:
  RuleVariant variant = RuleVariant::ThreeStrand;

  // Enables the lowercase relation aba<->bab alongside the uppercase one.
  // Off by default: the standard three-strand move list names only ABA<->BAB.
  bool lowercase_relation = false;

  static RuleSet two_strand_inverse() {
    return RuleSet{RuleVariant::TwoStrandInverse};
  }
  static RuleSet two_strand_involutive() {
    return RuleSet{RuleVariant::TwoStrandInvolutive};
  }
  static RuleSet three_strand() { return RuleSet{RuleVariant::ThreeStrand}; }

  bool three() const { return variant == RuleVariant::ThreeStrand; }

  // Observation width: the caret spans two letters on two strands, three on
  // three strands.
  std::size_t window() const { return three() ? 3 : 2; }

  std::size_t strands() const { return three() ? 3 : 2; }

  const std::string& alphabet() const {
    static const std::string two = "ab1";
    static const std::string three_letters = "AaBb1";
    return three() ? three_letters : two;
  }

  bool in_alphabet(char c) const {
    return alphabet().find(c) != std::string::npos;
  }

  // Pairs interchangeable with "11".
  const std::vector<std::string>& erasable_pairs() const {
    static const std::vector<std::string> inverse = {"ab", "ba"};
    static const std::vector<std::string> involutive = {"aa", "bb"};
    static const std::vector<std::string> strand3 = {"Aa", "aA", "Bb", "bB"};
    switch (variant) {
      case RuleVariant::TwoStrandInverse: return inverse;
      case RuleVariant::TwoStrandInvolutive: return involutive;
      case RuleVariant::ThreeStrand: return strand3;
    }
    throw std::logic_error("RuleSet: bad variant");
  }

  bool is_erasable(const std::string& pair) const {
    const auto& pairs = erasable_pairs();
    return std::find(pairs.begin(), pairs.end(), pair) != pairs.end();
  }

  // Index of an erasable pair in canonical order, -1 if absent.
  int erasable_index(const std::string& pair) const {
    const auto& pairs = erasable_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i] == pair) return static_cast<int>(i);
    }
    return -1;
  }

  // Pairs xy with xy <-> yx: the erasable inverse pairs plus x1 <-> 1x for
  // every non-identity letter. "11" is excluded; its rewrites are the
  // insertions.
  bool is_swap_pair(const std::string& pair) const {
    if (pair.size() != 2) return false;
    const char x = pair[0], y = pair[1];
    if ((x == '1') != (y == '1') && in_alphabet(x) && in_alphabet(y)) {
      return true;
    }
    return is_erasable(pair);
  }

  // Relation triples as (from, to), both directions listed.
  const std::vector<std::pair<std::string, std::string>>& relation_triples()
      const {
    static const std::vector<std::pair<std::string, std::string>> none;
    static const std::vector<std::pair<std::string, std::string>> upper = {
        {"ABA", "BAB"}, {"BAB", "ABA"}};
    static const std::vector<std::pair<std::string, std::string>> both = {
        {"ABA", "BAB"}, {"BAB", "ABA"}, {"aba", "bab"}, {"bab", "aba"}};
    if (!three()) return none;
    return lowercase_relation ? both : upper;
  }

  std::string name() const {
    switch (variant) {
      case RuleVariant::TwoStrandInverse: return "inverse";
      case RuleVariant::TwoStrandInvolutive: return "involutive";
      case RuleVariant::ThreeStrand: return "threestrand";
    }
    throw std::logic_error("RuleSet: bad variant");
  }

  static RuleSet from_name(const std::string& name) {
    if (name == "inverse") return two_strand_inverse();
    if (name == "involutive") return two_strand_involutive();
    if (name == "threestrand") return three_strand();
    throw std::invalid_argument("unknown rule set '" + name + "'");
  }
};

// The quantity a rule set's moves actually conserve. Three strands: the
// exponent sum. Two-strand inverse rules: count(a) - count(b), since a and b
// undo each other. Two-strand involutive rules: only the per-letter count
// parities survive aa <-> 11.
inline std::array<int, 2> conserved_signature(const BraidWord& word,
                                              const RuleSet& rules) {
  int count_a = 0, count_b = 0;
  for (char c : word.text()) {
    if (c == 'a') ++count_a;
    if (c == 'b') ++count_b;
  }
  switch (rules.variant) {
    case RuleVariant::TwoStrandInverse: return {count_a - count_b, 0};
    case RuleVariant::TwoStrandInvolutive: return {count_a % 2, count_b % 2};
    case RuleVariant::ThreeStrand: return {exponent_sum(word), 0};
  }
  throw std::logic_error("conserved_signature: bad variant");
}

// Parses a word and checks every character against the rule set's alphabet.
inline BraidWord parse_word(const std::string& text, const RuleSet& rules) {
  if (text.empty()) throw std::invalid_argument("parse_word: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!rules.in_alphabet(text[i])) {
      throw std::invalid_argument("parse_word: invalid letter '" +
                                  std::string(1, text[i]) + "' at index " +
                                  std::to_string(i));
    }
  }
  return BraidWord(text);
}

}  // namespace braidq
