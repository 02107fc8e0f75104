#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/rules.hpp"

namespace braidq {

// A length-preserving rewrite at a fixed position. `from` must match the word
// there; `to` replaces it. Carrying both sides makes every move reversible
// without further context.
struct Move {
  enum class Kind { SwapPair, ErasePair, InsertPair, BraidRelation };

  Kind kind = Kind::SwapPair;
  std::size_t position = 0;
  std::string from;
  std::string to;

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_text(const Move& m) {
  switch (m.kind) {
    case Move::Kind::SwapPair:
      return "swap@" + std::to_string(m.position);
    case Move::Kind::ErasePair:
      return "erase(" + m.from + ")@" + std::to_string(m.position);
    case Move::Kind::InsertPair:
      return "insert(" + m.to + ")@" + std::to_string(m.position);
    case Move::Kind::BraidRelation:
      return "relation(" + m.from + ")@" + std::to_string(m.position);
  }
  throw std::logic_error("Move: bad kind");
}

namespace detail {

inline void check_position(const BraidWord& word, std::size_t position) {
  if (word.size() < 2 || position > word.size() - 2) {
    throw std::out_of_range("position " + std::to_string(position) +
                            " out of range for word of length " +
                            std::to_string(word.size()));
  }
}

}  // namespace detail

// Every move of the rule set whose left-hand pattern starts at `position`.
// Both directions of each equivalence appear: erasures alongside the four
// insertions over "11", swaps with their own inverses, relation triples both
// ways. A position is valid wherever a pair fits (0 .. n-2); relation
// triples additionally need three letters of room. Note this is wider than
// the caret's reach on three strands, where the environment stops at n-3.
inline std::vector<Move> applicable_moves(const BraidWord& word,
                                          std::size_t position,
                                          const RuleSet& rules) {
  detail::check_position(word, position);
  std::vector<Move> moves;
  const std::string pair = word.text().substr(position, 2);
  if (rules.is_erasable(pair)) {
    moves.push_back({Move::Kind::ErasePair, position, pair, "11"});
  }
  if (pair == "11") {
    for (const std::string& target : rules.erasable_pairs()) {
      moves.push_back({Move::Kind::InsertPair, position, "11", target});
    }
  }
  if (rules.is_swap_pair(pair)) {
    moves.push_back(
        {Move::Kind::SwapPair, position, pair, {pair[1], pair[0]}});
  }
  if (position + 3 <= word.size() && !rules.relation_triples().empty()) {
    const std::string triple = word.text().substr(position, 3);
    for (const auto& [from, to] : rules.relation_triples()) {
      if (triple == from) {
        moves.push_back({Move::Kind::BraidRelation, position, from, to});
      }
    }
  }
  return moves;
}

inline std::vector<Move> all_applicable_moves(const BraidWord& word,
                                              const RuleSet& rules) {
  std::vector<Move> moves;
  if (word.size() < 2) return moves;
  for (std::size_t p = 0; p + 2 <= word.size(); ++p) {
    auto at_p = applicable_moves(word, p, rules);
    moves.insert(moves.end(), at_p.begin(), at_p.end());
  }
  return moves;
}

namespace detail {

inline bool rewrite_in_rules(const Move& m, const RuleSet& rules) {
  switch (m.kind) {
    case Move::Kind::ErasePair:
      return m.to == "11" && rules.is_erasable(m.from);
    case Move::Kind::InsertPair:
      return m.from == "11" && rules.is_erasable(m.to);
    case Move::Kind::SwapPair:
      return m.from.size() == 2 && m.to.size() == 2 && m.from[0] == m.to[1] &&
             m.from[1] == m.to[0] && rules.is_swap_pair(m.from);
    case Move::Kind::BraidRelation:
      for (const auto& [from, to] : rules.relation_triples()) {
        if (m.from == from && m.to == to) return true;
      }
      return false;
  }
  return false;
}

}  // namespace detail

inline bool is_applicable(const BraidWord& word, const Move& m,
                          const RuleSet& rules) {
  if (!detail::rewrite_in_rules(m, rules)) return false;
  if (m.position + m.from.size() > word.size()) return false;
  return word.text().compare(m.position, m.from.size(), m.from) == 0;
}

// Applies a move. Length and exponent sum are unchanged by construction.
inline BraidWord apply_move(const BraidWord& word, const Move& m,
                            const RuleSet& rules) {
  if (!is_applicable(word, m, rules)) {
    throw std::invalid_argument("apply_move: " + to_text(m) +
                                " not applicable to \"" + word.text() + "\"");
  }
  std::string text = word.text();
  text.replace(m.position, m.to.size(), m.to);
  return BraidWord(std::move(text));
}

// The move undoing `m` at the same position.
inline Move inverse_move(const Move& m) {
  Move::Kind kind = m.kind;
  if (m.kind == Move::Kind::ErasePair) kind = Move::Kind::InsertPair;
  if (m.kind == Move::Kind::InsertPair) kind = Move::Kind::ErasePair;
  return {kind, m.position, m.to, m.from};
}

}  // namespace braidq
