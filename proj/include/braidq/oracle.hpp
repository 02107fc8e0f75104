#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/moves.hpp"
#include "braidq/rules.hpp"

namespace braidq {

// Exhaustive breadth-first search over the fixed-length move graph. Returns a
// shortest move sequence reaching the all-identity word in at most max_depth
// moves, or nothing. This decides the game's notion of untanglability, not
// group-theoretic triviality: reductions needing extra workspace are out of
// reach by design.
inline std::optional<std::vector<Move>> bfs_untangle(const BraidWord& start,
                                                     const RuleSet& rules,
                                                     std::size_t max_depth) {
  const std::string target(start.size(), '1');
  if (start.text() == target) return std::vector<Move>{};

  struct Edge {
    std::string parent;
    Move move;
  };
  std::unordered_map<std::string, Edge> parent;
  parent.emplace(start.text(), Edge{});
  std::deque<std::pair<std::string, std::size_t>> frontier;
  frontier.emplace_back(start.text(), 0);

  while (!frontier.empty()) {
    auto [text, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= max_depth) continue;
    const BraidWord word(text);
    for (const Move& m : all_applicable_moves(word, rules)) {
      std::string next = apply_move(word, m, rules).text();
      if (parent.contains(next)) continue;
      parent.emplace(next, Edge{text, m});
      if (next == target) {
        std::vector<Move> path;
        for (std::string at = next; at != start.text();) {
          const Edge& e = parent.at(at);
          path.push_back(e.move);
          at = e.parent;
        }
        return std::vector<Move>(path.rbegin(), path.rend());
      }
      frontier.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

namespace detail {

inline void check_two_strand_word(const BraidWord& word, const char* who) {
  for (char c : word.text()) {
    if (c != 'a' && c != 'b' && c != '1') {
      throw std::invalid_argument(std::string(who) +
                                  ": word must be over {a, b, 1}");
    }
  }
}

}  // namespace detail

// Under ab=ba=11 the letters paint integers (a -> +1, b -> -1, 1 -> 0), so a
// word untangles exactly when the counts of a and b agree.
inline bool analytic_trivial_inverse(const BraidWord& word) {
  detail::check_two_strand_word(word, "analytic_trivial_inverse");
  std::size_t count_a = 0, count_b = 0;
  for (char c : word.text()) {
    if (c == 'a') ++count_a;
    if (c == 'b') ++count_b;
  }
  return count_a == count_b;
}

// Under aa=bb=11 each letter is its own inverse; drop the identity letters
// and cancel adjacent equal pairs with a stack. Trivial iff nothing remains.
inline bool analytic_trivial_involutive(const BraidWord& word) {
  detail::check_two_strand_word(word, "analytic_trivial_involutive");
  std::string stack;
  for (char c : word.text()) {
    if (c == '1') continue;
    if (!stack.empty() && stack.back() == c) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack.empty();
}

}  // namespace braidq
