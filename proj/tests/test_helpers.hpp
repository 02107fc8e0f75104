#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidq/braidq.hpp"

namespace braidq::testing {

inline BraidWord random_word(std::size_t n, const RuleSet& rules, Rng& rng) {
  const std::string& alphabet = rules.alphabet();
  std::string text;
  text.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    text.push_back(alphabet[uniform_index(rng, alphabet.size())]);
  }
  return BraidWord(std::move(text));
}

// Minimal untangling depth by iterative deepening, independent of the BFS
// path bookkeeping. Test-only: exponential, keep n small.
inline std::optional<std::size_t> iddfs_untangle_depth(const BraidWord& start,
                                                       const RuleSet& rules,
                                                       std::size_t max_depth) {
  const std::string target(start.size(), '1');
  auto dfs = [&](auto&& self, const BraidWord& word,
                 std::size_t remaining) -> bool {
    if (word.text() == target) return true;
    if (remaining == 0) return false;
    for (const Move& m : all_applicable_moves(word, rules)) {
      if (self(self, apply_move(word, m, rules), remaining - 1)) return true;
    }
    return false;
  };
  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    if (dfs(dfs, start, depth)) return depth;
  }
  return std::nullopt;
}

// Checks <tag ...> / </tag> / <tag .../> nesting; declarations and comments
// are not expected in our output.
inline bool xml_tags_balanced(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    const std::size_t close = text.find('>', i);
    if (close == std::string::npos) return false;
    std::string inside = text.substr(i + 1, close - i - 1);
    i = close + 1;
    if (inside.empty()) return false;
    const bool closing = inside.front() == '/';
    const bool self_closing = inside.back() == '/';
    if (closing) inside.erase(0, 1);
    if (self_closing && !closing) inside.pop_back();
    const std::string name = inside.substr(0, inside.find_first_of(" \t\n"));
    if (name.empty()) return false;
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

inline std::size_t count_occurrences(const std::string& text,
                                     const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace braidq::testing
