#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/moves.hpp"
#include "braidq/rng.hpp"
#include "braidq/rules.hpp"

namespace braidq {

enum class Mode { Untangle, Tangle };

enum class ActionKind {
  MoveCaretLeft,
  MoveCaretRight,
  Rotate,
  Replace,
  ReplaceBack,
  RotateReplace,
};

// One agent action. ReplaceBack is parameterized by the pair it writes over
// "11" (index into rules.erasable_pairs()); a single nondeterministic
// insertion would make transitions stochastic, which the tabular learner
// cannot represent.
struct Action {
  ActionKind kind = ActionKind::MoveCaretLeft;
  int target = -1;

  friend bool operator==(const Action&, const Action&) = default;
};

// The fixed action set in canonical order. Every action is legal in every
// state (failures are outcomes, not errors), so the set never varies.
inline std::vector<Action> action_space(const RuleSet& rules) {
  std::vector<Action> actions = {
      {ActionKind::MoveCaretLeft},
      {ActionKind::MoveCaretRight},
      {ActionKind::Rotate},
      {ActionKind::Replace},
  };
  for (int i = 0; i < static_cast<int>(rules.erasable_pairs().size()); ++i) {
    actions.push_back({ActionKind::ReplaceBack, i});
  }
  if (rules.three()) actions.push_back({ActionKind::RotateReplace});
  return actions;
}

inline std::string action_name(const Action& a, const RuleSet& rules) {
  switch (a.kind) {
    case ActionKind::MoveCaretLeft: return "move_caret_left";
    case ActionKind::MoveCaretRight: return "move_caret_right";
    case ActionKind::Rotate: return "rotate";
    case ActionKind::Replace: return "replace";
    case ActionKind::ReplaceBack:
      return "replace_back(" +
             rules.erasable_pairs().at(static_cast<std::size_t>(a.target)) +
             ")";
    case ActionKind::RotateReplace: return "rotate_replace";
  }
  throw std::logic_error("Action: bad kind");
}

inline std::vector<std::string> action_names(const RuleSet& rules) {
  std::vector<std::string> names;
  for (const Action& a : action_space(rules)) {
    names.push_back(action_name(a, rules));
  }
  return names;
}

enum class ActionOutcome {
  CaretMove,
  RotateTrue,
  RotateFalse,
  ReplaceTrue,
  ReplaceBack,
  ReplaceFalse,
  RotateReplace,
};

inline const char* to_text(ActionOutcome o) {
  switch (o) {
    case ActionOutcome::CaretMove: return "caret_move";
    case ActionOutcome::RotateTrue: return "rotate_true";
    case ActionOutcome::RotateFalse: return "rotate_false";
    case ActionOutcome::ReplaceTrue: return "replace_true";
    case ActionOutcome::ReplaceBack: return "replace_back";
    case ActionOutcome::ReplaceFalse: return "replace_false";
    case ActionOutcome::RotateReplace: return "rotate_replace";
  }
  return "?";
}

// Per-outcome rewards. The defaults are the untangler's schedule; tangler()
// mirrors it so insertions pay and erasures cost.
struct RewardTable {
  double caret_move = 0.0;
  double rotate_true = 0.0;
  double rotate_false = 0.0;
  double replace_true = 1.0;
  double replace_back = -2.0;
  double replace_false = -1.0;
  double rotate_replace = 1.0;

  double reward(ActionOutcome o) const {
    switch (o) {
      case ActionOutcome::CaretMove: return caret_move;
      case ActionOutcome::RotateTrue: return rotate_true;
      case ActionOutcome::RotateFalse: return rotate_false;
      case ActionOutcome::ReplaceTrue: return replace_true;
      case ActionOutcome::ReplaceBack: return replace_back;
      case ActionOutcome::ReplaceFalse: return replace_false;
      case ActionOutcome::RotateReplace: return rotate_replace;
    }
    throw std::logic_error("RewardTable: bad outcome");
  }

  static RewardTable untangler() { return {}; }

  static RewardTable tangler() {
    RewardTable t;
    t.replace_true = -2.0;
    t.replace_back = 1.0;
    t.replace_false = -1.0;
    t.rotate_replace = 1.0;
    return t;
  }
};

struct EnvConfig {
  RuleSet rules = RuleSet::three_strand();
  std::size_t n = 8;
  std::size_t steps_budget = 16;
  Mode mode = Mode::Untangle;
  std::size_t scramble_depth = 8;  // Untangle mode only
  RewardTable rewards;
  double terminal_bonus = 0.0;  // added to the reward of a solving step

  void validate() const {
    if (n < rules.window()) {
      throw std::invalid_argument("EnvConfig: n must be >= window");
    }
    if (steps_budget < 1) {
      throw std::invalid_argument("EnvConfig: steps_budget must be >= 1");
    }
  }
};

struct EnvState {
  BraidWord word;
  std::size_t caret = 0;
  std::size_t steps_taken = 0;
};

// The agent sees only the window under the caret, nothing else: no caret
// index, no remainder of the word. On two strands that is one of the nine
// pairs over {a,b,1}; the resulting state aliasing is intentional.
using Observation = std::string;

inline Observation observe(const EnvState& state, const RuleSet& rules) {
  return state.word.text().substr(state.caret, rules.window());
}

inline bool solved(const EnvState& state) { return state.word.all_identity(); }

inline bool is_terminal(const EnvState& state, const EnvConfig& config) {
  if (config.mode == Mode::Untangle && solved(state)) return true;
  return state.steps_taken >= config.steps_budget;
}

// The moves the caret can actually perform: pair rewrites at caret
// positions (0 .. n-window) and relation triples where they fit. On three
// strands this is narrower than the pattern-fit move set, which reaches the
// final pair the caret cannot.
inline std::vector<Move> reachable_moves(const BraidWord& word,
                                         const RuleSet& rules) {
  std::vector<Move> moves;
  if (word.size() < rules.window()) return moves;
  for (std::size_t p = 0; p + rules.window() <= word.size(); ++p) {
    auto at_p = applicable_moves(word, p, rules);
    moves.insert(moves.end(), at_p.begin(), at_p.end());
  }
  return moves;
}

// Walks k uniformly random caret-reachable moves from the all-identity word
// and reports them; the result is untanglable in at most k moves by
// reversal, staying inside the environment's reach.
inline std::pair<BraidWord, std::vector<Move>> scramble_with_moves(
    std::size_t n, std::size_t k, const RuleSet& rules, Rng& rng) {
  BraidWord word = identity_word(n);
  std::vector<Move> applied;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Move> options = reachable_moves(word, rules);
    if (options.empty()) break;  // cannot happen at n >= window
    const Move& pick = options[uniform_index(rng, options.size())];
    word = apply_move(word, pick, rules);
    applied.push_back(pick);
  }
  return {word, applied};
}

inline BraidWord scramble(std::size_t n, std::size_t k, const RuleSet& rules,
                          Rng& rng) {
  return scramble_with_moves(n, k, rules, rng).first;
}

// Tangle mode starts from the untangled board; Untangle mode from a scramble
// that is solvable by construction. Caret at 0 either way.
inline EnvState reset(const EnvConfig& config, Rng& rng) {
  config.validate();
  if (config.mode == Mode::Tangle) {
    return {identity_word(config.n), 0, 0};
  }
  return {scramble(config.n, config.scramble_depth, config.rules, rng), 0, 0};
}

struct StepResult {
  EnvState state;
  double reward = 0.0;
  bool done = false;
  ActionOutcome outcome = ActionOutcome::CaretMove;
  // The rewrite performed, when a pattern matched. Replaying these inverted
  // and reversed restores the pre-episode word.
  std::optional<Move> applied;
};

// Applies one action. Pair actions read (caret, caret+1); the relation action
// reads the full three-letter window. Failed rewrites leave the word alone
// and only differ in outcome. Caret moves clamp at the boundary.
inline StepResult step(const EnvState& state, const Action& action,
                       const EnvConfig& config) {
  const RuleSet& rules = config.rules;
  if (state.word.size() != config.n ||
      state.caret + rules.window() > config.n) {
    throw std::logic_error("step: state does not match config");
  }
  if (is_terminal(state, config)) {
    throw std::logic_error("step: episode already finished");
  }

  StepResult result;
  result.state = state;
  EnvState& next = result.state;
  const std::size_t caret_max = config.n - rules.window();
  const std::string pair = state.word.text().substr(state.caret, 2);

  auto rewrite = [&](Move m, ActionOutcome outcome) {
    next.word = apply_move(state.word, m, rules);
    result.outcome = outcome;
    result.applied = std::move(m);
  };

  switch (action.kind) {
    case ActionKind::MoveCaretLeft:
      if (next.caret > 0) --next.caret;
      result.outcome = ActionOutcome::CaretMove;
      break;
    case ActionKind::MoveCaretRight:
      if (next.caret < caret_max) ++next.caret;
      result.outcome = ActionOutcome::CaretMove;
      break;
    case ActionKind::Rotate:
      if (rules.is_swap_pair(pair)) {
        rewrite({Move::Kind::SwapPair, state.caret, pair, {pair[1], pair[0]}},
                ActionOutcome::RotateTrue);
      } else {
        result.outcome = ActionOutcome::RotateFalse;
      }
      break;
    case ActionKind::Replace:
      if (rules.is_erasable(pair)) {
        rewrite({Move::Kind::ErasePair, state.caret, pair, "11"},
                ActionOutcome::ReplaceTrue);
      } else {
        result.outcome = ActionOutcome::ReplaceFalse;
      }
      break;
    case ActionKind::ReplaceBack: {
      if (action.target < 0 ||
          action.target >= static_cast<int>(rules.erasable_pairs().size())) {
        throw std::invalid_argument("step: replace_back target out of range");
      }
      const std::string& target =
          rules.erasable_pairs()[static_cast<std::size_t>(action.target)];
      if (pair == "11") {
        rewrite({Move::Kind::InsertPair, state.caret, "11", target},
                ActionOutcome::ReplaceBack);
      } else {
        result.outcome = ActionOutcome::ReplaceFalse;
      }
      break;
    }
    case ActionKind::RotateReplace: {
      if (!rules.three()) {
        throw std::invalid_argument(
            "step: rotate_replace requires the three-strand rule set");
      }
      const std::string triple = state.word.text().substr(state.caret, 3);
      result.outcome = ActionOutcome::RotateFalse;
      for (const auto& [from, to] : rules.relation_triples()) {
        if (triple == from) {
          rewrite({Move::Kind::BraidRelation, state.caret, from, to},
                  ActionOutcome::RotateReplace);
          break;
        }
      }
      break;
    }
  }

  ++next.steps_taken;
  result.reward = config.rewards.reward(result.outcome);
  if (config.mode == Mode::Untangle && solved(next)) {
    result.done = true;
    result.reward += config.terminal_bonus;
  }
  if (next.steps_taken >= config.steps_budget) result.done = true;
  return result;
}

}  // namespace braidq
