#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidq/env.hpp"
#include "braidq/qlearn.hpp"

namespace braidq {

// The three-strand game: the tangler plays a fixed number of steps from the
// untangled board, then the untangler gets the result and its own budget.
struct GameConfig {
  std::size_t n = 8;
  std::size_t steps_budget = 20;  // per player, each gets the full budget
  std::size_t episodes = 1000;
  RewardTable tangler_rewards = RewardTable::tangler();
  RewardTable untangler_rewards = RewardTable::untangler();
  // Terminal stakes: the tangler wins +tangler_terminal when the untangler
  // fails and -tangler_terminal when it succeeds; the untangler earns
  // +untangler_terminal on success.
  double tangler_terminal = 10.0;
  double untangler_terminal = 10.0;
  Hyperparams hp_tangler;
  Hyperparams hp_untangler;
  std::uint64_t seed = 0;
  bool lowercase_relation = false;

  RuleSet rules() const {
    RuleSet r = RuleSet::three_strand();
    r.lowercase_relation = lowercase_relation;
    return r;
  }

  void validate() const {
    if (n < 3) throw std::invalid_argument("GameConfig: n must be >= 3");
    if (steps_budget < 1) {
      throw std::invalid_argument("GameConfig: steps_budget must be >= 1");
    }
    if (episodes < 1) {
      throw std::invalid_argument("GameConfig: episodes must be >= 1");
    }
  }
};

struct GameResult {
  BraidWord tangled_word;
  bool untangler_won = false;
  double tangler_reward = 0.0;
  double untangler_reward = 0.0;
  std::size_t untangler_steps = 0;
  // Rewrites the tangler performed, in order; inverting and reversing them
  // restores the all-identity word.
  std::vector<Move> tangler_moves;
};

struct WinStats {
  std::size_t n = 0;
  std::size_t episodes = 0;
  std::size_t steps = 0;
  // Measured over the final 10% of training games, exploration still active.
  double untangler_win_rate = 0.0;
};

// One game: tangler phase, handoff with the caret reset, untangler phase.
// With `learn`, both tables receive updates from their own phases; the
// tangler's last transition is held back until the game outcome is known,
// then updated with the terminal stake folded into its reward.
inline GameResult play_game(QTable& tangler_q, QTable& untangler_q,
                            const GameConfig& config, Rng& rng, bool learn) {
  config.validate();
  const RuleSet rules = config.rules();
  const std::vector<Action> space = action_space(rules);
  const std::vector<std::size_t> actions = all_action_indices(space.size());

  EnvConfig tangle_env;
  tangle_env.rules = rules;
  tangle_env.n = config.n;
  tangle_env.steps_budget = config.steps_budget;
  tangle_env.mode = Mode::Tangle;
  tangle_env.rewards = config.tangler_rewards;

  EnvConfig untangle_env = tangle_env;
  untangle_env.mode = Mode::Untangle;
  untangle_env.rewards = config.untangler_rewards;
  untangle_env.terminal_bonus = config.untangler_terminal;

  GameResult result;

  // Phase 1: the tangler's episode ends only on budget, so its final step is
  // the budget's last.
  struct Transition {
    Observation s;
    std::size_t a = 0;
    double reward = 0.0;
    Observation s_next;
  };
  std::optional<Transition> held_back;

  EnvState state{identity_word(config.n), 0, 0};
  for (;;) {
    const Observation obs = observe(state, rules);
    const std::size_t a = select_action(tangler_q, obs, actions,
                                        config.hp_tangler.epsilon, rng);
    const StepResult res = step(state, space[a], tangle_env);
    const Observation obs_next = observe(res.state, rules);
    if (res.applied) result.tangler_moves.push_back(*res.applied);
    result.tangler_reward += res.reward;
    if (learn) {
      if (res.done) {
        held_back = Transition{obs, a, res.reward, obs_next};
      } else {
        bellman_update(tangler_q, obs, a, res.reward, obs_next, actions,
                       config.hp_tangler);
      }
    }
    state = res.state;
    if (res.done) break;
  }
  result.tangled_word = state.word;

  // Phase 2: the untangler starts fresh on the tangled word.
  EnvState ut{result.tangled_word, 0, 0};
  if (solved(ut)) {
    result.untangler_won = true;
    result.untangler_reward = config.untangler_terminal;
  } else {
    for (;;) {
      const Observation obs = observe(ut, rules);
      const std::size_t a = select_action(untangler_q, obs, actions,
                                          config.hp_untangler.epsilon, rng);
      const StepResult res = step(ut, space[a], untangle_env);
      if (learn) {
        bellman_update(untangler_q, obs, a, res.reward,
                       observe(res.state, rules),
                       res.done ? std::vector<std::size_t>{} : actions,
                       config.hp_untangler);
      }
      result.untangler_reward += res.reward;
      ut = res.state;
      if (res.done) break;
    }
    result.untangler_won = solved(ut);
    result.untangler_steps = ut.steps_taken;
  }

  const double stake =
      result.untangler_won ? -config.tangler_terminal : config.tangler_terminal;
  result.tangler_reward += stake;
  if (learn && held_back) {
    bellman_update(tangler_q, held_back->s, held_back->a,
                   held_back->reward + stake, held_back->s_next, {},
                   config.hp_tangler);
  }
  return result;
}

struct SelfplayResult {
  QTable tangler_q;
  QTable untangler_q;
  std::vector<GameResult> games;
  WinStats stats;
};

// Both players learn from game 1 on; fixed seed, fixed transcripts.
inline SelfplayResult train_selfplay(const GameConfig& config) {
  config.validate();
  const std::size_t num_actions = action_space(config.rules()).size();
  SelfplayResult result{QTable(num_actions), QTable(num_actions), {}, {}};
  Rng rng(config.seed);
  result.games.reserve(config.episodes);
  for (std::size_t i = 0; i < config.episodes; ++i) {
    result.games.push_back(
        play_game(result.tangler_q, result.untangler_q, config, rng, true));
  }
  const std::size_t tail = std::max<std::size_t>(1, config.episodes / 10);
  std::size_t wins = 0;
  for (std::size_t i = config.episodes - tail; i < config.episodes; ++i) {
    wins += result.games[i].untangler_won ? 1 : 0;
  }
  result.stats = {config.n, config.episodes, config.steps_budget,
                  static_cast<double>(wins) / static_cast<double>(tail)};
  return result;
}

// One WinStats per (length, episodes, steps) cell, win rate averaged over
// seeds. Cells are emitted lengths-major, then steps, then episode counts,
// so summaries read row-by-row per length.
inline std::vector<WinStats> winrate_grid(
    const std::vector<std::size_t>& lengths,
    const std::vector<std::size_t>& episode_counts,
    const std::vector<std::size_t>& step_counts,
    const std::vector<std::uint64_t>& seeds, const GameConfig& base) {
  if (lengths.empty() || episode_counts.empty() || step_counts.empty() ||
      seeds.empty()) {
    throw std::invalid_argument("winrate_grid: empty grid axis");
  }
  std::vector<WinStats> grid;
  for (std::size_t n : lengths) {
    for (std::size_t steps : step_counts) {
      for (std::size_t episodes : episode_counts) {
        double sum = 0.0;
        for (std::uint64_t seed : seeds) {
          GameConfig cell = base;
          cell.n = n;
          cell.steps_budget = steps;
          cell.episodes = episodes;
          cell.seed = seed;
          sum += train_selfplay(cell).stats.untangler_win_rate;
        }
        grid.push_back(
            {n, episodes, steps, sum / static_cast<double>(seeds.size())});
      }
    }
  }
  return grid;
}

}  // namespace braidq
