#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidq/env.hpp"
#include "braidq/rng.hpp"

namespace braidq {

struct Hyperparams {
  double alpha = 0.1;    // learning rate
  double gamma = 0.9;    // discount factor
  double epsilon = 0.1;  // exploration probability, constant (no decay)
  std::size_t episodes = 10000;
  std::size_t steps_budget = 16;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("Hyperparams: alpha must be in (0,1]");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
      throw std::invalid_argument("Hyperparams: gamma must be in [0,1)");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
      throw std::invalid_argument("Hyperparams: epsilon must be in [0,1]");
    }
    if (episodes < 1) {
      throw std::invalid_argument("Hyperparams: episodes must be >= 1");
    }
    if (steps_budget < 1) {
      throw std::invalid_argument("Hyperparams: steps_budget must be >= 1");
    }
  }
};

// Shortest decimal form that round-trips the exact double.
inline std::string format_value(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::logic_error("format_value");
  return std::string(buf, ptr);
}

// One row per observation, one column per action index. Unseen entries read
// as the initial value (0 by default; set it higher for optimistic starts).
class QTable {
 public:
  explicit QTable(std::size_t num_actions, double initial_value = 0.0)
      : num_actions_(num_actions), initial_value_(initial_value) {
    if (num_actions < 1) throw std::invalid_argument("QTable: no actions");
  }

  std::size_t num_actions() const { return num_actions_; }
  std::size_t row_count() const { return rows_.size(); }

  double get(const Observation& obs, std::size_t action) const {
    check_action(action);
    auto it = rows_.find(obs);
    return it == rows_.end() ? initial_value_ : it->second[action];
  }

  void set(const Observation& obs, std::size_t action, double value) {
    check_action(action);
    row(obs)[action] = value;
  }

  // Max of Q(obs, a) over the given actions; an empty set reads as 0, the
  // bootstrap convention for terminal transitions.
  double max_value(const Observation& obs,
                   const std::vector<std::size_t>& actions) const {
    if (actions.empty()) return 0.0;
    double best = get(obs, actions.front());
    for (std::size_t i = 1; i < actions.size(); ++i) {
      best = std::max(best, get(obs, actions[i]));
    }
    return best;
  }

  // Lowest-index maximizer; the fixed canonical order breaks ties so greedy
  // play is reproducible.
  std::size_t argmax(const Observation& obs,
                     const std::vector<std::size_t>& actions) const {
    if (actions.empty()) throw std::invalid_argument("argmax: no actions");
    std::size_t best = actions.front();
    double best_value = get(obs, best);
    for (std::size_t i = 1; i < actions.size(); ++i) {
      const double v = get(obs, actions[i]);
      if (v > best_value) {
        best_value = v;
        best = actions[i];
      }
    }
    return best;
  }

  // Plain-text dump, one "observation<TAB>action<TAB>value" row per entry,
  // sorted lexicographically. Suitable for golden files.
  std::string to_text(const std::vector<std::string>& action_names) const {
    if (action_names.size() != num_actions_) {
      throw std::invalid_argument("to_text: one name per action required");
    }
    std::vector<std::string> lines;
    lines.reserve(rows_.size() * num_actions_);
    for (const auto& [obs, values] : rows_) {
      for (std::size_t a = 0; a < num_actions_; ++a) {
        lines.push_back(obs + "\t" + action_names[a] + "\t" +
                        format_value(values[a]));
      }
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& line : lines) {
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  void check_action(std::size_t action) const {
    if (action >= num_actions_) {
      throw std::out_of_range("QTable: action index out of range");
    }
  }

  std::vector<double>& row(const Observation& obs) {
    auto it = rows_.find(obs);
    if (it == rows_.end()) {
      it = rows_.emplace(obs, std::vector<double>(num_actions_,
                                                  initial_value_))
               .first;
    }
    return it->second;
  }

  std::size_t num_actions_;
  double initial_value_;
  std::unordered_map<Observation, std::vector<double>> rows_;
};

inline std::vector<std::size_t> all_action_indices(std::size_t count) {
  std::vector<std::size_t> indices(count);
  for (std::size_t i = 0; i < count; ++i) indices[i] = i;
  return indices;
}

// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)). Touches exactly
// one entry. Pass an empty next-action set on terminal transitions.
inline void bellman_update(QTable& q, const Observation& s, std::size_t a,
                           double reward, const Observation& s_next,
                           const std::vector<std::size_t>& next_actions,
                           const Hyperparams& hp) {
  const double current = q.get(s, a);
  const double target = reward + hp.gamma * q.max_value(s_next, next_actions);
  q.set(s, a, current + hp.alpha * (target - current));
}

// Epsilon-greedy: uniform with probability epsilon, else the greedy argmax.
inline std::size_t select_action(const QTable& q, const Observation& s,
                                 const std::vector<std::size_t>& actions,
                                 double epsilon, Rng& rng) {
  if (actions.empty()) throw std::invalid_argument("select_action: no actions");
  if (uniform_real(rng) < epsilon) {
    return actions[uniform_index(rng, actions.size())];
  }
  return q.argmax(s, actions);
}

struct EpisodeLog {
  std::size_t episode = 0;
  double total_reward = 0.0;
  std::size_t steps_used = 0;
  bool solved = false;
};

struct TrainResult {
  QTable q;
  std::vector<EpisodeLog> logs;
};

// Single-agent training: episodes of reset -> (select, step, update)*.
// The hyperparameter budget is applied to the environment, so one knob
// controls episode length. Identical seeds give identical results.
inline TrainResult train(const EnvConfig& config, const Hyperparams& hp) {
  config.validate();
  hp.validate();
  EnvConfig cfg = config;
  cfg.steps_budget = hp.steps_budget;

  const std::vector<Action> space = action_space(cfg.rules);
  const std::vector<std::size_t> actions = all_action_indices(space.size());
  Rng rng(hp.seed);
  TrainResult result{QTable(space.size()), {}};
  result.logs.reserve(hp.episodes);

  for (std::size_t episode = 0; episode < hp.episodes; ++episode) {
    EnvState state = reset(cfg, rng);
    if (is_terminal(state, cfg)) {
      // Scrambles of depth 0 begin solved; the untangler collects the
      // terminal bonus without acting.
      result.logs.push_back(
          {episode, solved(state) ? cfg.terminal_bonus : 0.0, 0,
           solved(state)});
      continue;
    }
    double total = 0.0;
    for (;;) {
      const Observation obs = observe(state, cfg.rules);
      const std::size_t a =
          select_action(result.q, obs, actions, hp.epsilon, rng);
      const StepResult res = step(state, space[a], cfg);
      const Observation obs_next = observe(res.state, cfg.rules);
      bellman_update(result.q, obs, a, res.reward, obs_next,
                     res.done ? std::vector<std::size_t>{} : actions, hp);
      total += res.reward;
      state = res.state;
      if (res.done) break;
    }
    result.logs.push_back({episode, total, state.steps_taken, solved(state)});
  }
  return result;
}

}  // namespace braidq
