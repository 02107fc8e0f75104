#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidq/qlearn.hpp"
#include "braidq/selfplay.hpp"

namespace braidq {

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out) throw std::runtime_error("short write to " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline std::string episode_csv(const std::vector<EpisodeLog>& logs) {
  std::string out = "episode,reward,steps_used,solved\n";
  for (const EpisodeLog& log : logs) {
    out += std::to_string(log.episode) + "," + format_value(log.total_reward) +
           "," + std::to_string(log.steps_used) + "," +
           (log.solved ? "true" : "false") + "\n";
  }
  return out;
}

inline std::string transcript_csv(const std::vector<GameResult>& games) {
  std::string out = "episode,winner,tangled_word,untangler_steps\n";
  for (std::size_t i = 0; i < games.size(); ++i) {
    const GameResult& g = games[i];
    out += std::to_string(i) + "," +
           (g.untangler_won ? "untangler" : "tangler") + "," +
           g.tangled_word.text() + "," + std::to_string(g.untangler_steps) +
           "\n";
  }
  return out;
}

inline std::string winstats_csv(const std::vector<WinStats>& stats) {
  std::string out = "n,episodes,steps,untangler_win_rate\n";
  for (const WinStats& s : stats) {
    out += std::to_string(s.n) + "," + std::to_string(s.episodes) + "," +
           std::to_string(s.steps) + "," + format_value(s.untangler_win_rate) +
           "\n";
  }
  return out;
}

// Win-rate text table: one row per input length, one
// column per (episodes, steps) cell, win rates as percentages.
inline std::string format_winrate_table(
    const std::vector<WinStats>& grid, const std::vector<std::size_t>& lengths,
    const std::vector<std::size_t>& episode_counts,
    const std::vector<std::size_t>& step_counts) {
  auto cell = [&](std::size_t n, std::size_t episodes,
                  std::size_t steps) -> const WinStats& {
    for (const WinStats& s : grid) {
      if (s.n == n && s.episodes == episodes && s.steps == steps) return s;
    }
    throw std::invalid_argument("format_winrate_table: missing grid cell");
  };
  auto pad = [](std::string s, std::size_t width) {
    while (s.size() < width) s += ' ';
    return s;
  };
  const std::size_t col = 18;
  std::string out = pad("input_length", col);
  for (std::size_t steps : step_counts) {
    for (std::size_t episodes : episode_counts) {
      out += pad("ep=" + std::to_string(episodes) +
                     ",steps=" + std::to_string(steps),
                 col);
    }
  }
  out += '\n';
  for (std::size_t n : lengths) {
    out += pad(std::to_string(n), col);
    for (std::size_t steps : step_counts) {
      for (std::size_t episodes : episode_counts) {
        const double pct = cell(n, episodes, steps).untangler_win_rate * 100.0;
        const double rounded = static_cast<double>(
                                   static_cast<long long>(pct * 10.0 + 0.5)) /
                               10.0;
        out += pad(format_value(rounded) + "%", col);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace braidq
