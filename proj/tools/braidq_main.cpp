// braidq: braid tangling and untangling with tabular Q-learning.
//
// Subcommands:
//   train2    train the single-agent two-strand untangler, write episode CSV
//   selfplay  run the three-strand tangler/untangler game over a grid
//   oracle    decide untanglability by breadth-first search
//   render    draw a braid word as an SVG strand diagram

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidq/braidq.hpp"

namespace {

// key=value per line, blank lines and '#' comments allowed. Command-line
// flags take precedence: keys are applied only to options not already set.
void apply_config_file(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": unknown config key '" + key + "'");
    }
    if (opt->count() > 0) continue;  // flag given on the command line wins
    opt->add_result(value);
    opt->run_callback();
  }
}

struct Train2Args {
  std::size_t n = 8;
  std::size_t episodes = 10000;
  std::size_t steps = 16;
  std::string ruleset = "inverse";
  std::size_t scramble_depth = 8;
  double alpha = 0.1;
  double gamma = 0.9;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::string out = "train2.csv";
  std::string config;
};

struct SelfplayArgs {
  std::vector<std::size_t> n = {8};
  std::vector<std::size_t> episodes = {1000};
  std::vector<std::size_t> steps = {20};
  std::vector<std::uint64_t> seeds = {0};
  double alpha = 0.1;
  double gamma = 0.9;
  double epsilon = 0.1;
  std::string out_dir = "selfplay_out";
  std::string config;
};

struct OracleArgs {
  std::string word;
  std::string ruleset = "threestrand";
  std::size_t max_depth = 0;  // 0: default to twice the word length
  std::string config;
};

struct RenderArgs {
  std::string word;
  std::string ruleset = "threestrand";
  std::string out = "braid.svg";
  std::string config;
};

int run_train2(const Train2Args& args) {
  braidq::EnvConfig cfg;
  cfg.rules = braidq::RuleSet::from_name(args.ruleset);
  cfg.n = args.n;
  cfg.mode = braidq::Mode::Untangle;
  cfg.scramble_depth = args.scramble_depth;
  cfg.steps_budget = args.steps;

  braidq::Hyperparams hp;
  hp.alpha = args.alpha;
  hp.gamma = args.gamma;
  hp.epsilon = args.epsilon;
  hp.episodes = args.episodes;
  hp.steps_budget = args.steps;
  hp.seed = args.seed;

  cfg.validate();
  hp.validate();

  const braidq::TrainResult result = braidq::train(cfg, hp);
  braidq::write_text_file(args.out, braidq::episode_csv(result.logs));

  std::size_t solved = 0;
  for (const auto& log : result.logs) solved += log.solved ? 1 : 0;
  std::cout << "trained " << args.episodes << " episodes on n=" << args.n
            << " (" << args.ruleset << "), solved " << solved << "/"
            << args.episodes << ", log written to " << args.out << "\n";
  return 0;
}

int run_selfplay(const SelfplayArgs& args) {
  braidq::GameConfig base;
  base.hp_tangler.alpha = args.alpha;
  base.hp_tangler.gamma = args.gamma;
  base.hp_tangler.epsilon = args.epsilon;
  base.hp_untangler = base.hp_tangler;

  const std::filesystem::path dir(args.out_dir);
  std::filesystem::create_directories(dir);

  std::vector<braidq::WinStats> grid;
  for (std::size_t n : args.n) {
    for (std::size_t steps : args.steps) {
      for (std::size_t episodes : args.episodes) {
        double sum = 0.0;
        for (std::uint64_t seed : args.seeds) {
          braidq::GameConfig cell = base;
          cell.n = n;
          cell.steps_budget = steps;
          cell.episodes = episodes;
          cell.seed = seed;
          cell.validate();
          const braidq::SelfplayResult run = braidq::train_selfplay(cell);
          sum += run.stats.untangler_win_rate;
          const std::string name = "transcript_n" + std::to_string(n) +
                                   "_ep" + std::to_string(episodes) + "_st" +
                                   std::to_string(steps) + "_seed" +
                                   std::to_string(seed) + ".csv";
          braidq::write_text_file(dir / name,
                                  braidq::transcript_csv(run.games));
        }
        grid.push_back({n, episodes, steps,
                        sum / static_cast<double>(args.seeds.size())});
      }
    }
  }

  braidq::write_text_file(dir / "summary.csv", braidq::winstats_csv(grid));
  const std::string table = braidq::format_winrate_table(
      grid, args.n, args.episodes, args.steps);
  braidq::write_text_file(dir / "table.txt", table);
  std::cout << table;
  return 0;
}

int run_oracle(const OracleArgs& args) {
  const braidq::RuleSet rules = braidq::RuleSet::from_name(args.ruleset);
  const braidq::BraidWord word = braidq::parse_word(args.word, rules);
  const std::size_t depth =
      args.max_depth > 0 ? args.max_depth : 2 * word.size();
  const auto solution = braidq::bfs_untangle(word, rules, depth);
  if (solution) {
    std::cout << "UNTANGLABLE " << solution->size();
    for (const braidq::Move& m : *solution) {
      std::cout << " " << braidq::to_text(m);
    }
    std::cout << "\n";
  } else {
    std::cout << "NOT-FOUND within " << depth << "\n";
  }
  return 0;
}

int run_render(const RenderArgs& args) {
  const braidq::RuleSet rules = braidq::RuleSet::from_name(args.ruleset);
  const braidq::BraidWord word = braidq::parse_word(args.word, rules);
  braidq::write_text_file(args.out, braidq::render_svg(word, rules));
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid tangling and untangling with tabular Q-learning"};
  app.require_subcommand(1);

  Train2Args train2;
  CLI::App* t2 = app.add_subcommand(
      "train2", "train the single-agent two-strand untangler");
  t2->add_option("--config", train2.config, "key=value config file");
  t2->add_option("--n", train2.n, "word length")->check(CLI::Range(2, 1000));
  t2->add_option("--episodes", train2.episodes, "training episodes")
      ->check(CLI::PositiveNumber);
  t2->add_option("--steps", train2.steps, "steps budget per episode")
      ->check(CLI::PositiveNumber);
  t2->add_option("--ruleset", train2.ruleset, "move system")
      ->check(CLI::IsMember({"inverse", "involutive"}));
  t2->add_option("--scramble-depth", train2.scramble_depth,
                 "moves used to scramble each episode's start word");
  t2->add_option("--alpha", train2.alpha, "learning rate");
  t2->add_option("--gamma", train2.gamma, "discount factor");
  t2->add_option("--epsilon", train2.epsilon, "exploration probability");
  t2->add_option("--seed", train2.seed, "random seed");
  t2->add_option("--out", train2.out, "episode CSV path");

  SelfplayArgs selfplay;
  CLI::App* sp = app.add_subcommand(
      "selfplay", "train the three-strand tangler/untangler game");
  sp->add_option("--config", selfplay.config, "key=value config file");
  sp->add_option("--n", selfplay.n, "word lengths (comma separated)")
      ->delimiter(',');
  sp->add_option("--episodes", selfplay.episodes,
                 "episode counts (comma separated)")
      ->delimiter(',');
  sp->add_option("--steps", selfplay.steps,
                 "per-player step budgets (comma separated)")
      ->delimiter(',');
  sp->add_option("--seeds", selfplay.seeds, "seeds (comma separated)")
      ->delimiter(',');
  sp->add_option("--alpha", selfplay.alpha, "learning rate, both players");
  sp->add_option("--gamma", selfplay.gamma, "discount factor, both players");
  sp->add_option("--epsilon", selfplay.epsilon,
                 "exploration probability, both players");
  sp->add_option("--out-dir", selfplay.out_dir,
                 "directory for transcripts and the summary");

  OracleArgs oracle;
  CLI::App* oc = app.add_subcommand(
      "oracle", "decide untanglability by breadth-first search");
  oc->add_option("--config", oracle.config, "key=value config file");
  oc->add_option("--word", oracle.word, "braid word")->required();
  oc->add_option("--ruleset", oracle.ruleset, "move system")
      ->check(CLI::IsMember({"inverse", "involutive", "threestrand"}));
  oc->add_option("--max-depth", oracle.max_depth,
                 "search depth (default: twice the word length)");

  RenderArgs render;
  CLI::App* rd =
      app.add_subcommand("render", "draw a braid word as an SVG diagram");
  rd->add_option("--config", render.config, "key=value config file");
  rd->add_option("--word", render.word, "braid word")->required();
  rd->add_option("--ruleset", render.ruleset, "move system (sets strand count)")
      ->check(CLI::IsMember({"inverse", "involutive", "threestrand"}));
  rd->add_option("--out", render.out, "SVG output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (t2->parsed() && !train2.config.empty()) {
      apply_config_file(*t2, train2.config);
    }
    if (sp->parsed() && !selfplay.config.empty()) {
      apply_config_file(*sp, selfplay.config);
    }
    if (oc->parsed() && !oracle.config.empty()) {
      apply_config_file(*oc, oracle.config);
    }
    if (rd->parsed() && !render.config.empty()) {
      apply_config_file(*rd, render.config);
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (t2->parsed()) return run_train2(train2);
    if (sp->parsed()) return run_selfplay(selfplay);
    if (oc->parsed()) return run_oracle(oracle);
    if (rd->parsed()) return run_render(render);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
