#include <catch2/catch_amalgamated.hpp>

#include "braidq/io.hpp"
#include "braidq/oracle.hpp"
#include "braidq/selfplay.hpp"
#include "test_helpers.hpp"

using namespace braidq;

namespace {

GameConfig small_game(std::size_t n, std::size_t steps, std::size_t episodes,
                      std::uint64_t seed = 0) {
  GameConfig cfg;
  cfg.n = n;
  cfg.steps_budget = steps;
  cfg.episodes = episodes;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("play_game: a passive tangler hands over the solved board") {
  // All-zero table with greedy selection always picks move_caret_left, which
  // never tangles; the untangler wins at step zero.
  GameConfig cfg = small_game(8, 5, 1);
  cfg.hp_tangler.epsilon = 0.0;
  cfg.hp_untangler.epsilon = 0.0;
  QTable tq(9), uq(9);
  Rng rng(1);
  const GameResult result = play_game(tq, uq, cfg, rng, false);
  CHECK(result.tangled_word.all_identity());
  CHECK(result.untangler_won);
  CHECK(result.untangler_steps == 0);
  CHECK(result.untangler_reward == cfg.untangler_terminal);
  CHECK(result.tangler_reward == -cfg.tangler_terminal);
  CHECK(result.tangler_moves.empty());
}

TEST_CASE("play_game: one inserted pair, one greedy erase") {
  // Steer the tangler to insert Aa once and then idle; give the untangler a
  // table that prefers replace on any window opening with an erasable pair.
  GameConfig cfg = small_game(8, 4, 1);
  cfg.hp_tangler.epsilon = 0.0;
  cfg.hp_untangler.epsilon = 0.0;
  const RuleSet rules = cfg.rules();
  const auto space = action_space(rules);
  REQUIRE(space.size() == 9);

  QTable tq(9), uq(9);
  tq.set("111", 4, 1.0);  // replace_back(Aa) on the opening window
  for (const std::string& pair : rules.erasable_pairs()) {
    for (char tail : std::string("AaBb1")) {
      uq.set(pair + tail, 3, 1.0);  // replace
    }
  }

  Rng rng(2);
  const GameResult result = play_game(tq, uq, cfg, rng, false);
  CHECK(result.tangled_word.text() == "Aa111111");
  CHECK(result.untangler_won);
  CHECK(result.untangler_steps <= 2);
}

TEST_CASE("play_game: inverse replay of the tangler moves restores the board") {
  GameConfig cfg = small_game(8, 10, 1);
  cfg.hp_tangler.epsilon = 1.0;  // fully random tangler
  cfg.hp_untangler.epsilon = 1.0;
  const RuleSet rules = cfg.rules();
  QTable tq(9), uq(9);
  Rng rng(7);
  for (int game = 0; game < 25; ++game) {
    const GameResult result = play_game(tq, uq, cfg, rng, false);
    BraidWord w = result.tangled_word;
    for (auto it = result.tangler_moves.rbegin();
         it != result.tangler_moves.rend(); ++it) {
      w = apply_move(w, inverse_move(*it), rules);
    }
    CHECK(w.all_identity());
    CHECK(exponent_sum(result.tangled_word) == 0);
    CHECK(result.tangled_word.size() == cfg.n);
  }
}

TEST_CASE("train_selfplay: smoke run yields conserved tangles") {
  const SelfplayResult run = train_selfplay(small_game(7, 10, 10, 3));
  REQUIRE(run.games.size() == 10);
  for (const GameResult& g : run.games) {
    CHECK(exponent_sum(g.tangled_word) == 0);
    CHECK(g.tangled_word.size() == 7);
  }
  CHECK(run.stats.n == 7);
  CHECK(run.stats.episodes == 10);
  CHECK(run.stats.steps == 10);
  CHECK(run.stats.untangler_win_rate >= 0.0);
  CHECK(run.stats.untangler_win_rate <= 1.0);
}

TEST_CASE("train_selfplay: fixed seeds give identical transcripts") {
  const GameConfig cfg = small_game(7, 8, 40, 11);
  const SelfplayResult a = train_selfplay(cfg);
  const SelfplayResult b = train_selfplay(cfg);
  CHECK(transcript_csv(a.games) == transcript_csv(b.games));
  const auto names = action_names(cfg.rules());
  CHECK(a.tangler_q.to_text(names) == b.tangler_q.to_text(names));
  CHECK(a.untangler_q.to_text(names) == b.untangler_q.to_text(names));
}

TEST_CASE("train_selfplay: tangles stay solvable within the budget") {
  // Solvability is guaranteed by reversibility; cross-check with the search
  // oracle at a small size.
  const SelfplayResult run = train_selfplay(small_game(6, 6, 15, 5));
  for (const GameResult& g : run.games) {
    CHECK(bfs_untangle(g.tangled_word, RuleSet::three_strand(), 6).has_value());
  }
}

TEST_CASE("winrate_grid: a single cell equals a direct training run") {
  GameConfig base;
  const auto grid = winrate_grid({7}, {30}, {10}, {21}, base);
  REQUIRE(grid.size() == 1);

  GameConfig direct = base;
  direct.n = 7;
  direct.episodes = 30;
  direct.steps_budget = 10;
  direct.seed = 21;
  const SelfplayResult run = train_selfplay(direct);
  CHECK(grid[0].untangler_win_rate == run.stats.untangler_win_rate);
  CHECK(grid[0].n == 7);
  CHECK(grid[0].episodes == 30);
  CHECK(grid[0].steps == 10);

  CHECK_THROWS_AS(winrate_grid({}, {10}, {10}, {1}, base),
                  std::invalid_argument);
}

TEST_CASE("transcript and summary csv shapes") {
  GameResult g;
  g.tangled_word = BraidWord("Aa11111");
  g.untangler_won = true;
  g.untangler_steps = 2;
  CHECK(transcript_csv({g}) ==
        "episode,winner,tangled_word,untangler_steps\n"
        "0,untangler,Aa11111,2\n");
  CHECK(winstats_csv({{7, 1000, 20, 0.4}}) ==
        "n,episodes,steps,untangler_win_rate\n"
        "7,1000,20,0.4\n");
}

TEST_CASE("winrate table formats as a length-by-cell grid") {
  std::vector<WinStats> grid;
  for (std::size_t n : {7, 8}) {
    for (std::size_t steps : {20, 100}) {
      for (std::size_t ep : {1000, 10000}) {
        grid.push_back({n, ep, steps, 0.5});
      }
    }
  }
  const std::string table = format_winrate_table(grid, {7, 8}, {1000, 10000},
                                                 {20, 100});
  CHECK(testing::count_occurrences(table, "\n") == 3);  // header + 2 rows
  CHECK(table.find("ep=1000,steps=20") != std::string::npos);
  CHECK(table.find("ep=10000,steps=100") != std::string::npos);
  CHECK(testing::count_occurrences(table, "50%") == 8);
}

TEST_CASE("game config validation") {
  CHECK_THROWS_AS(small_game(2, 10, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(small_game(7, 0, 10).validate(), std::invalid_argument);
  CHECK_THROWS_AS(small_game(7, 10, 0).validate(), std::invalid_argument);
  CHECK_NOTHROW(small_game(7, 10, 10).validate());
}
