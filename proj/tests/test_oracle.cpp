#include <catch2/catch_amalgamated.hpp>
#include <functional>

#include "braidq/oracle.hpp"
#include "test_helpers.hpp"

using namespace braidq;

namespace {

// All 3^n words over {a, b, 1}.
void for_each_two_strand_word(std::size_t n,
                              const std::function<void(const BraidWord&)>& f) {
  const std::string alphabet = "ab1";
  std::string text(n, 'a');
  std::vector<std::size_t> digits(n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) text[i] = alphabet[digits[i]];
    f(BraidWord(text));
    std::size_t i = 0;
    while (i < n && ++digits[i] == 3) digits[i++] = 0;
    if (i == n) break;
  }
}

}  // namespace

TEST_CASE("bfs_untangle: already solved words need no moves") {
  const auto res = bfs_untangle(identity_word(4), RuleSet::three_strand(), 8);
  REQUIRE(res.has_value());
  CHECK(res->empty());
}

TEST_CASE("bfs_untangle: a single erase suffices") {
  const RuleSet rules = RuleSet::three_strand();
  const auto res = bfs_untangle(parse_word("Aa11", rules), rules, 8);
  REQUIRE(res.has_value());
  REQUIRE(res->size() == 1);
  CHECK((*res)[0] == Move{Move::Kind::ErasePair, 0, "Aa", "11"});
}

TEST_CASE("bfs_untangle: solutions replay to the identity word") {
  const RuleSet rules = RuleSet::two_strand_inverse();
  const BraidWord word = parse_word("a1b1ab", rules);
  const auto res = bfs_untangle(word, rules, 12);
  REQUIRE(res.has_value());
  BraidWord w = word;
  for (const Move& m : *res) w = apply_move(w, m, rules);
  CHECK(w.all_identity());
}

TEST_CASE("bfs_untangle: hard trivial words untangle") {
  // Both need the relation toggled before any inverse pair appears, then a
  // long commuting phase; the shortest solutions run well past a dozen moves.
  const RuleSet rules = RuleSet::three_strand();
  for (const std::string text : {"aabaBBAB", "baBABaBb"}) {
    const BraidWord word = parse_word(text, rules);
    REQUIRE(exponent_sum(word) == 0);
    const auto res = bfs_untangle(word, rules, 24);
    REQUIRE(res.has_value());
    BraidWord w = word;
    for (const Move& m : *res) w = apply_move(w, m, rules);
    CHECK(w.all_identity());
  }
}

TEST_CASE("bfs_untangle: respects the depth bound") {
  const RuleSet rules = RuleSet::two_strand_inverse();
  const BraidWord word = parse_word("ab11", rules);
  CHECK(bfs_untangle(word, rules, 0) == std::nullopt);
  const auto res = bfs_untangle(word, rules, 1);
  REQUIRE(res.has_value());
  CHECK(res->size() == 1);
}

TEST_CASE("analytic oracles: worked examples") {
  const RuleSet inv = RuleSet::two_strand_inverse();
  CHECK(analytic_trivial_inverse(parse_word("ab11", inv)));
  CHECK_FALSE(analytic_trivial_inverse(parse_word("aab1", inv)));
  CHECK(analytic_trivial_inverse(parse_word("1111", inv)));

  CHECK(analytic_trivial_involutive(parse_word("abba", inv)));
  CHECK_FALSE(analytic_trivial_involutive(parse_word("abab", inv)));
  CHECK(analytic_trivial_involutive(parse_word("11", inv)));

  CHECK_THROWS_AS(analytic_trivial_inverse(BraidWord("Aa")),
                  std::invalid_argument);
  CHECK_THROWS_AS(analytic_trivial_involutive(BraidWord("Aa")),
                  std::invalid_argument);
}

TEST_CASE("oracle agreement: analytic equals exhaustive search") {
  // Every word over {a,b,1} up to length 5 here; the acceptance suite pushes
  // the same sweep to length 6.
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_two_strand_word(n, [&](const BraidWord& w) {
      const bool bfs_inverse =
          bfs_untangle(w, RuleSet::two_strand_inverse(), 2 * n).has_value();
      CHECK(bfs_inverse == analytic_trivial_inverse(w));
      const bool bfs_involutive =
          bfs_untangle(w, RuleSet::two_strand_involutive(), 2 * n).has_value();
      CHECK(bfs_involutive == analytic_trivial_involutive(w));
    });
  }
}

TEST_CASE("bfs_untangle: sequences are minimal") {
  // Iterative deepening independently confirms the optimal depth. Only
  // solvable words are compared: on unsolvable ones the unpruned search is
  // exponential in the full bound and proves nothing beyond BFS exhaustion.
  for (const RuleSet& rules :
       {RuleSet::two_strand_inverse(), RuleSet::two_strand_involutive()}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for_each_two_strand_word(n, [&](const BraidWord& w) {
        const auto bfs = bfs_untangle(w, rules, 2 * n);
        if (!bfs) return;
        const auto ids = testing::iddfs_untangle_depth(w, rules, bfs->size());
        REQUIRE(ids.has_value());
        CHECK(bfs->size() == *ids);
      });
    }
  }
}

TEST_CASE("three-strand untanglability implies exponent sum zero") {
  Rng rng(31);
  const RuleSet rules = RuleSet::three_strand();
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = testing::random_word(5, rules, rng);
    const auto res = bfs_untangle(w, rules, 6);
    if (res) CHECK(exponent_sum(w) == 0);
  }
  // Nonzero exponent sum can never untangle.
  CHECK(bfs_untangle(parse_word("AA11", rules), rules, 10) == std::nullopt);
}
