#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tnncells/error.hpp"
#include "tnncells/subexpr.hpp"

using namespace tnn;

namespace {

// Brute force: all index subsets that pass the verifier.
std::vector<std::vector<int>> passing_subsets(const WeylGroup& g,
                                              const std::vector<int>& word,
                                              WeylElt v) {
  std::vector<std::vector<int>> out;
  const std::size_t m = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<int> pos;
    for (std::size_t r = 0; r < m; ++r)
      if ((mask >> r) & 1) pos.push_back(int(r));
    if (is_rightmost_subexpression(g, word, pos, v)) out.push_back(pos);
  }
  return out;
}

}  // namespace

TEST_CASE("worked examples in A2 on the word s1 s2 s1") {
  WeylGroup g(CartanType::parse("A2"));
  const std::vector<int> word{0, 1, 0};
  WeylElt s1 = g.simple(0), s2 = g.simple(1);

  CHECK(rightmost_subexpression(g, word, g.identity()).positions ==
        std::vector<int>{});
  CHECK(rightmost_subexpression(g, word, s1).positions == std::vector<int>{2});
  CHECK(rightmost_subexpression(g, word, g.multiply(s1, s2)).positions ==
        std::vector<int>{0, 1});

  CHECK(is_rightmost_subexpression(g, word, std::vector<int>{}, g.identity()));
  CHECK(!is_rightmost_subexpression(g, word, std::vector<int>{0}, s1));
  CHECK(is_rightmost_subexpression(g, word, std::vector<int>{2}, s1));
}

TEST_CASE("error cases") {
  WeylGroup g(CartanType::parse("A2"));
  // s2 is not below s1
  CHECK_THROWS_AS(rightmost_subexpression(g, std::vector<int>{0}, g.simple(1)),
                  NoSubexpressionError);
  // non-reduced ambient word
  CHECK_THROWS_AS(rightmost_subexpression(g, std::vector<int>{0, 0}, g.identity()),
                  InvalidInputError);
  // malformed index data is just "not a rightmost subexpression"
  CHECK(!is_rightmost_subexpression(g, std::vector<int>{0, 1}, std::vector<int>{1, 0},
                                    g.identity()));
  CHECK(!is_rightmost_subexpression(g, std::vector<int>{0, 1}, std::vector<int>{7},
                                    g.simple(0)));
}

TEST_CASE("uniqueness and greedy agreement, exhaustive at small rank") {
  for (const char* t : {"A2", "A3", "B2", "G2"}) {
    WeylGroup g(CartanType::parse(t));
    for (WeylElt w : g.elements()) {
      if (g.length(w) > 6) continue;
      auto words = g.reduced_words(w);
      for (WeylElt v : g.elements()) {
        if (!g.bruhat_leq(v, w)) continue;
        for (const auto& word : words) {
          auto passing = passing_subsets(g, word, v);
          REQUIRE(passing.size() == 1);  // existence and uniqueness
          CHECK(rightmost_subexpression(g, word, v).positions == passing[0]);
        }
      }
      // and nothing passes for elements not below w
      for (WeylElt v : g.elements()) {
        if (g.bruhat_leq(v, w)) continue;
        for (const auto& word : words)
          CHECK(passing_subsets(g, word, v).empty());
      }
    }
  }
}
