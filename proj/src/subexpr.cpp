#include "tnncells/subexpr.hpp"

#include <algorithm>

#include "tnncells/error.hpp"

namespace tnn {

PositionedSubexpression rightmost_subexpression(const WeylGroup& group,
                                                std::span<const int> word,
                                                WeylElt v) {
  WeylElt w = group.from_word(word);
  if (std::size_t(group.length(w)) != word.size())
    throw InvalidInputError("ambient word is not reduced");
  if (!group.bruhat_leq(v, w))
    throw NoSubexpressionError("target element is not below the word's product");

  // Scan right to left, matching letters off the right end of the remaining
  // target whenever they descend it.
  std::vector<int> positions;
  WeylElt rest = v;
  for (int r = int(word.size()) - 1; r >= 0; --r) {
    if (group.has_right_descent(rest, word[r])) {
      positions.push_back(r);
      rest = group.multiply_simple(rest, word[r]);
    }
  }
  if (!(rest == group.identity()))
    throw NoSubexpressionError("greedy scan failed to exhaust the target");
  std::reverse(positions.begin(), positions.end());

  PositionedSubexpression out{std::vector<int>(word.begin(), word.end()),
                              std::move(positions), v};
  if (!is_rightmost_subexpression(group, out.word, out.positions, v))
    throw ClassificationError("greedy subexpression failed its own verifier");
  return out;
}

bool is_rightmost_subexpression(const WeylGroup& group, std::span<const int> word,
                                std::span<const int> positions, WeylElt v) {
  for (int r : positions)
    if (r < 0 || r >= int(word.size())) return false;
  for (std::size_t k = 1; k < positions.size(); ++k)
    if (positions[k] <= positions[k - 1]) return false;
  for (int letter : word)
    if (letter < 0 || letter >= group.rank()) return false;

  // Reduced product equal to v.
  if (positions.size() != std::size_t(group.length(v))) return false;
  WeylElt prod = group.identity();
  for (int r : positions) prod = group.multiply_simple(prod, word[r]);
  if (!(prod == v)) return false;

  // Ascent condition: after the l-th chosen position and up to (and
  // including) the next one, every letter must take the prefix up.
  WeylElt prefix = group.identity();
  std::size_t l = 0;
  for (std::size_t r = 0; r < word.size(); ++r) {
    bool chosen = l < positions.size() && positions[l] == int(r);
    // the letter must not take the accumulated prefix down
    if (group.has_right_descent(prefix, word[r])) return false;
    if (chosen) {
      prefix = group.multiply_simple(prefix, word[r]);
      ++l;
    }
  }
  return true;
}

}  // namespace tnn
