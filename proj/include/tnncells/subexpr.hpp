#pragma once

#include <span>
#include <vector>

#include "tnncells/weyl.hpp"

namespace tnn {

// A reduced subexpression for v positioned inside an ambient reduced word,
// singled out by the rightmost property: between consecutive chosen
// positions (and after the last one) every letter takes the accumulated
// prefix up in Bruhat order.
struct PositionedSubexpression {
  std::vector<int> word;       // ambient reduced word, 0-based letters
  std::vector<int> positions;  // strictly increasing 0-based positions
  WeylElt target;              // v
};

// The unique rightmost reduced subexpression for v inside `word`.
// Throws InvalidInputError if the word is not reduced and
// NoSubexpressionError if v is not below the word's product.
PositionedSubexpression rightmost_subexpression(const WeylGroup& group,
                                                std::span<const int> word,
                                                WeylElt v);

// Checks the full rightmost condition directly; total (never throws on
// merely wrong data): any malformed input yields false.
bool is_rightmost_subexpression(const WeylGroup& group, std::span<const int> word,
                                std::span<const int> positions, WeylElt v);

}  // namespace tnn
