#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tnn {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

// Type of a finite Weyl group: a family letter and a rank. Only finite
// families are representable; construction validates the rank range.
class CartanType {
 public:
  CartanType(Family family, int rank);

  static CartanType parse(std::string_view s);  // "A2", "B3", "G2", ...

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string to_string() const;

  // cartan(i, j) = <alpha_j, alpha_i^vee>, 0-based indices.
  int cartan(int i, int j) const;
  // coxeter(i, j) = order of s_i s_j; diagonal is 1.
  int coxeter(int i, int j) const;

  std::uint64_t group_order() const;
  int positive_roots() const;  // = length of the longest element

  bool operator==(const CartanType&) const = default;

 private:
  Family family_;
  int rank_;
};

}  // namespace tnn
