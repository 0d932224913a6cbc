#include "tnncells/cartan.hpp"

#include <cctype>

#include "tnncells/error.hpp"

namespace tnn {

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  int min_rank = 1;
  int max_rank = -1;  // unbounded unless set
  switch (family) {
    case Family::A:
      min_rank = 1;
      break;
    case Family::B:
    case Family::C:
      min_rank = 2;
      break;
    case Family::D:
      min_rank = 3;  // D3 = A3 is accepted
      break;
    case Family::G:
      min_rank = 2;
      max_rank = 2;
      break;
  }
  if (rank < min_rank || (max_rank > 0 && rank > max_rank))
    throw InvalidInputError("unsupported rank " + std::to_string(rank) +
                            " for family " + std::string(1, char(family)));
}

CartanType CartanType::parse(std::string_view s) {
  if (s.size() < 2) throw InvalidInputError("cannot parse Cartan type '" + std::string(s) + "'");
  char f = char(std::toupper(static_cast<unsigned char>(s[0])));
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'G')
    throw InvalidInputError("unknown family '" + std::string(1, s[0]) + "'");
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw InvalidInputError("cannot parse Cartan type '" + std::string(s) + "'");
    rank = rank * 10 + (s[k] - '0');
    if (rank > 1000) throw InvalidInputError("absurd rank in '" + std::string(s) + "'");
  }
  return CartanType(static_cast<Family>(f), rank);
}

std::string CartanType::to_string() const {
  return std::string(1, char(family_)) + std::to_string(rank_);
}

int CartanType::cartan(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw InvalidInputError("Cartan index out of range");
  if (i == j) return 2;
  int d = (i < j) ? j - i : i - j;
  switch (family_) {
    case Family::A:
      return d == 1 ? -1 : 0;
    case Family::B:
      // alpha_{rank-1} is the short root: <alpha_{n-1}, alpha_{n-2}^vee> = -2
      if (d != 1) return 0;
      return (i == rank_ - 2 && j == rank_ - 1) ? -2 : -1;
    case Family::C:
      // transpose of B
      if (d != 1) return 0;
      return (i == rank_ - 1 && j == rank_ - 2) ? -2 : -1;
    case Family::D: {
      // fork: nodes rank-2 and rank-1 both attach to node rank-3
      auto adjacent = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (b == rank_ - 1) return a == rank_ - 3;
        return b - a == 1;
      };
      return adjacent(i, j) ? -1 : 0;
    }
    case Family::G:
      // <alpha_1, alpha_0^vee> = -3 with alpha_0 long
      return (i == 0 && j == 1) ? -3 : -1;
  }
  return 0;
}

int CartanType::coxeter(int i, int j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
  }
  throw InvalidInputError("non-finite bond");
}

std::uint64_t CartanType::group_order() const {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= std::uint64_t(k);
    return f;
  };
  switch (family_) {
    case Family::A:
      return fact(rank_ + 1);
    case Family::B:
    case Family::C:
      return (std::uint64_t{1} << rank_) * fact(rank_);
    case Family::D:
      return (std::uint64_t{1} << (rank_ - 1)) * fact(rank_);
    case Family::G:
      return 12;
  }
  return 0;
}

int CartanType::positive_roots() const {
  switch (family_) {
    case Family::A:
      return rank_ * (rank_ + 1) / 2;
    case Family::B:
    case Family::C:
      return rank_ * rank_;
    case Family::D:
      return rank_ * (rank_ - 1);
    case Family::G:
      return 6;
  }
  return 0;
}

}  // namespace tnn
