#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tnncells/bitset.hpp"
#include "tnncells/weyl.hpp"

namespace tnn {

// Coset machinery for a parabolic subgroup W_J: the subgroup itself, the
// minimal and maximal coset representatives for W/W_J, the longest element
// w_J, and the unique length-additive factorization w = a b with a minimal
// and b in W_J. Immutable after construction apart from a guarded cache of
// length-additive factorizations.
class ParabolicDecomposition {
 public:
  // j holds 0-based generator indices; duplicates and order are ignored.
  ParabolicDecomposition(const WeylGroup& group, std::vector<int> j);

  const WeylGroup& group() const { return *group_; }
  const std::vector<int>& j() const { return j_; }

  const std::vector<WeylElt>& subgroup_elements() const { return subgroup_; }  // W_J
  const std::vector<WeylElt>& min_reps() const { return min_reps_; }           // W^J
  const std::vector<WeylElt>& max_reps() const { return max_reps_; }           // W^J max
  WeylElt longest_subgroup_element() const { return w_j_; }                    // w_J

  bool in_subgroup(WeylElt w) const;
  bool is_min_rep(WeylElt w) const;
  bool is_max_rep(WeylElt w) const;

  // w = first * second with first in W^J, second in W_J, lengths additive.
  std::pair<WeylElt, WeylElt> factorize(WeylElt w) const;

  // All pairs (u1, u2) with u1 u2 = u and l(u1) + l(u2) = l(u). Requires
  // u in W_J; results are cached. Pairs are ordered by (u1.id, u2.id).
  const std::vector<std::pair<WeylElt, WeylElt>>& length_additive_factorizations(
      WeylElt u) const;

 private:
  const WeylGroup* group_;
  std::vector<int> j_;
  std::uint32_t j_mask_ = 0;
  std::vector<WeylElt> subgroup_, min_reps_, max_reps_;
  WeylElt w_j_;
  Bitset subgroup_set_, min_set_, max_set_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint32_t, std::vector<std::pair<WeylElt, WeylElt>>> fact_cache_;
};

}  // namespace tnn
