#include "tnncells/parabolic.hpp"

#include <algorithm>

#include "tnncells/error.hpp"

namespace tnn {

ParabolicDecomposition::ParabolicDecomposition(const WeylGroup& group,
                                               std::vector<int> j)
    : group_(&group), w_j_(group.identity()) {
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int i : j) {
    if (i < 0 || i >= group.rank())
      throw InvalidInputError("parabolic index " + std::to_string(i) +
                              " out of range for " + group.type().to_string());
    j_mask_ |= 1u << i;
  }
  j_ = std::move(j);

  subgroup_set_ = Bitset(group.size());
  min_set_ = Bitset(group.size());
  max_set_ = Bitset(group.size());

  // W_J: every (equivalently, the canonical) reduced word uses letters in J.
  // W^J: no right descent lies in J.  W^J max: all of J descends.
  for (std::uint32_t id = 0; id < group.size(); ++id) {
    WeylElt w = group.element(id);
    bool in_subgroup = true;
    for (std::uint8_t letter : group.word(w))
      if (!((j_mask_ >> letter) & 1)) {
        in_subgroup = false;
        break;
      }
    if (in_subgroup) {
      subgroup_.push_back(w);
      subgroup_set_.set(id);
      if (group.length(w) > group.length(w_j_)) w_j_ = w;
    }
    std::uint32_t rd = group.right_descent_mask(w);
    if ((rd & j_mask_) == 0) {
      min_reps_.push_back(w);
      min_set_.set(id);
    }
    if ((rd & j_mask_) == j_mask_) {
      max_reps_.push_back(w);
      max_set_.set(id);
    }
  }
}

bool ParabolicDecomposition::in_subgroup(WeylElt w) const {
  return subgroup_set_.test(w.id);
}

bool ParabolicDecomposition::is_min_rep(WeylElt w) const {
  return min_set_.test(w.id);
}

bool ParabolicDecomposition::is_max_rep(WeylElt w) const {
  return max_set_.test(w.id);
}

std::pair<WeylElt, WeylElt> ParabolicDecomposition::factorize(WeylElt w) const {
  const WeylGroup& g = group();
  WeylElt a = w;
  WeylElt b = g.identity();
  for (;;) {
    std::uint32_t d = g.right_descent_mask(a) & j_mask_;
    if (d == 0) break;
    int i = std::countr_zero(d);
    a = g.multiply_simple(a, i);
    b = g.simple_multiply(i, b);
  }
  return {a, b};
}

const std::vector<std::pair<WeylElt, WeylElt>>&
ParabolicDecomposition::length_additive_factorizations(WeylElt u) const {
  const WeylGroup& g = group();
  if (!in_subgroup(u))
    throw InvalidInputError("element is not in the parabolic subgroup");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = fact_cache_.find(u.id);
  if (it != fact_cache_.end()) return it->second;

  // Grow u1 by left descents of the remaining right factor; length
  // additivity of the extended pair is automatic.
  std::vector<std::pair<WeylElt, WeylElt>> out;
  Bitset seen(g.size());
  std::vector<std::pair<WeylElt, WeylElt>> stack{{g.identity(), u}};
  seen.set(g.identity().id);
  while (!stack.empty()) {
    auto [u1, u2] = stack.back();
    stack.pop_back();
    out.emplace_back(u1, u2);
    for (int i : g.left_descents(u2)) {
      WeylElt n1 = g.multiply_simple(u1, i);
      if (seen.test(n1.id)) continue;
      seen.set(n1.id);
      stack.emplace_back(n1, g.simple_multiply(i, u2));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.id, a.second.id) < std::pair(b.first.id, b.second.id);
  });
  return fact_cache_.emplace(u.id, std::move(out)).first->second;
}

}  // namespace tnn
