#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnncells/bitset.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/weyl.hpp"

namespace tnn {

// Index of a cell of the full flag variety: a Bruhat-comparable pair.
struct CellIndex {
  WeylElt v, w;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// Index of a stratum of G/P: x in W^J max, u in W_J, w in W^J with x <= wu.
struct StratumIndex {
  WeylElt x, u, w;
  friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
};

CellIndex make_cell(WeylElt v, WeylElt w);  // validates v <= w
int dimension(const CellIndex& c);          // l(w) - l(v)
int dimension(const StratumIndex& s);       // l(w) + l(u) - l(x)
std::string to_string(const CellIndex& c);
std::string to_string(const StratumIndex& s);

// a lies in the closure of b: b.v <= a.v <= a.w <= b.w.
bool closure_leq(const CellIndex& a, const CellIndex& b);

// The closure order on strata: some length-additive factorization
// u' = u1 u2 of a.u satisfies  b.x b.u^{-1} <= a.x u2^{-1} <= a.w u1 <= b.w.
bool closure_leq(const StratumIndex& a, const StratumIndex& b,
                 const ParabolicDecomposition& ctx);

inline constexpr std::size_t kDefaultNodeCap = 10'000;

// All of Q^J, sorted by dimension and then by shortlex ids of (x, u, w).
std::vector<StratumIndex> enumerate_strata(const ParabolicDecomposition& ctx,
                                           std::size_t cap = kDefaultNodeCap);

// The closure poset on Q^J. Keeps both the raw pairwise relation (so the
// partial-order axioms can be checked on actual comparisons rather than on
// an already-closed matrix) and the transitive closure used for queries.
class ClosurePoset {
 public:
  explicit ClosurePoset(const ParabolicDecomposition& ctx,
                        std::size_t cap = kDefaultNodeCap);

  const ParabolicDecomposition& context() const { return *ctx_; }
  const WeylGroup& group() const { return ctx_->group(); }

  std::size_t size() const { return nodes_.size(); }
  const std::vector<StratumIndex>& nodes() const { return nodes_; }
  int dim(std::size_t id) const { return dim_[id]; }
  std::optional<std::size_t> index_of(const StratumIndex& s) const;

  bool raw_leq(std::size_t a, std::size_t b) const { return raw_down_[b].test(a); }
  bool leq(std::size_t a, std::size_t b) const { return closed_down_[b].test(a); }
  const Bitset& raw_down_row(std::size_t b) const { return raw_down_[b]; }
  const Bitset& down_row(std::size_t b) const { return closed_down_[b]; }

  // Cover relations (upper, lower), lexicographically sorted.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers() const {
    return covers_;
  }

  int max_dim() const;
  std::vector<std::size_t> f_vector() const;  // node counts by dimension 0..max

 private:
  const ParabolicDecomposition* ctx_;
  std::vector<StratumIndex> nodes_;
  std::vector<int> dim_;
  std::vector<Bitset> raw_down_;     // raw_down_[b] = {a : a <= b as computed}
  std::vector<Bitset> closed_down_;  // transitive closure of the above
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers_;
};

struct AxiomsReport {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool dimension_monotone = false;   // a < b strictly implies dim a < dim b
  bool covers_drop_dim_by_one = false;  // observational, not an axiom
  std::vector<std::size_t> f_vector;
  long long alternating_sum = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string witness_axiom;

  bool all_axioms() const {
    return reflexive && antisymmetric && transitive && dimension_monotone;
  }
};

// Verifies the partial-order axioms on the raw pairwise relation.
AxiomsReport check_axioms(const ClosurePoset& p);

}  // namespace tnn
