#pragma once

#include <span>
#include <vector>

#include "tnncells/matrix.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/poset.hpp"
#include "tnncells/subexpr.hpp"
#include "tnncells/weyl.hpp"

namespace tnn {

// One-parameter Chevalley generators of SL_n and the standard
// representatives of simple reflections. Indices i are 0-based rows,
// 0 <= i <= n-2.
RatMatrix chevalley_x(int n, int i, const Rational& t);  // I + t E_{i,i+1}
RatMatrix chevalley_y(int n, int i, const Rational& t);  // I + t E_{i+1,i}
RatMatrix coroot_torus(int n, int i, const Rational& t);  // diag(.., t, 1/t, ..)
RatMatrix simple_rep(int n, int i);  // x_i(-1) y_i(1) x_i(-1)

// A point of the flag variety SL_n / B^+, stored as the unique
// column-reduced representative of determinant 1. Two matrices give the
// same FlagPoint iff they differ by a right factor in B^+.
struct FlagPoint {
  RatMatrix rep;
  bool operator==(const FlagPoint& o) const { return rep == o.rep; }
};

// A sampled point of a totally nonnegative cell: the indexing pair (v, w),
// the ambient word, the subexpression positions carrying the fixed
// reflection factors, and one positive parameter per free position.
struct CellSample {
  CellIndex index;
  std::vector<int> word;
  std::vector<int> sdot_positions;
  std::vector<Rational> params;
  FlagPoint flag;
};

// Exact-arithmetic model of the complete flag variety of SL_n attached to a
// Weyl group of type A_{n-1}. All operations are pure; the element/matrix
// caches are filled at construction.
class FlagVariety {
 public:
  // Requires a type-A group; n = rank + 1 is capped (entry growth and pair
  // enumeration stay desk-sized).
  explicit FlagVariety(const WeylGroup& weyl, int max_n = 6);

  int n() const { return n_; }
  const WeylGroup& weyl() const { return *weyl_; }

  std::vector<int> permutation(WeylElt w) const;  // one-line form, 0-based
  WeylElt from_permutation(std::span<const int> sigma) const;
  const RatMatrix& rep(WeylElt w) const;  // \dot w

  FlagPoint flag(const RatMatrix& g) const;  // canonicalize; needs det 1
  FlagPoint base_flag() const;               // B^+
  FlagPoint opposite_flag() const;           // \dot w0 B^+

  // w with g in B^+ \dot w B^+, from the exact rank table of lower-left
  // submatrices.
  WeylElt bruhat_class(const RatMatrix& g) const;
  // Same, by structured-pivot elimination; also yields the upper-unipotent
  // z with z^{-1} g supported on the pivot pattern. Used by reduce() and as
  // an independent oracle in tests.
  WeylElt bruhat_class_by_elimination(const RatMatrix& g,
                                      RatMatrix* z_out = nullptr) const;

  WeylElt relative_position(const FlagPoint& a, const FlagPoint& b) const;
  CellIndex classify(const FlagPoint& f) const;  // (v, w), v <= w guaranteed

  // The unique flag between the base flag and f at positions (w1, w2) where
  // class(f).w = w1 w2 with lengths additive. Both defining conditions are
  // re-verified; ReductionError if the factorization is not length-additive.
  FlagPoint reduce(const FlagPoint& f, WeylElt w1) const;

  // The stratum of pi^J(f): positions B^+ --w--> B_L --u--> B_R --x^{-1}w0--> B^-.
  StratumIndex classify_parabolic(const FlagPoint& f,
                                  const ParabolicDecomposition& ctx) const;

  CellSample sample_cell(const CellIndex& c, std::span<const int> word,
                         std::span<const Rational> params) const;
  // Mirror parameterization based at B^-, returned as a B^+ coset; its
  // classification is (w w0, v w0).
  FlagPoint sample_tilde_cell(const CellIndex& c, std::span<const int> word,
                              std::span<const Rational> params) const;

  // Product with t_r = 0 exactly at the listed free positions. `params`
  // covers every free position; zeroed entries are ignored.
  FlagPoint degenerate_flag(const CellIndex& c, std::span<const int> word,
                            std::span<const int> zero_positions,
                            std::span<const Rational> params) const;
  // Classified and checked against the closure interval; throws
  // ClosureViolationError if (v', w') escapes it.
  CellIndex degenerate_cell(const CellIndex& c, std::span<const int> word,
                            std::span<const int> zero_positions,
                            std::span<const Rational> params) const;

 private:
  RatMatrix ansatz_product(const CellIndex& c, std::span<const int> word,
                           std::span<const Rational> params,
                           std::span<const int> zero_positions, bool tilde,
                           std::vector<int>* sdot_positions) const;

  const WeylGroup* weyl_;
  int n_;
  std::vector<std::vector<int>> perms_;  // by element id
  std::vector<RatMatrix> reps_;          // by element id
  RatMatrix w0_rep_, w0_rep_inv_;
};

// Positive parameters with numerator and denominator uniform in [1, 100],
// drawn from an explicit engine for reproducibility.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : state_(seed) {}
  Rational next_positive();

 private:
  std::uint64_t next_u64();
  std::uint64_t state_;
};

}  // namespace tnn
