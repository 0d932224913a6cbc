#include "tnncells/chevalley.hpp"

#include <algorithm>
#include <unordered_map>

#include "tnncells/error.hpp"

namespace tnn {

namespace {

void check_index(int n, int i) {
  if (i < 0 || i > n - 2)
    throw InvalidInputError("generator index " + std::to_string(i) +
                            " out of range for SL_" + std::to_string(n));
}

}  // namespace

RatMatrix chevalley_x(int n, int i, const Rational& t) {
  check_index(n, i);
  RatMatrix m = RatMatrix::identity(n);
  m.at(i, i + 1) = t;
  return m;
}

RatMatrix chevalley_y(int n, int i, const Rational& t) {
  check_index(n, i);
  RatMatrix m = RatMatrix::identity(n);
  m.at(i + 1, i) = t;
  return m;
}

RatMatrix coroot_torus(int n, int i, const Rational& t) {
  check_index(n, i);
  if (t == 0) throw InvalidInputError("torus parameter must be nonzero");
  RatMatrix m = RatMatrix::identity(n);
  m.at(i, i) = t;
  m.at(i + 1, i + 1) = 1 / t;
  return m;
}

RatMatrix simple_rep(int n, int i) {
  check_index(n, i);
  RatMatrix m = RatMatrix::identity(n);
  m.at(i, i) = 0;
  m.at(i + 1, i + 1) = 0;
  m.at(i, i + 1) = -1;
  m.at(i + 1, i) = 1;
  return m;
}

FlagVariety::FlagVariety(const WeylGroup& weyl, int max_n) : weyl_(&weyl) {
  if (weyl.type().family() != Family::A)
    throw InvalidInputError("matrix model exists for type A only, got " +
                            weyl.type().to_string());
  n_ = weyl.rank() + 1;
  if (n_ > max_n)
    throw InvalidInputError("SL_" + std::to_string(n_) + " exceeds the size cap " +
                            std::to_string(max_n));

  perms_.resize(weyl.size());
  reps_.resize(weyl.size());
  std::vector<int> idperm(n_);
  for (int k = 0; k < n_; ++k) idperm[k] = k;
  perms_[0] = idperm;
  reps_[0] = RatMatrix::identity(n_);
  // ids are shortlex-sorted, so the word prefix of any element comes first
  for (std::uint32_t id = 1; id < weyl.size(); ++id) {
    WeylElt w = weyl.element(id);
    auto ltrs = weyl.word(w);
    int last = ltrs.back();
    std::vector<int> head(ltrs.begin(), ltrs.end() - 1);
    std::uint32_t prefix = weyl.from_word(head).id;
    perms_[id] = perms_[prefix];
    std::swap(perms_[id][last], perms_[id][last + 1]);
    reps_[id] = reps_[prefix] * simple_rep(n_, last);
  }
  w0_rep_ = reps_[weyl.longest().id];
  w0_rep_inv_ = w0_rep_.inverse();
}

std::vector<int> FlagVariety::permutation(WeylElt w) const {
  if (w.group != weyl_ || w.id >= perms_.size())
    throw InvalidInputError("element does not belong to this flag variety's group");
  return perms_[w.id];
}

WeylElt FlagVariety::from_permutation(std::span<const int> sigma) const {
  if (int(sigma.size()) != n_)
    throw InvalidInputError("permutation length mismatch");
  // Write sigma as a product of adjacent transpositions by bubble sort.
  std::vector<int> s(sigma.begin(), sigma.end());
  std::vector<int> letters;
  for (;;) {
    bool swapped = false;
    for (int k = 0; k + 1 < n_; ++k)
      if (s[k] > s[k + 1]) {
        std::swap(s[k], s[k + 1]);
        letters.push_back(k);
        swapped = true;
      }
    if (!swapped) break;
  }
  for (int k = 0; k < n_; ++k)
    if (s[k] != k) throw InvalidInputError("not a permutation");
  // sigma * (product of collected transpositions) = identity, and each swap
  // shortened the inversion count, so the reversed list is a reduced word
  // for sigma... the collected letters multiply to sigma^{-1} read left to
  // right; invert by reversing.
  std::reverse(letters.begin(), letters.end());
  WeylElt out = weyl_->identity();
  for (int k : letters) out = weyl_->multiply_simple(out, k);
  if (!(perms_[out.id] == std::vector<int>(sigma.begin(), sigma.end())))
    throw ClassificationError("permutation round-trip failed");
  return out;
}

FlagPoint FlagVariety::flag(const RatMatrix& g) const {
  if (g.size() != n_)
    throw InvalidInputError("flag representative has wrong size");
  if (g.det() != 1)
    throw InvalidInputError("flag representative must have determinant 1");

  // Column reduction to the unique representative: pivots are the lowest
  // nonzero rows after clearing previously used pivot rows; pivot entries
  // are scaled to 1 except in the last column, which absorbs the
  // determinant correction.
  RatMatrix m = g;
  std::vector<int> pivot_row;
  std::vector<bool> marked(n_, false);
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < j; ++k) {
      int p = pivot_row[k];
      if (m.at(p, j) == 0) continue;
      Rational c = m.at(p, j) / m.at(p, k);
      for (int i = 0; i < n_; ++i) m.at(i, j) -= c * m.at(i, k);
    }
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
      if (!marked[i] && m.at(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw InvalidInputError("flag representative is singular");
    marked[p] = true;
    pivot_row.push_back(p);
  }
  Rational acc = 1;
  for (int j = 0; j + 1 < n_; ++j) {
    Rational d = m.at(pivot_row[j], j);
    acc *= d;
    for (int i = 0; i < n_; ++i) m.at(i, j) /= d;
  }
  for (int i = 0; i < n_; ++i) m.at(i, n_ - 1) *= acc;
  return FlagPoint{std::move(m)};
}

FlagPoint FlagVariety::base_flag() const { return FlagPoint{RatMatrix::identity(n_)}; }

FlagPoint FlagVariety::opposite_flag() const { return flag(w0_rep_); }

const RatMatrix& FlagVariety::rep(WeylElt w) const {
  if (w.group != weyl_ || w.id >= reps_.size())
    throw InvalidInputError("element does not belong to this flag variety's group");
  return reps_[w.id];
}

WeylElt FlagVariety::bruhat_class(const RatMatrix& g) const {
  if (g.size() != n_) throw InvalidInputError("matrix size mismatch");
  const int n = n_;
  // rank_table[i][j] = rank of the submatrix on rows i..n-1, columns 0..j
  std::vector<std::vector<int>> rank_table(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    const int rows = n - i;
    std::vector<std::vector<Rational>> basis;
    std::vector<int> pivots;
    int rank = 0;
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> v(rows);
      for (int k = 0; k < rows; ++k) v[k] = g.at(i + k, j);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (v[pivots[b]] == 0) continue;
        Rational f = v[pivots[b]] / basis[b][pivots[b]];
        for (int k = 0; k < rows; ++k) v[k] -= f * basis[b][k];
      }
      int p = -1;
      for (int k = 0; k < rows; ++k)
        if (v[k] != 0) {
          p = k;
          break;
        }
      if (p >= 0) {
        basis.push_back(std::move(v));
        pivots.push_back(p);
        ++rank;
      }
      rank_table[i][j] = rank;
    }
  }

  std::vector<int> sigma(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int prev = (j == 0) ? 0 : rank_table[i][j - 1];
      if (rank_table[i][j] - prev == 1) sigma[j] = i;  // keep the largest i
    }
  for (int j = 0; j < n; ++j)
    if (sigma[j] < 0) throw InvalidInputError("matrix is singular");
  return from_permutation(sigma);
}

WeylElt FlagVariety::bruhat_class_by_elimination(const RatMatrix& g,
                                                 RatMatrix* z_out) const {
  if (g.size() != n_) throw InvalidInputError("matrix size mismatch");
  RatMatrix a = g;
  RatMatrix z = RatMatrix::identity(n_);
  std::vector<bool> marked(n_, false);
  std::vector<int> sigma(n_, -1);
  for (int j = 0; j < n_; ++j) {
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
      if (!marked[i] && a.at(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw InvalidInputError("matrix is singular");
    for (int i = 0; i < p; ++i) {
      if (marked[i] || a.at(i, j) == 0) continue;
      Rational c = a.at(i, j) / a.at(p, j);
      for (int k = 0; k < n_; ++k) a.at(i, k) -= c * a.at(p, k);
      for (int k = 0; k < n_; ++k) z.at(k, p) += c * z.at(k, i);
    }
    marked[p] = true;
    sigma[j] = p;
  }
  if (z_out) *z_out = std::move(z);
  return from_permutation(sigma);
}

WeylElt FlagVariety::relative_position(const FlagPoint& a, const FlagPoint& b) const {
  return bruhat_class(a.rep.inverse() * b.rep);
}

CellIndex FlagVariety::classify(const FlagPoint& f) const {
  const WeylGroup& g = *weyl_;
  WeylElt w = bruhat_class(f.rep);
  WeylElt v = g.multiply(g.longest(), bruhat_class(w0_rep_inv_ * f.rep));
  if (!g.bruhat_leq(v, w))
    throw ClassificationError("classification produced v not below w");
  return {v, w};
}

FlagPoint FlagVariety::reduce(const FlagPoint& f, WeylElt w1) const {
  const WeylGroup& g = *weyl_;
  WeylElt wfull = bruhat_class(f.rep);
  WeylElt w2 = g.multiply(g.inverse(w1), wfull);
  if (g.length(w1) + g.length(w2) != g.length(wfull))
    throw ReductionError("factorization " + g.to_string(wfull) + " = " +
                         g.to_string(w1) + " * " + g.to_string(w2) +
                         " is not length-additive");
  RatMatrix z;
  WeylElt welim = bruhat_class_by_elimination(f.rep, &z);
  if (!(welim == wfull))
    throw ClassificationError("rank table and elimination disagree on the Bruhat cell");
  FlagPoint out = flag(z * rep(w1));
  if (!(relative_position(base_flag(), out) == w1) ||
      !(relative_position(out, f) == w2))
    throw ClassificationError("reduction violated its defining position conditions");
  return out;
}

StratumIndex FlagVariety::classify_parabolic(const FlagPoint& f,
                                             const ParabolicDecomposition& ctx) const {
  const WeylGroup& g = *weyl_;
  if (&ctx.group() != weyl_)
    throw InvalidInputError("parabolic context belongs to a different group");

  WeylElt wfull = bruhat_class(f.rep);
  WeylElt w = ctx.factorize(wfull).first;
  FlagPoint b_left = reduce(f, w);

  // Translate by w0 so that "closest to B^-" becomes "closest to B^+",
  // reduce to the minimal coset representative there, translate back.
  FlagPoint fhat = flag(w0_rep_inv_ * f.rep);
  WeylElt yhat = bruhat_class(fhat.rep);
  FlagPoint bhat = reduce(fhat, ctx.factorize(yhat).first);
  FlagPoint b_right = flag(w0_rep_ * bhat.rep);

  WeylElt u = relative_position(b_left, b_right);
  WeylElt x = g.multiply(g.longest(), bruhat_class(w0_rep_inv_ * b_right.rep));

  if (!ctx.in_subgroup(u))
    throw ClassificationError("relative position of B_L and B_R is not in W_J");
  if (!ctx.is_max_rep(x))
    throw ClassificationError("computed x is not a maximal coset representative");
  if (!g.bruhat_leq(x, g.multiply(w, u)))
    throw ClassificationError("computed stratum fails x <= w u");
  if (!ctx.in_subgroup(relative_position(b_left, f)) ||
      !ctx.in_subgroup(relative_position(b_right, f)))
    throw ClassificationError("B_L or B_R left the parabolic of the input flag");
  if (!(relative_position(b_right, opposite_flag()) ==
        g.multiply(g.inverse(x), g.longest())))
    throw ClassificationError("B_R has the wrong position relative to B^-");
  return {x, u, w};
}

RatMatrix FlagVariety::ansatz_product(const CellIndex& c, std::span<const int> word,
                                      std::span<const Rational> params,
                                      std::span<const int> zero_positions,
                                      bool tilde,
                                      std::vector<int>* sdot_positions) const {
  const WeylGroup& g = *weyl_;
  if (c.v.group != weyl_ || c.w.group != weyl_)
    throw InvalidInputError("cell index belongs to a different group");
  if (!g.bruhat_leq(c.v, c.w)) throw InvalidInputError("not a cell: v must be below w");
  if (!(g.from_word(word) == c.w) || !g.is_reduced(word))
    throw InvalidInputError("word is not a reduced word for w");

  PositionedSubexpression sub = rightmost_subexpression(g, word, c.v);
  const std::size_t free_count = word.size() - sub.positions.size();
  if (params.size() != free_count)
    throw InvalidInputError("expected " + std::to_string(free_count) +
                            " parameters, got " + std::to_string(params.size()));
  for (const Rational& t : params)
    if (t <= 0) throw InvalidInputError("cell parameters must be positive");

  std::vector<bool> is_sdot(word.size(), false);
  for (int r : sub.positions) is_sdot[std::size_t(r)] = true;
  std::vector<bool> zeroed(word.size(), false);
  for (int r : zero_positions) {
    if (r < 0 || r >= int(word.size()) || is_sdot[std::size_t(r)])
      throw InvalidInputError("zero positions must be free positions of the word");
    zeroed[std::size_t(r)] = true;
  }
  if (sdot_positions) *sdot_positions = sub.positions;

  RatMatrix m = RatMatrix::identity(n_);
  std::size_t next_param = 0;
  for (std::size_t r = 0; r < word.size(); ++r) {
    int letter = word[r];
    if (is_sdot[r]) {
      RatMatrix s = simple_rep(n_, letter);
      if (tilde) s = s.inverse();
      m = m * s;
      continue;
    }
    const Rational& t = params[next_param++];
    if (zeroed[r]) continue;  // x(0) = y(0) = identity
    m = m * (tilde ? chevalley_x(n_, letter, t) : chevalley_y(n_, letter, t));
  }
  return m;
}

CellSample FlagVariety::sample_cell(const CellIndex& c, std::span<const int> word,
                                    std::span<const Rational> params) const {
  std::vector<int> sdots;
  RatMatrix m = ansatz_product(c, word, params, {}, false, &sdots);
  return CellSample{c,
                    std::vector<int>(word.begin(), word.end()),
                    std::move(sdots),
                    std::vector<Rational>(params.begin(), params.end()),
                    flag(m)};
}

FlagPoint FlagVariety::sample_tilde_cell(const CellIndex& c, std::span<const int> word,
                                         std::span<const Rational> params) const {
  RatMatrix m = ansatz_product(c, word, params, {}, true, nullptr);
  return flag(m * w0_rep_);
}

FlagPoint FlagVariety::degenerate_flag(const CellIndex& c, std::span<const int> word,
                                       std::span<const int> zero_positions,
                                       std::span<const Rational> params) const {
  return flag(ansatz_product(c, word, params, zero_positions, false, nullptr));
}

CellIndex FlagVariety::degenerate_cell(const CellIndex& c, std::span<const int> word,
                                       std::span<const int> zero_positions,
                                       std::span<const Rational> params) const {
  const WeylGroup& g = *weyl_;
  CellIndex got = classify(degenerate_flag(c, word, zero_positions, params));
  if (!g.bruhat_leq(c.v, got.v) || !g.bruhat_leq(got.w, c.w)) {
    std::string zeros;
    for (int r : zero_positions) zeros += std::to_string(r) + " ";
    throw ClosureViolationError("degeneration of " + to_string(c) +
                                " with zeros at {" + zeros + "} classified to " +
                                to_string(got) + " outside the closure interval");
  }
  return got;
}

std::uint64_t RationalSampler::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational RationalSampler::next_positive() {
  unsigned long num = 1 + next_u64() % 100;
  unsigned long den = 1 + next_u64() % 100;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tnn
