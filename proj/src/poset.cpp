#include "tnncells/poset.hpp"

#include <algorithm>
#include <tuple>

#include "tnncells/error.hpp"

namespace tnn {

CellIndex make_cell(WeylElt v, WeylElt w) {
  const WeylGroup* g = v.group;
  if (!g || w.group != g) throw InvalidInputError("cell components from different groups");
  if (!g->bruhat_leq(v, w))
    throw InvalidInputError("not a cell index: " + g->to_string(v) +
                            " is not below " + g->to_string(w));
  return {v, w};
}

int dimension(const CellIndex& c) {
  return c.v.group->length(c.w) - c.v.group->length(c.v);
}

int dimension(const StratumIndex& s) {
  const WeylGroup& g = *s.x.group;
  return g.length(s.w) + g.length(s.u) - g.length(s.x);
}

std::string to_string(const CellIndex& c) {
  const WeylGroup& g = *c.v.group;
  return "(" + g.to_string(c.v) + ", " + g.to_string(c.w) + ")";
}

std::string to_string(const StratumIndex& s) {
  const WeylGroup& g = *s.x.group;
  return "(" + g.to_string(s.x) + ", " + g.to_string(s.u) + ", " +
         g.to_string(s.w) + ")";
}

bool closure_leq(const CellIndex& a, const CellIndex& b) {
  const WeylGroup& g = *a.v.group;
  return g.bruhat_leq(b.v, a.v) && g.bruhat_leq(a.w, b.w);
}

bool closure_leq(const StratumIndex& a, const StratumIndex& b,
                 const ParabolicDecomposition& ctx) {
  const WeylGroup& g = ctx.group();
  WeylElt lower = g.multiply(b.x, g.inverse(b.u));  // x u^{-1}
  for (const auto& [u1, u2] : ctx.length_additive_factorizations(a.u)) {
    WeylElt mid = g.multiply(a.x, g.inverse(u2));  // x' u2^{-1}
    WeylElt upper = g.multiply(a.w, u1);           // w' u1
    if (g.bruhat_leq(mid, upper) && g.bruhat_leq(lower, mid) &&
        g.bruhat_leq(upper, b.w))
      return true;
  }
  return false;
}

std::vector<StratumIndex> enumerate_strata(const ParabolicDecomposition& ctx,
                                           std::size_t cap) {
  const WeylGroup& g = ctx.group();
  const auto& xs = ctx.max_reps();
  const auto& us = ctx.subgroup_elements();
  const auto& ws = ctx.min_reps();
  const std::size_t candidates = xs.size() * us.size() * ws.size();
  if (candidates > 20'000'000)
    throw CapExceededError("stratum candidate space has " +
                           std::to_string(candidates) + " triples");

  std::vector<StratumIndex> out;
  for (WeylElt w : ws)
    for (WeylElt u : us) {
      WeylElt wu = g.multiply(w, u);
      const Bitset& down = g.bruhat_downset(wu);
      for (WeylElt x : xs)
        if (down.test(x.id)) {
          out.push_back({x, u, w});
          if (out.size() > cap)
            throw CapExceededError("Q^J for " + g.type().to_string() +
                                   " exceeds the node cap " + std::to_string(cap));
        }
    }

  std::sort(out.begin(), out.end(), [](const StratumIndex& a, const StratumIndex& b) {
    return std::tuple(dimension(a), a.x.id, a.u.id, a.w.id) <
           std::tuple(dimension(b), b.x.id, b.u.id, b.w.id);
  });
  return out;
}

ClosurePoset::ClosurePoset(const ParabolicDecomposition& ctx, std::size_t cap)
    : ctx_(&ctx) {
  const WeylGroup& g = ctx.group();
  nodes_ = enumerate_strata(ctx, cap);
  const std::size_t n = nodes_.size();
  dim_.resize(n);
  for (std::size_t i = 0; i < n; ++i) dim_[i] = dimension(nodes_[i]);

  // Per node: the chain endpoints x' u2^{-1} <= w' u1 over all length-additive
  // factorizations of u', with infeasible pairs dropped up front.
  std::vector<std::vector<std::pair<WeylElt, WeylElt>>> spans(n);
  std::vector<WeylElt> lower_elt;
  lower_elt.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lower_elt.push_back(g.multiply(nodes_[i].x, g.inverse(nodes_[i].u)));
    for (const auto& [u1, u2] : ctx.length_additive_factorizations(nodes_[i].u)) {
      WeylElt mid = g.multiply(nodes_[i].x, g.inverse(u2));
      WeylElt upper = g.multiply(nodes_[i].w, u1);
      if (g.bruhat_leq(mid, upper)) spans[i].emplace_back(mid, upper);
    }
  }

  raw_down_.assign(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    WeylElt lo = lower_elt[b];
    WeylElt hi = nodes_[b].w;
    for (std::size_t a = 0; a < n; ++a) {
      for (const auto& [mid, upper] : spans[a])
        if (g.bruhat_leq(lo, mid) && g.bruhat_leq(upper, hi)) {
          raw_down_[b].set(a);
          break;
        }
    }
  }

  // Transitive closure by fixpoint; converges in one sweep for a relation
  // that is already transitive.
  closed_down_ = raw_down_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        if (a != b && closed_down_[b].test(a) &&
            !closed_down_[a].subset_of(closed_down_[b])) {
          closed_down_[b] |= closed_down_[a];
          changed = true;
        }
  }

  // Covers: strict pairs with nothing strictly between.
  std::vector<Bitset> strict_down(closed_down_);
  std::vector<Bitset> strict_up(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    strict_down[b].reset(b);
    for (std::size_t a = 0; a < n; ++a)
      if (a != b && closed_down_[b].test(a)) strict_up[a].set(b);
  }
  for (std::size_t upper = 0; upper < n; ++upper)
    for (std::size_t lower = 0; lower < n; ++lower)
      if (strict_down[upper].test(lower) &&
          !strict_down[upper].intersects(strict_up[lower]))
        covers_.emplace_back(std::uint32_t(upper), std::uint32_t(lower));
}

std::optional<std::size_t> ClosurePoset::index_of(const StratumIndex& s) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == s) return i;
  return std::nullopt;
}

int ClosurePoset::max_dim() const {
  int m = 0;
  for (int d : dim_) m = std::max(m, d);
  return m;
}

std::vector<std::size_t> ClosurePoset::f_vector() const {
  std::vector<std::size_t> f(std::size_t(max_dim()) + 1, 0);
  for (int d : dim_) ++f[std::size_t(d)];
  return f;
}

AxiomsReport check_axioms(const ClosurePoset& p) {
  const std::size_t n = p.size();
  AxiomsReport r;
  r.reflexive = r.antisymmetric = r.transitive = true;
  r.dimension_monotone = r.covers_drop_dim_by_one = true;

  auto witness = [&](std::size_t a, std::size_t b, const char* axiom) {
    if (!r.witness) {
      r.witness = {a, b};
      r.witness_axiom = axiom;
    }
  };

  for (std::size_t i = 0; i < n && r.reflexive; ++i)
    if (!p.raw_leq(i, i)) {
      r.reflexive = false;
      witness(i, i, "reflexive");
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.raw_leq(a, b) && p.raw_leq(b, a)) {
        r.antisymmetric = false;
        witness(a, b, "antisymmetric");
      }
  for (std::size_t b = 0; b < n && r.transitive; ++b)
    for (std::size_t a = 0; a < n && r.transitive; ++a) {
      if (a == b || !p.raw_leq(a, b)) continue;
      if (!p.raw_down_row(a).subset_of(p.raw_down_row(b))) {
        r.transitive = false;
        for (std::size_t c = 0; c < n; ++c)
          if (p.raw_leq(c, a) && !p.raw_leq(c, b)) {
            witness(c, b, "transitive");
            break;
          }
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && p.raw_leq(a, b) && !(p.dim(a) < p.dim(b))) {
        r.dimension_monotone = false;
        witness(a, b, "dimension-monotone");
      }
  for (auto [upper, lower] : p.covers())
    if (p.dim(upper) != p.dim(lower) + 1) r.covers_drop_dim_by_one = false;

  r.f_vector = p.f_vector();
  long long sign = 1;
  for (std::size_t d = 0; d < r.f_vector.size(); ++d, sign = -sign)
    r.alternating_sum += sign * (long long)(r.f_vector[d]);
  return r;
}

}  // namespace tnn
