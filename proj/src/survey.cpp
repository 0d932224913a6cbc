#include "tnncells/survey.hpp"

#include <set>

#include "tnncells/error.hpp"

namespace tnn {

namespace {

nlohmann::json word_json(const WeylGroup& g, WeylElt w) {
  auto arr = nlohmann::json::array();
  for (std::uint8_t i : g.word(w)) arr.push_back(int(i));
  return arr;
}

}  // namespace

nlohmann::json SurveyReport::to_json() const {
  const WeylGroup& g = *source_cell.v.group;
  nlohmann::json out;
  out["cell"] = {{"v", word_json(g, source_cell.v)}, {"w", word_json(g, source_cell.w)}};
  out["stratum"] = {{"x", word_json(g, source_stratum.x)},
                    {"u", word_json(g, source_stratum.u)},
                    {"w", word_json(g, source_stratum.w)}};
  auto jarr = nlohmann::json::array();
  for (int i : j) jarr.push_back(i + 1);
  out["J"] = jarr;
  out["words_used"] = words_used;
  out["samples"] = samples;
  auto viols = nlohmann::json::array();
  for (const auto& v : violations) {
    viols.push_back({{"word", v.word},
                     {"zeros", v.zeros},
                     {"params", v.params},
                     {"task_seed", v.task_seed},
                     {"classified", v.classified}});
  }
  out["violations"] = std::move(viols);
  out["reached"] = reached;
  out["closure_size"] = closure_size;
  out["coverage"] = rational_str(coverage);
  return out;
}

SurveyReport degeneration_survey(const FlagVariety& fv,
                                 const ParabolicDecomposition& ctx,
                                 const CellIndex& source, const SurveyOptions& opt) {
  const WeylGroup& g = fv.weyl();
  if (&ctx.group() != &g)
    throw InvalidInputError("parabolic context belongs to a different group");
  if (!g.bruhat_leq(source.v, source.w))
    throw InvalidInputError("not a cell: v must be below w");
  if (!ctx.j().empty() && !ctx.is_max_rep(source.v))
    throw InvalidInputError(
        "stratum survey needs v in W^J max so the projection is a single stratum");
  if (opt.trials <= 0) throw InvalidInputError("trials must be positive");

  SurveyReport rep;
  rep.source_cell = source;
  rep.j = ctx.j();
  auto [wmin, u] = ctx.factorize(source.w);
  rep.source_stratum = {source.v, u, wmin};

  std::vector<std::vector<int>> words;
  if (opt.all_words) {
    words = g.reduced_words(source.w);
  } else {
    words.push_back(g.word_vec(source.w));
  }
  rep.words_used = words.size();

  const int dim = g.length(source.w) - g.length(source.v);
  if (dim >= 30) throw CapExceededError("cell dimension too large to enumerate subsets");
  const std::size_t n_subsets = std::size_t(1) << dim;
  const std::size_t total = words.size() * n_subsets * std::size_t(opt.trials);
  if (total > opt.work_cap)
    throw CapExceededError("survey would run " + std::to_string(total) +
                           " classifications, over the cap " +
                           std::to_string(opt.work_cap));

  // Closure of the source stratum inside Q^J: the coverage denominator and
  // the id space of the `reached` list.
  std::vector<StratumIndex> strata = enumerate_strata(ctx, opt.node_cap);
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < strata.size(); ++i)
    if (closure_leq(strata[i], rep.source_stratum, ctx)) below.push_back(i);
  rep.closure_size = below.size();

  const bool full_flag = ctx.j().empty();
  std::set<std::size_t> reached;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    const std::vector<int>& word = words[wi];
    // free positions of this word, in order
    PositionedSubexpression sub = rightmost_subexpression(g, word, source.v);
    std::vector<int> free_pos;
    {
      std::vector<bool> is_sdot(word.size(), false);
      for (int r : sub.positions) is_sdot[std::size_t(r)] = true;
      for (std::size_t r = 0; r < word.size(); ++r)
        if (!is_sdot[r]) free_pos.push_back(int(r));
    }

    for (std::size_t mask = 0; mask < n_subsets; ++mask) {
      std::vector<int> zeros;
      for (int b = 0; b < dim; ++b)
        if ((mask >> b) & 1) zeros.push_back(free_pos[std::size_t(b)]);
      for (int trial = 0; trial < opt.trials; ++trial) {
        std::uint64_t task_seed = mix64(mix64(opt.seed, wi), mix64(mask, trial));
        RationalSampler sampler(task_seed);
        std::vector<Rational> params;
        params.reserve(free_pos.size());
        for (std::size_t k = 0; k < free_pos.size(); ++k)
          params.push_back(sampler.next_positive());

        FlagPoint f = fv.degenerate_flag(source, word, zeros, params);
        StratumIndex got{};
        if (full_flag) {
          CellIndex cls = fv.classify(f);
          got = {cls.v, g.identity(), cls.w};
        } else {
          got = fv.classify_parabolic(f, ctx);
        }
        ++rep.samples;

        if (!closure_leq(got, rep.source_stratum, ctx)) {
          DegenerationViolation viol;
          viol.word = word;
          viol.zeros = zeros;
          for (const Rational& t : params) viol.params.push_back(rational_str(t));
          viol.task_seed = task_seed;
          viol.classified = to_string(got);
          rep.violations.push_back(std::move(viol));
          continue;
        }
        for (std::size_t i : below)
          if (strata[i] == got) {
            reached.insert(i);
            break;
          }
      }
    }
  }
  rep.reached.assign(reached.begin(), reached.end());
  if (rep.closure_size > 0) {
    rep.coverage = Rational(long(rep.reached.size()), long(rep.closure_size));
    rep.coverage.canonicalize();
  }
  return rep;
}

}  // namespace tnn
