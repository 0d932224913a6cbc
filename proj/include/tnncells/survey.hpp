#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tnncells/chevalley.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/poset.hpp"

namespace tnn {

// Reproducer for a degeneration that escaped the claimed closure. Never
// expected; kept verbatim so a failure can be replayed.
struct DegenerationViolation {
  std::vector<int> word;
  std::vector<int> zeros;
  std::vector<std::string> params;
  std::uint64_t task_seed = 0;
  std::string classified;
};

struct SurveyOptions {
  int trials = 3;
  std::uint64_t seed = 0;
  bool all_words = true;                 // otherwise only the canonical word
  std::size_t work_cap = 2'000'000;      // total classifications
  std::size_t node_cap = kDefaultNodeCap;
};

struct SurveyReport {
  CellIndex source_cell;        // ansatz cell (v, w) in the full flag variety
  StratumIndex source_stratum;  // its image in Q^J
  std::vector<int> j;           // 0-based
  std::size_t words_used = 0;
  std::size_t samples = 0;
  std::vector<DegenerationViolation> violations;
  std::vector<std::size_t> reached;  // ids into enumerate_strata order, sorted
  std::size_t closure_size = 0;      // strata below the source stratum
  Rational coverage = 0;             // |reached| / closure_size

  nlohmann::json to_json() const;
};

// Degenerates the ansatz of the source cell over every word (or just the
// canonical one), every subset of free positions and `trials` seeded
// parameter vectors, classifying each limit in G/P_J. The task seeds are
// derived per (word, subset, trial), so the report does not depend on
// iteration order. For an empty J this surveys the full flag variety.
// Requires v to be a maximal coset representative when J is nonempty.
SurveyReport degeneration_survey(const FlagVariety& fv,
                                 const ParabolicDecomposition& ctx,
                                 const CellIndex& source, const SurveyOptions& opt);

}  // namespace tnn
