// Command-line front end: closure posets of totally nonnegative cells in
// G/P, partial-order axiom checks, exact SL_n classification, and the
// degeneration verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tnncells/chevalley.hpp"
#include "tnncells/error.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/poset.hpp"
#include "tnncells/poset_io.hpp"
#include "tnncells/survey.hpp"
#include "tnncells/weyl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string type;
  std::string j_text;
  bool j_given = false;
  std::string format = "json";
  std::uint64_t seed = 0;
  int trials = 20;
  std::string out;
  std::size_t cap = 0;  // 0: defaults (group 10^6, poset nodes 10^4)
};

std::size_t group_cap(const Options& o) {
  return o.cap ? o.cap : tnn::WeylGroup::kDefaultCap;
}
std::size_t node_cap(const Options& o) {
  return o.cap ? o.cap : tnn::kDefaultNodeCap;
}

// "1,3" or "2 3" -> 0-based sorted indices; "" -> empty set.
std::vector<int> parse_j(const std::string& text, int rank) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    int v = std::stoi(cur);
    cur.clear();
    if (v < 1 || v > rank)
      throw tnn::InvalidInputError("J index " + std::to_string(v) +
                                   " out of range 1.." + std::to_string(rank));
    out.push_back(v - 1);
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ',' || c == ' ' || c == ';') {
      flush();
    } else {
      throw tnn::InvalidInputError("cannot parse J list '" + text + "'");
    }
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string j_text(const std::vector<int>& j) {
  if (j.empty()) return "{}";
  std::string s = "{";
  for (std::size_t k = 0; k < j.size(); ++k)
    s += (k ? "," : "") + std::to_string(j[k] + 1);
  return s + "}";
}

std::string f_text(const std::vector<std::size_t>& f) {
  std::string s = "(";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
  return s + ")";
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw tnn::InvalidInputError("cannot open output file '" + path + "'");
  os << data;
}

int cmd_poset(const Options& o) {
  tnn::WeylGroup group(tnn::CartanType::parse(o.type), group_cap(o));
  tnn::ParabolicDecomposition ctx(group, parse_j(o.j_text, group.rank()));
  tnn::ClosurePoset poset(ctx, node_cap(o));

  std::string data;
  if (o.format == "json") {
    data = tnn::poset_to_json(poset).dump(2) + "\n";
  } else if (o.format == "dot") {
    data = tnn::poset_to_dot(poset);
  } else {
    throw tnn::InvalidInputError("unknown format '" + o.format + "'");
  }
  write_output(o.out, data);

  std::ostream& info = o.out.empty() ? std::cerr : std::cout;
  info << o.type << " J=" << j_text(ctx.j()) << ": nodes=" << poset.size()
       << " covers=" << poset.covers().size() << " f=" << f_text(poset.f_vector())
       << "\n";
  return kExitOk;
}

int cmd_check(const Options& o) {
  tnn::WeylGroup group(tnn::CartanType::parse(o.type), group_cap(o));
  bool all_ok = true;
  for (std::uint32_t mask = 0; mask < (1u << group.rank()); ++mask) {
    std::vector<int> j;
    for (int i = 0; i < group.rank(); ++i)
      if ((mask >> i) & 1) j.push_back(i);
    tnn::ParabolicDecomposition ctx(group, j);
    tnn::ClosurePoset poset(ctx, node_cap(o));
    tnn::AxiomsReport rep = tnn::check_axioms(poset);

    std::cout << o.type << " J=" << j_text(j) << ": nodes=" << poset.size()
              << " covers=" << poset.covers().size() << " f=" << f_text(rep.f_vector)
              << " alt=" << rep.alternating_sum
              << " reflexive=" << (rep.reflexive ? "ok" : "FAIL")
              << " antisymmetric=" << (rep.antisymmetric ? "ok" : "FAIL")
              << " transitive=" << (rep.transitive ? "ok" : "FAIL")
              << " dim-monotone=" << (rep.dimension_monotone ? "ok" : "FAIL")
              << " covers-drop-1=" << (rep.covers_drop_dim_by_one ? "yes" : "no");
    if (!rep.all_axioms()) {
      all_ok = false;
      if (rep.witness) {
        auto [a, b] = *rep.witness;
        std::cout << "  witness(" << rep.witness_axiom
                  << "): " << tnn::to_string(poset.nodes()[a]) << " vs "
                  << tnn::to_string(poset.nodes()[b]);
      }
    }
    std::cout << "\n";
  }
  return all_ok ? kExitOk : kExitViolation;
}

struct VerifyTally {
  std::size_t checks = 0;
  nlohmann::json failures = nlohmann::json::array();

  void fail(nlohmann::json detail) { failures.push_back(std::move(detail)); }
  bool ok() const { return failures.empty(); }
};

int cmd_verify(const Options& o) {
  if (o.trials <= 0) throw tnn::InvalidInputError("--trials must be positive");
  tnn::CartanType type = tnn::CartanType::parse(o.type);
  tnn::WeylGroup group(type, group_cap(o));
  tnn::FlagVariety fv(group);  // rejects non-A types and oversized ranks
  const tnn::WeylGroup& g = group;
  const tnn::WeylElt w0 = g.longest();

  nlohmann::json report;
  report["type"] = o.type;
  report["seed"] = o.seed;
  report["trials"] = o.trials;

  VerifyTally round_trip, tilde, phi, reduction;
  std::size_t degeneration_violations = 0;
  auto degeneration_reports = nlohmann::json::array();

  std::vector<std::pair<tnn::WeylElt, tnn::WeylElt>> cells;
  for (tnn::WeylElt w : g.elements())
    for (tnn::WeylElt v : g.elements())
      if (g.bruhat_leq(v, w)) cells.emplace_back(v, w);
  tnn::ParabolicDecomposition empty_j(g, {});

  for (auto [v, w] : cells) {
    tnn::CellIndex cell{v, w};
    const int dim = g.length(w) - g.length(v);

    // round trip over every reduced word
    auto words = g.reduced_words(w);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      for (int trial = 0; trial < o.trials; ++trial) {
        tnn::RationalSampler sampler(
            tnn::mix64(tnn::mix64(o.seed, v.id), tnn::mix64(w.id * 7919 + wi, trial)));
        std::vector<tnn::Rational> params;
        for (int k = 0; k < dim; ++k) params.push_back(sampler.next_positive());
        tnn::CellSample sample = fv.sample_cell(cell, words[wi], params);
        ++round_trip.checks;
        tnn::CellIndex got = fv.classify(sample.flag);
        if (!(got == cell))
          round_trip.fail({{"cell", tnn::to_string(cell)},
                           {"word", words[wi]},
                           {"classified", tnn::to_string(got)}});
      }
    }

    // tilde symmetry and the phi property, canonical word
    std::vector<int> word = g.word_vec(w);
    tnn::WeylElt u_target = g.multiply(g.longest(), g.inverse(w));  // w0 w^{-1}
    std::vector<int> u_word = g.word_vec(u_target);
    for (int trial = 0; trial < o.trials; ++trial) {
      tnn::RationalSampler sampler(
          tnn::mix64(tnn::mix64(o.seed ^ 0x7177, v.id), tnn::mix64(w.id, trial)));
      std::vector<tnn::Rational> params;
      for (int k = 0; k < dim; ++k) params.push_back(sampler.next_positive());

      ++tilde.checks;
      tnn::FlagPoint tf = fv.sample_tilde_cell(cell, word, params);
      tnn::CellIndex tgot = fv.classify(tf);
      tnn::CellIndex texp{g.multiply(w, w0), g.multiply(v, w0)};
      if (!(tgot == texp))
        tilde.fail({{"cell", tnn::to_string(cell)},
                    {"classified", tnn::to_string(tgot)},
                    {"expected", tnn::to_string(texp)}});

      ++phi.checks;
      tnn::CellSample sample = fv.sample_cell(cell, word, params);
      tnn::RatMatrix u_mat = tnn::RatMatrix::identity(fv.n());
      for (int letter : u_word)
        u_mat = u_mat * tnn::chevalley_y(fv.n(), letter, sampler.next_positive());
      tnn::CellIndex pgot = fv.classify(fv.flag(u_mat * sample.flag.rep));
      if (!(pgot == tnn::CellIndex{v, w0}))
        phi.fail({{"cell", tnn::to_string(cell)},
                  {"classified", tnn::to_string(pgot)}});

      // reduction: every length-additive split of the canonical word must
      // reproduce the truncated product
      for (std::size_t cut = 0; cut <= word.size(); ++cut) {
        std::vector<int> head(word.begin(), word.begin() + cut);
        tnn::WeylElt w1 = g.from_word(head);
        ++reduction.checks;
        tnn::FlagPoint red = fv.reduce(sample.flag, w1);
        // truncated ansatz product
        tnn::RatMatrix trunc = tnn::RatMatrix::identity(fv.n());
        std::size_t pi = 0;
        std::vector<bool> is_sdot(word.size(), false);
        for (int r : sample.sdot_positions) is_sdot[std::size_t(r)] = true;
        for (std::size_t r = 0; r < cut; ++r) {
          if (is_sdot[r]) {
            trunc = trunc * tnn::simple_rep(fv.n(), word[r]);
          } else {
            trunc = trunc * tnn::chevalley_y(fv.n(), word[r], sample.params[pi]);
            ++pi;
          }
        }
        if (!(red == fv.flag(trunc)))
          reduction.fail({{"cell", tnn::to_string(cell)},
                          {"cut", cut}});
      }
    }

    // degeneration survey of the full-flag cell
    tnn::SurveyOptions sopt;
    sopt.trials = std::min(o.trials, 5);
    sopt.seed = o.seed;
    sopt.all_words = true;
    tnn::SurveyReport sr = tnn::degeneration_survey(fv, empty_j, cell, sopt);
    degeneration_violations += sr.violations.size();
    degeneration_reports.push_back(sr.to_json());
  }

  // parabolic suites
  auto parabolic_reports = nlohmann::json::array();
  std::size_t parabolic_failures = 0;
  std::vector<std::vector<int>> j_sets;
  if (o.j_given) {
    j_sets.push_back(parse_j(o.j_text, g.rank()));
  } else {
    for (std::uint32_t mask = 0; mask < (1u << g.rank()); ++mask) {
      std::vector<int> j;
      for (int i = 0; i < g.rank(); ++i)
        if ((mask >> i) & 1) j.push_back(i);
      j_sets.push_back(std::move(j));
    }
  }
  for (const auto& j : j_sets) {
    tnn::ParabolicDecomposition ctx(g, j);
    auto strata = tnn::enumerate_strata(ctx, node_cap(o));
    VerifyTally round;
    std::size_t stratum_violations = 0;
    for (const tnn::StratumIndex& s : strata) {
      tnn::WeylElt wu = g.multiply(s.w, s.u);
      tnn::WeylElt xuinv = g.multiply(s.x, g.inverse(s.u));
      for (int route = 0; route < 2; ++route) {
        tnn::CellIndex cell = route == 0 ? tnn::CellIndex{s.x, wu}
                                         : tnn::CellIndex{xuinv, s.w};
        const int dim = tnn::dimension(cell);
        std::vector<int> word = g.word_vec(cell.w);
        for (int trial = 0; trial < std::min(o.trials, 5); ++trial) {
          tnn::RationalSampler sampler(
              tnn::mix64(tnn::mix64(o.seed ^ 0xA11, s.x.id * 31 + s.u.id),
                         tnn::mix64(s.w.id * 2 + route, trial)));
          std::vector<tnn::Rational> params;
          for (int k = 0; k < dim; ++k) params.push_back(sampler.next_positive());
          tnn::CellSample sample = fv.sample_cell(cell, word, params);
          ++round.checks;
          tnn::StratumIndex got = fv.classify_parabolic(sample.flag, ctx);
          if (!(got == s))
            round.fail({{"stratum", tnn::to_string(s)},
                        {"route", route},
                        {"classified", tnn::to_string(got)}});
        }
      }
      // stratum degenerations: canonical word of the route-1 cell
      tnn::SurveyOptions sopt;
      sopt.trials = std::min(o.trials, 3);
      sopt.seed = o.seed;
      sopt.all_words = false;
      tnn::SurveyReport sr =
          tnn::degeneration_survey(fv, ctx, tnn::CellIndex{s.x, wu}, sopt);
      stratum_violations += sr.violations.size();
    }
    parabolic_failures += round.failures.size() + stratum_violations;
    parabolic_reports.push_back({{"J", j_text(j)},
                                 {"strata", strata.size()},
                                 {"round_trip_checks", round.checks},
                                 {"round_trip_failures", round.failures},
                                 {"degeneration_violations", stratum_violations}});
  }

  report["suites"] = {
      {"round_trip", {{"checks", round_trip.checks}, {"failures", round_trip.failures}}},
      {"tilde", {{"checks", tilde.checks}, {"failures", tilde.failures}}},
      {"phi", {{"checks", phi.checks}, {"failures", phi.failures}}},
      {"reduction", {{"checks", reduction.checks}, {"failures", reduction.failures}}},
      {"degeneration", {{"violations", degeneration_violations},
                        {"surveys", degeneration_reports}}},
      {"parabolic", parabolic_reports}};

  const std::size_t total_violations =
      round_trip.failures.size() + tilde.failures.size() + phi.failures.size() +
      reduction.failures.size() + degeneration_violations + parabolic_failures;
  report["violations_total"] = total_violations;

  std::string data = report.dump(2) + "\n";
  write_output(o.out, data);
  std::ostream& info = o.out.empty() ? std::cerr : std::cout;
  info << o.type << " verify: round_trip=" << round_trip.checks
       << " tilde=" << tilde.checks << " phi=" << phi.checks
       << " reduction=" << reduction.checks << " violations=" << total_violations
       << "\n";
  return total_violations == 0 ? kExitOk : kExitViolation;
}

int cmd_classify(const Options& o, const std::string& matrix_path) {
  std::ifstream is(matrix_path);
  if (!is) throw tnn::InvalidInputError("cannot open matrix file '" + matrix_path + "'");
  nlohmann::json j;
  is >> j;
  tnn::RatMatrix m = tnn::RatMatrix::from_json(j);

  tnn::CartanType type(tnn::Family::A, m.size() - 1);
  if (!o.type.empty() && !(tnn::CartanType::parse(o.type) == type))
    throw tnn::InvalidInputError("matrix is " + std::to_string(m.size()) + "x" +
                                 std::to_string(m.size()) + ", which is " +
                                 type.to_string() + ", not " + o.type);
  tnn::WeylGroup group(type, group_cap(o));
  tnn::FlagVariety fv(group);
  tnn::FlagPoint f = fv.flag(m);  // rejects det != 1

  std::vector<int> jset = parse_j(o.j_text, group.rank());
  if (jset.empty()) {
    std::cout << tnn::to_string(fv.classify(f)) << "\n";
  } else {
    tnn::ParabolicDecomposition ctx(group, jset);
    std::cout << tnn::to_string(fv.classify_parabolic(f, ctx)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("TNNCELLS_CAP")) {
    try {
      o.cap = std::stoull(env);
    } catch (...) {
      std::cerr << "error: TNNCELLS_CAP is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"closure posets and exact verification for totally nonnegative "
               "cells in flag varieties"};
  app.require_subcommand(1);
  std::string matrix_path;

  std::vector<CLI::Option*> j_options;
  auto add_common = [&](CLI::App* cmd, bool need_type) {
    auto* t = cmd->add_option("--type", o.type, "Cartan type, e.g. A2, B3, G2");
    if (need_type) t->required();
    j_options.push_back(
        cmd->add_option("--j", o.j_text, "parabolic subset, 1-based, e.g. \"1,2\""));
    cmd->add_option("--seed", o.seed, "random seed (default 0)");
    cmd->add_option("--trials", o.trials, "samples per check (default 20)");
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--cap", o.cap, "enumeration cap override");
  };

  CLI::App* poset = app.add_subcommand("poset", "export the closure poset of Q^J");
  add_common(poset, true);
  poset->add_option("--format", o.format, "json or dot");

  CLI::App* check = app.add_subcommand("check", "verify partial-order axioms for all J");
  add_common(check, true);

  CLI::App* verify =
      app.add_subcommand("verify", "run the exact SL_n verification suites");
  add_common(verify, true);

  CLI::App* classify = app.add_subcommand("classify", "classify a flag from a matrix file");
  add_common(classify, false);
  classify->add_option("matrix", matrix_path, "JSON matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (CLI::Option* opt : j_options)
    if (opt->count() > 0) o.j_given = true;

  try {
    if (poset->parsed()) return cmd_poset(o);
    if (check->parsed()) return cmd_check(o);
    if (verify->parsed()) return cmd_verify(o);
    if (classify->parsed()) return cmd_classify(o, matrix_path);
    return kExitUsage;
  } catch (const tnn::CapExceededError& e) {
    std::cerr << "error (cap): " << e.what() << "\n";
    return kExitCap;
  } catch (const tnn::ClosureViolationError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const tnn::ClassificationError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const tnn::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tnn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
