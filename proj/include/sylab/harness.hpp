#ifndef SYLAB_HARNESS_HPP
#define SYLAB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylab/igusa_todorov.hpp"
#include "sylab/io.hpp"

namespace sylab {

inline constexpr const char *kVersion = "sylab 0.1.0";

/// Built-in algebras: paper-example (n, p), nakayama (n, m, p), loop (m, p),
/// linear (n, p), a2 and a3 (p).
AlgebraPtr fixture_algebra(const std::string &name, std::size_t n,
                           std::size_t m, std::uint32_t p);
std::vector<std::string> fixture_names();

struct RunConfig {
  std::string command;
  std::optional<std::string> algebra_file;
  std::string fixture;
  std::size_t n = 3;
  std::size_t m = 2;
  std::uint32_t p = 2;
  std::optional<std::string> module_file;
  std::vector<std::string> simples; // vertex labels; direct sum of simples
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t cap = kDefaultCap;
  std::size_t budget = 8;
};

AlgebraPtr load_algebra(const RunConfig &cfg);
/// The module given by --module or --simples.
Representation load_module(const AlgebraPtr &a, const RunConfig &cfg);

struct CommandOutput {
  Json report;       // machine-readable, deterministic
  std::string table; // human-readable summary
  bool ok = true;    // false on a failed assertion or property
};

/// Runs one command. Throws ParseError/Error on bad input.
CommandOutput run_command(const RunConfig &cfg);

// --------------------------------------------------------------- lemma suite

struct ClauseResult {
  std::string name;
  std::string statement;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<Json> counterexamples; // at most a few per clause
  std::string note;
};

struct LemmaReport {
  bool self_injective = false;
  std::size_t modules = 0;
  std::size_t phi_reports = 0;
  std::size_t inexact_phi_reports = 0;
  std::size_t nonincreasing_violations = 0;
  std::size_t nonvacuous_sequences = 0;
  std::vector<ClauseResult> clauses;

  bool ok() const;
  const ClauseResult *clause(const std::string &name) const;
  Json to_json() const;
};

LemmaReport check_lemmas(const AlgebraPtr &a, const SampleOptions &opt);

// ------------------------------------------------------ individual reports

Json phi_json(const PhiReport &r);
Json psi_json(const PsiReport &r);
Json pd_json(const PdResult &r);
Json decomposition_json(const Decomposition &d);

struct ExamplePaperResult {
  PhiReport phi;
  PsiReport psi;
  FindimSample findim;
  SelfInjectivity selfinj;
  bool ok = true;
  std::vector<std::string> mismatches;
  Json report;
};

/// phi and psi of S_1 + S_n, sampled findim and the self-injectivity verdict
/// of the linear quiver with a loop at n, compared with the expected values.
ExamplePaperResult example_paper(std::size_t n, std::uint32_t p,
                                 const SampleOptions &opt);

} // namespace sylab

#endif
