// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "sylab/harness.hpp"

#include "oracles.hpp"

using namespace sylab;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  Json report = Json::object(); // deterministic part, compared across runs
};

// Exactness and monotonicity of every phi report seen while running 1-4.
struct PhiLedger {
  std::size_t reports = 0, inexact = 0, increasing = 0;

  void add(const PhiReport &r) {
    ++reports;
    inexact += !r.exact;
    for (std::size_t i = 1; i < r.rank_sequence.size(); ++i)
      if (r.rank_sequence[i] > r.rank_sequence[i - 1]) {
        ++increasing;
        break;
      }
  }
};

std::string fmt(const char *f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ------------------------------------------------------------- criterion 1

Outcome worked_example(PhiLedger &ledger) {
  Outcome o;
  SampleOptions opt;
  opt.samples = 200;
  std::size_t runs = 0;
  std::string failed;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint32_t p : {2u, 5u}) {
      auto r = example_paper(n, p, opt);
      ledger.add(r.phi);
      ledger.add(r.psi.phi);
      ++runs;
      const bool enough = r.findim.modules_evaluated >= 200;
      if (!r.ok || !enough) {
        o.pass = false;
        failed += fmt(" (n=%zu,p=%u)", n, p);
      }
      o.report[fmt("n=%zu,p=%u", n, p)] = r.report;
    }
  o.summary = o.pass ? fmt("phi = psi = n-1, findim 0, vertex n not injective "
                           "for %zu (n, p) pairs",
                           runs)
                     : "mismatch at" + failed;
  return o;
}

// ------------------------------------------------------------- criterion 2

Outcome forward_direction(PhiLedger &ledger) {
  Outcome o;
  std::vector<std::pair<std::string, AlgebraPtr>> algebras;
  for (std::size_t m = 2; m <= 4; ++m)
    algebras.push_back({fmt("loop m=%zu", m), truncated_polynomial_algebra(m, 2)});
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 2; m <= 4; ++m)
      for (std::uint32_t p : {2u, 3u})
        algebras.push_back({fmt("nakayama n=%zu m=%zu p=%u", n, m, p),
                            nakayama_cyclic_algebra(n, m, p)});
  std::size_t min_modules = SIZE_MAX, pieces = 0;
  std::string failed;
  for (const auto &[name, a] : algebras) {
    SampleOptions opt;
    opt.samples = 200;
    opt.seed = 2024;
    KGroup k(a);
    const bool si = self_injective(a).self_injective;
    std::size_t modules = 0, bad = 0, bad_pd = 0;
    for (const auto &m : sample_modules(a, opt)) {
      ++modules;
      auto ps = psi(k, m, opt.cap);
      ledger.add(ps.phi);
      if (ps.phi.value != 0 || ps.value != 0)
        ++bad;
      for (const auto &x : decompose(m, k.options()).pieces) {
        ++pieces;
        auto d = pd(k, x, opt.cap);
        if (!(d.is_infinite() || (d.is_finite() && d.value == 0)))
          ++bad_pd;
      }
    }
    min_modules = std::min(min_modules, modules);
    if (!si || bad || bad_pd || modules < 200) {
      o.pass = false;
      failed += " " + name;
    }
    o.report[name] = {{"self_injective", si},
                      {"modules", modules},
                      {"nonzero_phi_or_psi", bad},
                      {"indecomposables_with_positive_finite_pd", bad_pd}};
  }
  o.summary = o.pass ? fmt("%zu self-injective algebras, >= %zu modules each, "
                           "%zu indecomposables with pd 0 or infinite",
                           algebras.size(), min_modules, pieces)
                     : "violations on" + failed;
  return o;
}

// ------------------------------------------------------------- criterion 3

Outcome converse_direction(PhiLedger &ledger) {
  Outcome o;
  std::vector<std::pair<std::string, AlgebraPtr>> algebras;
  for (std::size_t n = 2; n <= 6; ++n)
    algebras.push_back({fmt("paper-example n=%zu", n), paper_example_algebra(n, 2)});
  algebras.push_back({"a2", linear_path_algebra(2, 2)});
  algebras.push_back({"a3", linear_path_algebra(3, 2)});
  std::string failed;
  for (const auto &[name, a] : algebras) {
    KGroup k(a);
    auto w = witness_search(k);
    const bool si = self_injective(a).self_injective;
    bool ok = !si && w && w->phi.exact && w->phi.value >= 1;
    if (w) {
      ledger.add(w->phi);
      // Recompute from scratch to guard against stale caches.
      KGroup fresh(a);
      auto again = phi(fresh, w->module);
      ok = ok && again.exact && again.value == w->phi.value;
      o.report[name] = {{"construction", w->construction},
                        {"phi", w->phi.value},
                        {"module", module_to_json(w->module)}};
    } else {
      o.report[name] = {{"found", false}};
    }
    if (!ok) {
      o.pass = false;
      failed += " " + name;
    }
  }
  o.summary = o.pass ? fmt("witness with exact phi >= 1 on all %zu "
                           "non-self-injective algebras",
                           algebras.size())
                     : "no witness on" + failed;
  return o;
}

// ------------------------------------------------------------- criterion 4

Outcome lemma_suites(PhiLedger &ledger, double &seconds) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, AlgebraPtr>> algebras = {
      {"a2", linear_path_algebra(2, 2)},
      {"a3", linear_path_algebra(3, 2)},
      {"paper-example n=3", paper_example_algebra(3, 2)},
      {"paper-example n=5", paper_example_algebra(5, 2)},
      {"loop m=2", truncated_polynomial_algebra(2, 2)},
      {"nakayama n=2 m=3 p=2", nakayama_cyclic_algebra(2, 3, 2)}};
  std::size_t violations = 0, best_sequences = 0, suites = 0;
  std::string failed;
  for (const auto &[name, a] : algebras)
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      SampleOptions opt;
      opt.samples = 100;
      opt.seed = seed;
      auto r = check_lemmas(a, opt);
      ++suites;
      ledger.reports += r.phi_reports;
      ledger.inexact += r.inexact_phi_reports;
      ledger.increasing += r.nonincreasing_violations;
      for (const auto &c : r.clauses)
        violations += c.violations;
      best_sequences = std::max(best_sequences, r.nonvacuous_sequences);
      if (!r.ok())
        failed += fmt(" %s/seed %llu", name.c_str(),
                      static_cast<unsigned long long>(seed));
      o.report[fmt("%s seed=%llu", name.c_str(),
                   static_cast<unsigned long long>(seed))] = r.to_json();
    }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
  o.pass = violations == 0 && failed.empty() && best_sequences >= 20 &&
           seconds <= 300;
  o.summary = fmt("%zu suites, %zu violations, up to %zu non-vacuous "
                  "sequences on one run, %.1f s",
                  suites, violations, best_sequences, seconds);
  if (!failed.empty())
    o.summary += "; failing:" + failed;
  return o;
}

// ------------------------------------------------------------- criterion 5

Outcome oracle_equivalence() {
  Outcome o;
  std::vector<AlgebraPtr> algebras = {
      paper_example_algebra(2, 2), paper_example_algebra(3, 2),
      linear_path_algebra(2, 2),   linear_path_algebra(3, 2),
      truncated_polynomial_algebra(2, 2), truncated_polynomial_algebra(3, 2),
      nakayama_cyclic_algebra(2, 2, 2),   nakayama_cyclic_algebra(2, 3, 2)};
  Rng rng(5150);
  std::size_t pairs = 0, iso_pairs = 0, disagreements = 0;
  std::size_t ks_pairs = 0, ks_failures = 0;
  for (const auto &a : algebras) {
    // Small modules: random ones, their pieces and base-changed copies.
    std::vector<Representation> pool;
    for (int t = 0; t < 24; ++t) {
      auto m = random_presentation_module(a, 4, rng);
      if (m.is_zero() || m.total_dim() > 4)
        continue;
      pool.push_back(m);
      pool.push_back(random_base_change(m, rng));
      for (const auto &x : decompose(m).pieces)
        pool.push_back(random_base_change(x, rng));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        const auto &x = pool[i], &y = pool[j];
        if (x.dims() != y.dims())
          continue;
        const bool indec = decompose(x).piece_count() == 1 &&
                           decompose(y).piece_count() == 1;
        const bool got = indec ? is_isomorphic(x, y) : modules_isomorphic(x, y);
        const bool want = oracle::isomorphic(x, y);
        ++pairs;
        iso_pairs += want;
        disagreements += got != want;
      }

    // Krull-Schmidt on larger random pairs.
    for (int t = 0; t < 30; ++t) {
      auto m = random_presentation_module(a, 7, rng);
      auto n = random_presentation_module(a, 6, rng);
      auto dm = decompose(m), dn = decompose(n);
      auto dsum = decompose(direct_sum({m, n}, a).module);
      // Union of the two summand multisets, merged by isomorphism.
      Decomposition joined = dm;
      for (const auto &s : dn.summands) {
        bool merged = false;
        for (auto &u : joined.summands)
          if (!merged && is_isomorphic(u.module, s.module)) {
            u.multiplicity += s.multiplicity;
            merged = true;
          }
        if (!merged)
          joined.summands.push_back(s);
      }
      ++ks_pairs;
      ks_failures += !same_summands(dsum, joined);
    }
  }
  o.pass = disagreements == 0 && pairs >= 500 && ks_failures == 0 &&
           ks_pairs >= 200 && iso_pairs > 0 && iso_pairs < pairs;
  o.report = {{"pairs", pairs},
              {"isomorphic_pairs", iso_pairs},
              {"disagreements", disagreements},
              {"krull_schmidt_pairs", ks_pairs},
              {"krull_schmidt_failures", ks_failures}};
  o.summary = fmt("%zu pairs vs brute force (%zu isomorphic), %zu "
                  "disagreements; %zu direct-sum pairs, %zu mismatches",
                  pairs, iso_pairs, disagreements, ks_pairs, ks_failures);
  return o;
}

struct Run {
  std::vector<Outcome> outcomes; // criteria 1..5
  PhiLedger ledger;
  double lemma_seconds = 0;
};

Run run_all() {
  Run r;
  r.outcomes.push_back(worked_example(r.ledger));
  r.outcomes.push_back(forward_direction(r.ledger));
  r.outcomes.push_back(converse_direction(r.ledger));
  r.outcomes.push_back(lemma_suites(r.ledger, r.lemma_seconds));
  r.outcomes.push_back(oracle_equivalence());
  return r;
}

} // namespace

int main() {
  const char *names[] = {
      "1 worked example reproduction",
      "2 self-injective algebras have phi = psi = 0",
      "3 non-self-injective algebras have a witness",
      "4 lemma suites",
      "5 oracle equivalence",
  };
  const auto start = std::chrono::steady_clock::now();
  auto first = run_all();
  bool all = true;
  for (std::size_t i = 0; i < first.outcomes.size(); ++i) {
    const auto &o = first.outcomes[i];
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << names[i] << ": " << o.summary
              << std::endl;
  }

  const auto &l = first.ledger;
  const bool exact = l.inexact == 0 && l.increasing == 0 && l.reports > 0;
  all = all && exact;
  std::cout << (exact ? "PASS " : "FAIL ")
            << "6 exactness bookkeeping: "
            << fmt("%zu phi reports, %zu inexact, %zu with an increasing rank "
                   "sequence",
                   l.reports, l.inexact, l.increasing)
            << std::endl;

  auto second = run_all();
  std::size_t same = 0;
  for (std::size_t i = 0; i < first.outcomes.size(); ++i)
    same += first.outcomes[i].report.dump() == second.outcomes[i].report.dump();
  const bool det = same == first.outcomes.size();
  all = all && det;
  std::cout << (det ? "PASS " : "FAIL ") << "7 determinism: "
            << fmt("%zu/%zu criterion reports byte-identical on a second run",
                   same, first.outcomes.size())
            << std::endl;

  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::cout << fmt("acceptance finished in %.1f s", secs) << std::endl;
  return all ? 0 : 1;
}
