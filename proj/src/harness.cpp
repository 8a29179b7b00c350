#include "sylab/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sylab {

// ------------------------------------------------------------------ fixtures

std::vector<std::string> fixture_names() {
  return {"paper-example", "nakayama", "loop", "linear", "a2", "a3"};
}

AlgebraPtr fixture_algebra(const std::string &name, std::size_t n,
                           std::size_t m, std::uint32_t p) {
  if (name == "paper-example") {
    if (n < 2)
      throw Error("fixture paper-example needs --n >= 2");
    return paper_example_algebra(n, p);
  }
  if (name == "nakayama") {
    if (n < 1 || m < 2)
      throw Error("fixture nakayama needs --n >= 1 and --m >= 2");
    return nakayama_cyclic_algebra(n, m, p);
  }
  if (name == "loop") {
    if (m < 2)
      throw Error("fixture loop needs --m >= 2");
    return truncated_polynomial_algebra(m, p);
  }
  if (name == "linear") {
    if (n < 1)
      throw Error("fixture linear needs --n >= 1");
    return linear_path_algebra(n, p);
  }
  if (name == "a2")
    return linear_path_algebra(2, p);
  if (name == "a3")
    return linear_path_algebra(3, p);
  std::string known;
  for (const auto &f : fixture_names())
    known += (known.empty() ? "" : ", ") + f;
  throw Error("unknown fixture \"" + name + "\" (known: " + known + ")");
}

AlgebraPtr load_algebra(const RunConfig &cfg) {
  if (cfg.algebra_file && !cfg.fixture.empty())
    throw Error("give either --algebra or --fixture, not both");
  if (cfg.algebra_file)
    return build_algebra(
        algebra_spec_from_json(read_json_file(*cfg.algebra_file)));
  if (cfg.fixture.empty())
    throw Error("an algebra is required: --algebra <file> or --fixture <name>");
  return fixture_algebra(cfg.fixture, cfg.n, cfg.m, cfg.p);
}

Representation load_module(const AlgebraPtr &a, const RunConfig &cfg) {
  if (cfg.module_file && !cfg.simples.empty())
    throw Error("give either --module or --simples, not both");
  if (cfg.module_file)
    return module_from_json(a, read_json_file(*cfg.module_file));
  if (cfg.simples.empty())
    throw Error("a module is required: --module <file> or --simples <labels>");
  std::vector<Representation> parts;
  for (const auto &label : cfg.simples) {
    if (!a->quiver().has_vertex(label))
      throw ParseError("--simples: unknown vertex \"" + label + "\"");
    parts.push_back(Representation::simple(a, a->quiver().vertex_index(label)));
  }
  return direct_sum(parts, a).module;
}

// ------------------------------------------------------------- json pieces

namespace {

std::string label(const AlgebraPtr &a, std::size_t v) {
  return a->quiver().vertices()[v];
}

Json labels(const AlgebraPtr &a, const std::vector<std::size_t> &vs) {
  Json out = Json::array();
  for (auto v : vs)
    out.push_back(label(a, v));
  return out;
}

Json dims_json(const AlgebraPtr &a, const std::vector<std::size_t> &d) {
  Json out = Json::object();
  for (std::size_t v = 0; v < d.size(); ++v)
    out[label(a, v)] = d[v];
  return out;
}

class Table {
public:
  void row(const std::string &key, const std::string &value) {
    rows_.push_back({key, value});
  }
  std::string str() const {
    std::size_t w = 0;
    for (const auto &[k, v] : rows_)
      w = std::max(w, k.size());
    std::ostringstream os;
    for (const auto &[k, v] : rows_)
      os << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
    return os.str();
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(const std::vector<std::size_t> &v) {
  std::string s;
  for (auto x : v)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string phi_text(const PhiReport &r) {
  return (r.exact ? "" : ">= ") + std::to_string(r.value);
}

} // namespace

Json phi_json(const PhiReport &r) {
  return {{"value", r.value},
          {"exact", r.exact},
          {"rank_sequence", r.rank_sequence},
          {"classes_explored", r.classes_explored},
          {"cap_hit", r.cap_hit}};
}

Json psi_json(const PsiReport &r) {
  return {{"value", r.value},
          {"exact", r.exact},
          {"max_finite_pd", r.max_finite_pd},
          {"phi", phi_json(r.phi)}};
}

Json pd_json(const PdResult &r) {
  Json j;
  switch (r.kind) {
  case PdResult::Kind::Finite:
    j["kind"] = "finite";
    j["value"] = r.value;
    break;
  case PdResult::Kind::Infinite:
    j["kind"] = "infinite";
    j["value"] = "inf";
    break;
  case PdResult::Kind::UnknownAtLeast:
    j["kind"] = "unknown_at_least";
    j["value"] = r.value;
    break;
  }
  j["exact"] = r.kind != PdResult::Kind::UnknownAtLeast;
  return j;
}

Json decomposition_json(const Decomposition &d) {
  Json summands = Json::array();
  for (const auto &s : d.summands)
    summands.push_back({{"multiplicity", s.multiplicity},
                        {"projective", s.projective},
                        {"module", module_to_json(s.module)}});
  const bool det = d.certificate == Certificate::Deterministic;
  return {{"summands", summands},
          {"certificate", det ? "deterministic" : "probabilistic"},
          {"exact", det}};
}

namespace {

Json selfinj_json(const AlgebraPtr &a, const SelfInjectivity &s) {
  Json diags = Json::array();
  for (const auto &d : s.diagnostics) {
    Json j = {{"vertex", label(a, d.vertex)},
              {"simple_socle", d.simple_socle},
              {"socle_dims", dims_json(a, d.socle_dims)}};
    j["injective"] = d.injective_match.has_value();
    j["isomorphic_to_injective_at"] =
        d.injective_match ? Json(label(a, *d.injective_match)) : Json(nullptr);
    diags.push_back(std::move(j));
  }
  return {{"self_injective", s.self_injective},
          {"nakayama_permutation", labels(a, s.nakayama_permutation)},
          {"non_injective_vertices", labels(a, s.non_injective_vertices)},
          {"diagnostics", diags},
          {"exact", true}};
}

Json witness_json(const AlgebraPtr &a, const std::optional<Witness> &w) {
  if (!w)
    return {{"found", false}};
  return {{"found", true},
          {"construction", w->construction},
          {"vertex", label(a, w->vertex)},
          {"phi", phi_json(w->phi)},
          {"module", module_to_json(w->module)}};
}

Json sample_config(const SampleOptions &opt) {
  return {{"samples", opt.samples},
          {"budget", opt.budget},
          {"seed", opt.seed},
          {"cap", opt.cap},
          {"max_simple_subset", opt.max_simple_subset}};
}

} // namespace

// --------------------------------------------------------------- lemma suite

bool LemmaReport::ok() const {
  if (inexact_phi_reports || nonincreasing_violations)
    return false;
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult &c) { return c.violations == 0; });
}

const ClauseResult *LemmaReport::clause(const std::string &name) const {
  for (const auto &c : clauses)
    if (c.name == name)
      return &c;
  return nullptr;
}

Json LemmaReport::to_json() const {
  Json cs = Json::array();
  for (const auto &c : clauses) {
    Json j = {{"clause", c.name},
              {"statement", c.statement},
              {"checked", c.checked},
              {"violations", c.violations},
              {"pass", c.violations == 0}};
    if (!c.note.empty())
      j["note"] = c.note;
    if (!c.counterexamples.empty())
      j["counterexamples"] = c.counterexamples;
    cs.push_back(std::move(j));
  }
  return {{"self_injective", self_injective},
          {"modules", modules},
          {"phi_reports", phi_reports},
          {"inexact_phi_reports", inexact_phi_reports},
          {"rank_sequence_increases", nonincreasing_violations},
          {"nonvacuous_short_exact_sequences", nonvacuous_sequences},
          {"pass", ok()},
          {"clauses", cs}};
}

namespace {

class Suite {
public:
  Suite(const AlgebraPtr &a, const SampleOptions &opt)
      : a_(a), opt_(opt), k_(a), rng_(opt.seed ^ 0x9e3779b97f4a7c15ULL) {}

  LemmaReport run();

private:
  enum Id {
    PhiFinitePd,
    PsiFinitePd,
    PhiInfiniteIndecomposable,
    PsiInfiniteIndecomposable,
    PhiSum,
    PsiSum,
    PhiPowers,
    PsiPowers,
    PhiSyzygy,
    PsiSyzygy,
    PsiSequence,
    PsiAtLeastPhi,
    SelfInjectiveVanishing,
    SelfInjectivePd,
    SyzygyReflectsIso,
    NonSelfInjectiveWitness,
    FindimBelowPhidim,
    ClauseCount
  };

  void define(Id id, std::string name, std::string statement) {
    report_.clauses[id].name = std::move(name);
    report_.clauses[id].statement = std::move(statement);
  }

  void check(Id id, bool holds, const std::vector<Representation> &witnesses,
             const std::string &detail) {
    auto &c = report_.clauses[id];
    ++c.checked;
    if (holds)
      return;
    ++c.violations;
    if (c.counterexamples.size() >= 3)
      return;
    Json mods = Json::array();
    for (const auto &w : witnesses)
      mods.push_back(module_to_json(w));
    c.counterexamples.push_back({{"detail", detail}, {"modules", mods}});
  }

  PhiReport phi_of(const Representation &m) {
    auto r = phi(k_, m, opt_.cap);
    ++report_.phi_reports;
    if (!r.exact)
      ++report_.inexact_phi_reports;
    for (std::size_t i = 1; i < r.rank_sequence.size(); ++i)
      if (r.rank_sequence[i] > r.rank_sequence[i - 1]) {
        ++report_.nonincreasing_violations;
        break;
      }
    return r;
  }

  PsiReport psi_of(const Representation &m) {
    auto r = psi(k_, m, opt_.cap);
    ++report_.phi_reports;
    if (!r.phi.exact)
      ++report_.inexact_phi_reports;
    return r;
  }

  void per_module(const Representation &m, const Representation &n);
  void sequence(const ShortExactSequence &ses);

  AlgebraPtr a_;
  SampleOptions opt_;
  KGroup k_;
  Rng rng_;
  LemmaReport report_;
  std::vector<Representation> pieces_; // indecomposable non-projective
  std::size_t max_phi_ = 0, max_finite_pd_ = 0;
};

std::string num(std::size_t v) { return std::to_string(v); }

void Suite::per_module(const Representation &m, const Representation &n) {
  const auto pm = phi_of(m);
  const auto sm = psi_of(m);
  const auto dm = pd(k_, m, opt_.cap);
  max_phi_ = std::max(max_phi_, pm.value);
  if (dm.is_finite())
    max_finite_pd_ = std::max(max_finite_pd_, dm.value);

  if (dm.is_finite()) {
    check(PhiFinitePd, pm.value == dm.value, {m},
          "phi = " + num(pm.value) + ", pd = " + num(dm.value));
    check(PsiFinitePd, sm.value == dm.value, {m},
          "psi = " + num(sm.value) + ", pd = " + num(dm.value));
  }
  check(PsiAtLeastPhi,
        sm.value >= pm.value && (sm.max_finite_pd > 0 || sm.value == pm.value),
        {m}, "phi = " + num(pm.value) + ", psi = " + num(sm.value));

  const auto mn = direct_sum({n, m}, a_).module;
  const auto pmn = phi_of(mn).value, smn = psi_of(mn).value;
  check(PhiSum, pmn >= pm.value, {m, n},
        "phi(N+M) = " + num(pmn) + " < phi(M) = " + num(pm.value));
  check(PsiSum, smn >= sm.value, {m, n},
        "psi(N+M) = " + num(smn) + " < psi(M) = " + num(sm.value));

  for (std::size_t e : {2u, 3u}) {
    const auto me = power(m, e);
    const auto pe = phi_of(me).value, se = psi_of(me).value;
    check(PhiPowers, pe == pm.value, {m},
          "phi(M^" + num(e) + ") = " + num(pe) + ", phi(M) = " + num(pm.value));
    check(PsiPowers, se == sm.value, {m},
          "psi(M^" + num(e) + ") = " + num(se) + ", psi(M) = " + num(sm.value));
  }

  const auto om = syzygy(m);
  const auto po = phi_of(om).value, so = psi_of(om).value;
  check(PhiSyzygy, pm.value <= po + 1, {m},
        "phi(M) = " + num(pm.value) + ", phi(Omega M) = " + num(po));
  check(PsiSyzygy, sm.value <= so + 1, {m},
        "psi(M) = " + num(sm.value) + ", psi(Omega M) = " + num(so));

  if (report_.self_injective)
    check(SelfInjectiveVanishing, pm.value == 0 && sm.value == 0, {m},
          "phi = " + num(pm.value) + ", psi = " + num(sm.value));

  const auto d = decompose(m, k_.options());
  for (const auto &x : d.pieces) {
    if (is_projective(x))
      continue;
    const auto px = pd(k_, x, opt_.cap);
    if (px.is_infinite()) {
      const auto fx = phi_of(x).value, sx = psi_of(x).value;
      check(PhiInfiniteIndecomposable, fx == 0, {x}, "phi = " + num(fx));
      check(PsiInfiniteIndecomposable, sx == 0, {x}, "psi = " + num(sx));
    }
    if (report_.self_injective)
      check(SelfInjectivePd, px.is_infinite(), {x},
            "non-projective indecomposable with pd " + px.to_string());
    if (pieces_.size() < 12 &&
        std::none_of(pieces_.begin(), pieces_.end(),
                     [&](const Representation &y) { return is_isomorphic(x, y); }))
      pieces_.push_back(x);
  }
}

void Suite::sequence(const ShortExactSequence &ses) {
  const auto &c = ses.right();
  const auto dc = pd(k_, c, opt_.cap);
  if (!dc.is_finite())
    return;
  if (!k_.class_of(c).empty())
    ++report_.nonvacuous_sequences;
  const auto ab = direct_sum({ses.left(), ses.middle()}, a_).module;
  const auto sc = psi_of(c).value, sab = psi_of(ab).value;
  check(PsiSequence, sc <= sab + 1, {ses.left(), ses.middle(), c},
        "psi(C) = " + num(sc) + ", psi(A+B) = " + num(sab));
}

LemmaReport Suite::run() {
  report_.clauses.resize(ClauseCount);
  define(PhiFinitePd, "phi-equals-finite-pd", "pd M finite => phi(M) = pd M");
  define(PsiFinitePd, "psi-equals-finite-pd", "pd M finite => psi(M) = pd M");
  define(PhiInfiniteIndecomposable, "phi-vanishes-on-infinite-pd-indecomposable",
         "M indecomposable, pd M infinite => phi(M) = 0");
  define(PsiInfiniteIndecomposable, "psi-vanishes-on-infinite-pd-indecomposable",
         "M indecomposable, pd M infinite => psi(M) = 0");
  define(PhiSum, "phi-monotone-under-sums", "phi(N+M) >= phi(M)");
  define(PsiSum, "psi-monotone-under-sums", "psi(N+M) >= psi(M)");
  define(PhiPowers, "phi-stable-under-powers", "phi(M^k) = phi(M), k = 2, 3");
  define(PsiPowers, "psi-stable-under-powers", "psi(M^k) = psi(M), k = 2, 3");
  define(PhiSyzygy, "phi-syzygy-step", "phi(M) <= phi(Omega M) + 1");
  define(PsiSyzygy, "psi-syzygy-step", "psi(M) <= psi(Omega M) + 1");
  define(PsiSequence, "psi-short-exact-sequence",
         "0 -> A -> B -> C -> 0 exact, pd C finite => psi(C) <= psi(A+B) + 1");
  define(PsiAtLeastPhi, "psi-at-least-phi",
         "psi(M) >= phi(M), with equality when no summand of "
         "Omega^phi(M) M has positive finite pd");
  define(SelfInjectiveVanishing, "self-injective-phi-psi-vanish",
         "self-injective => phi(M) = psi(M) = 0");
  define(SelfInjectivePd, "self-injective-pd-zero-or-infinite",
         "self-injective => every indecomposable has pd 0 or infinite");
  define(SyzygyReflectsIso, "self-injective-syzygy-reflects-isomorphism",
         "self-injective, M1 and M2 non-isomorphic indecomposable "
         "non-projective => Omega^n M1 and Omega^n M2 non-isomorphic, n = 1..4");
  define(NonSelfInjectiveWitness, "non-self-injective-has-positive-phi",
         "not self-injective => some W has exact phi(W) >= 1");
  define(FindimBelowPhidim, "findim-at-most-phidim",
         "sampled findim <= sampled phidim");

  report_.self_injective = self_injective(a_).self_injective;
  const auto modules = sample_modules(a_, opt_);
  report_.modules = modules.size();
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const auto n = random_presentation_module(a_, opt_.budget, rng_);
    per_module(modules[i], n);
    sequence(random_ses(a_, opt_.budget, rng_));
  }

  check(FindimBelowPhidim, max_finite_pd_ <= max_phi_, {},
        "findim = " + num(max_finite_pd_) + ", phidim = " + num(max_phi_));

  if (report_.self_injective) {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
        auto x = pieces_[i], y = pieces_[j];
        for (std::size_t step = 1; step <= 4; ++step) {
          x = syzygy(x);
          y = syzygy(y);
          check(SyzygyReflectsIso, !modules_isomorphic(x, y),
                {pieces_[i], pieces_[j]},
                "isomorphic after " + num(step) + " syzygies");
        }
      }
    report_.clauses[NonSelfInjectiveWitness].note = "vacuous: self-injective";
  } else {
    auto w = witness_search(k_, opt_.cap);
    check(NonSelfInjectiveWitness, w && w->phi.exact && w->phi.value >= 1, {},
          "witness search found no module with exact phi >= 1");
    report_.clauses[SelfInjectiveVanishing].note = "vacuous: not self-injective";
    report_.clauses[SelfInjectivePd].note = "vacuous: not self-injective";
    report_.clauses[SyzygyReflectsIso].note = "vacuous: not self-injective";
  }
  auto &seq = report_.clauses[PsiSequence];
  seq.note = num(report_.nonvacuous_sequences) +
             " sequences tested with C of finite pd and not projective";
  return report_;
}

} // namespace

LemmaReport check_lemmas(const AlgebraPtr &a, const SampleOptions &opt) {
  return Suite(a, opt).run();
}

// -------------------------------------------------------------- example run

ExamplePaperResult example_paper(std::size_t n, std::uint32_t p,
                                 const SampleOptions &opt) {
  if (n < 2)
    throw Error("example-paper needs n >= 2");
  auto a = paper_example_algebra(n, p);
  KGroup k(a);
  auto m = direct_sum({Representation::simple(a, 0),
                       Representation::simple(a, n - 1)})
               .module;
  ExamplePaperResult out;
  out.phi = phi(k, m, opt.cap);
  out.psi = psi(k, m, opt.cap);
  out.findim = findim_sample(k, opt);
  out.selfinj = self_injective(a);

  Json checks = Json::array();
  auto expect = [&](const std::string &what, const Json &want,
                    const Json &got) {
    const bool pass = want == got;
    checks.push_back(
        {{"check", what}, {"expected", want}, {"actual", got}, {"pass", pass}});
    if (!pass) {
      out.ok = false;
      out.mismatches.push_back(what + ": expected " + want.dump() + ", got " +
                               got.dump());
    }
  };
  const auto last = label(a, n - 1);
  expect("phi(S1+Sn)", n - 1, out.phi.value);
  expect("phi exact", true, out.phi.exact);
  expect("psi(S1+Sn)", n - 1, out.psi.value);
  expect("psi exact", true, out.psi.exact);
  expect("findim_sample", 0, out.findim.value);
  expect("self_injective", false, out.selfinj.self_injective);
  const auto &bad = out.selfinj.non_injective_vertices;
  expect("vertex n not injective", true,
         std::find(bad.begin(), bad.end(), n - 1) != bad.end());

  out.report = {{"n", n},
                {"p", p},
                {"module", "S1+S" + last},
                {"phi", phi_json(out.phi)},
                {"psi", psi_json(out.psi)},
                {"findim_sample",
                 {{"value", out.findim.value},
                  {"lower_bound", true},
                  {"modules_evaluated", out.findim.modules_evaluated},
                  {"finite_pd_modules", out.findim.finite_pd_modules}}},
                {"self_injectivity", selfinj_json(a, out.selfinj)},
                {"sampling", sample_config(opt)},
                {"checks", checks},
                {"pass", out.ok}};
  return out;
}

// ------------------------------------------------------------ command runner

namespace {

Json config_json(const RunConfig &cfg, const AlgebraPtr &a) {
  Json j = {{"command", cfg.command}};
  if (cfg.command == "example-paper")
    j["fixture"] = {{"name", "paper-example"}, {"n", cfg.n}, {"p", cfg.p}};
  else if (cfg.algebra_file)
    j["algebra_file"] = *cfg.algebra_file;
  else
    j["fixture"] = {{"name", cfg.fixture}, {"n", cfg.n}, {"m", cfg.m},
                    {"p", cfg.p}};
  if (cfg.module_file)
    j["module_file"] = *cfg.module_file;
  if (!cfg.simples.empty())
    j["simples"] = cfg.simples;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["cap"] = cfg.cap;
  j["budget"] = cfg.budget;
  if (a)
    j["algebra_dimension"] = a->dimension();
  return j;
}

SampleOptions sample_options(const RunConfig &cfg) {
  SampleOptions opt;
  opt.samples = cfg.samples;
  opt.budget = cfg.budget;
  opt.seed = cfg.seed;
  opt.cap = cfg.cap;
  return opt;
}

} // namespace

CommandOutput run_command(const RunConfig &cfg) {
  CommandOutput out;
  Table t;
  Json result;
  AlgebraPtr a;

  if (cfg.command == "example-paper") {
    auto opt = sample_options(cfg);
    auto r = example_paper(cfg.n, cfg.p, opt);
    result = r.report;
    out.ok = r.ok;
    t.row("algebra", "linear quiver 1..n with a loop at n, radical square zero");
    t.row("n, p", std::to_string(cfg.n) + ", " + std::to_string(cfg.p));
    t.row("phi(S1+Sn)", phi_text(r.phi) + "  (expected " +
                            std::to_string(cfg.n - 1) + ")");
    t.row("psi(S1+Sn)", std::to_string(r.psi.value) + "  (expected " +
                            std::to_string(cfg.n - 1) + ")");
    t.row("rank sequence", join(r.phi.rank_sequence));
    t.row("findim_sample", std::to_string(r.findim.value) + " over " +
                               std::to_string(r.findim.modules_evaluated) +
                               " modules  (expected 0)");
    t.row("self-injective", r.selfinj.self_injective ? "yes" : "no");
    std::string bad;
    for (auto v : r.selfinj.non_injective_vertices)
      bad += (bad.empty() ? "" : " ") + std::to_string(v + 1);
    t.row("non-injective P at", bad);
    for (const auto &mm : r.mismatches)
      t.row("MISMATCH", mm);
    t.row("verdict", r.ok ? "all values match" : "FAILED");
  } else {
    a = load_algebra(cfg);
    const auto opt = sample_options(cfg);
    KGroup k(a);
    t.row("algebra dimension", std::to_string(a->dimension()));
    if (cfg.command == "phi") {
      auto r = phi(k, load_module(a, cfg), cfg.cap);
      result = phi_json(r);
      t.row("phi", phi_text(r));
      t.row("exact", r.exact ? "yes" : "no (cap hit, lower bound)");
      t.row("rank sequence", join(r.rank_sequence));
      t.row("classes explored", std::to_string(r.classes_explored));
    } else if (cfg.command == "psi") {
      auto r = psi(k, load_module(a, cfg), cfg.cap);
      result = psi_json(r);
      t.row("psi", (r.exact ? "" : ">= ") + std::to_string(r.value));
      t.row("phi", phi_text(r.phi));
      t.row("max finite pd", std::to_string(r.max_finite_pd));
      t.row("exact", r.exact ? "yes" : "no");
    } else if (cfg.command == "pd") {
      auto r = pd(k, load_module(a, cfg), cfg.cap);
      result = pd_json(r);
      t.row("pd", r.to_string());
    } else if (cfg.command == "decompose") {
      auto d = decompose(load_module(a, cfg), k.options());
      result = decomposition_json(d);
      t.row("summands", std::to_string(d.summands.size()));
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        const auto &s = d.summands[i];
        std::string dims;
        for (auto x : s.module.dims())
          dims += (dims.empty() ? "" : ",") + std::to_string(x);
        t.row("  summand " + std::to_string(i + 1),
              "dims (" + dims + ") x" + std::to_string(s.multiplicity) +
                  (s.projective ? " projective" : ""));
      }
      t.row("certificate", d.certificate == Certificate::Deterministic
                               ? "deterministic"
                               : "probabilistic");
    } else if (cfg.command == "selfinj") {
      auto s = self_injective(a);
      result = selfinj_json(a, s);
      t.row("self-injective", s.self_injective ? "yes" : "no");
      if (s.self_injective) {
        std::string perm;
        for (std::size_t i = 0; i < s.nakayama_permutation.size(); ++i)
          perm += (perm.empty() ? "" : " ") + label(a, i) + "->" +
                  label(a, s.nakayama_permutation[i]);
        t.row("nakayama permutation", perm);
      } else {
        std::string bad;
        for (auto v : s.non_injective_vertices)
          bad += (bad.empty() ? "" : " ") + label(a, v);
        t.row("non-injective P at", bad);
        auto w = witness_search(k, cfg.cap);
        result["witness"] = witness_json(a, w);
        t.row("witness", w ? w->construction + ", phi = " + phi_text(w->phi)
                           : "none found");
        out.ok = w.has_value();
      }
    } else if (cfg.command == "witness") {
      auto w = witness_search(k, cfg.cap);
      result = witness_json(a, w);
      t.row("witness", w ? w->construction + " at vertex " +
                               label(a, w->vertex) + ", phi = " +
                               phi_text(w->phi)
                         : "none (self-injective)");
    } else if (cfg.command == "phidim-sample") {
      auto r = phidim_sample(k, opt);
      result = {{"value", r.value},
                {"exact", r.exact},
                {"lower_bound", true},
                {"modules_evaluated", r.modules_evaluated},
                {"witness", module_to_json(r.witness)}};
      t.row("phidim >=", std::to_string(r.value));
      t.row("modules", std::to_string(r.modules_evaluated));
    } else if (cfg.command == "findim-sample") {
      auto r = findim_sample(k, opt);
      result = {{"value", r.value},
                {"exact", true},
                {"lower_bound", true},
                {"modules_evaluated", r.modules_evaluated},
                {"finite_pd_modules", r.finite_pd_modules},
                {"witness", r.witness ? module_to_json(*r.witness) : Json()}};
      t.row("findim >=", std::to_string(r.value));
      t.row("modules", std::to_string(r.modules_evaluated));
    } else if (cfg.command == "check-lemmas") {
      auto r = check_lemmas(a, opt);
      result = r.to_json();
      out.ok = r.ok();
      t.row("self-injective", r.self_injective ? "yes" : "no");
      t.row("modules sampled", std::to_string(r.modules));
      for (const auto &c : r.clauses)
        t.row(c.name, std::string(c.violations ? "FAIL " : "pass ") +
                          std::to_string(c.checked) + " checked" +
                          (c.note.empty() ? "" : "; " + c.note));
      t.row("phi reports exact",
            std::to_string(r.phi_reports - r.inexact_phi_reports) + "/" +
                std::to_string(r.phi_reports));
    } else {
      throw Error("unknown command \"" + cfg.command + "\"");
    }
  }

  out.report = {{"version", kVersion},
                {"config", config_json(cfg, a)},
                {"result", result},
                {"ok", out.ok}};
  out.table = t.str();
  return out;
}

} // namespace sylab
