#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "sylab/harness.hpp"

using namespace sylab;

namespace {

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"phi", "phi of a module, with its rank sequence"},
    {"psi", "psi of a module"},
    {"pd", "projective dimension of a module"},
    {"selfinj", "self-injectivity verdict, diagnostics and a witness"},
    {"decompose", "indecomposable summands of a module"},
    {"check-lemmas", "sampled property suite for phi and psi"},
    {"example-paper", "phi, psi, findim and self-injectivity of S1+Sn over "
                      "the linear quiver with a loop at n"},
    {"phidim-sample", "lower bound for phidim over sampled modules"},
    {"findim-sample", "lower bound for the finitistic dimension"},
    {"witness", "module with positive phi, when the algebra is not "
                "self-injective"},
};

void add_options(CLI::App *sub, RunConfig &cfg, std::string &out,
                 std::string &simples) {
  sub->add_option("--algebra", cfg.algebra_file, "algebra JSON file");
  sub->add_option("--fixture", cfg.fixture,
                  "built-in algebra: paper-example, nakayama, loop, linear, "
                  "a2, a3");
  sub->add_option("--n", cfg.n, "vertex count for fixtures")
      ->check(CLI::PositiveNumber);
  sub->add_option("--p", cfg.p, "field characteristic for fixtures");
  sub->add_option("--m", cfg.m, "nilpotency bound for nakayama and loop");
  sub->add_option("--module", cfg.module_file, "module JSON file");
  sub->add_option("--simples", simples,
                  "direct sum of simples, comma-separated vertex labels");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--samples", cfg.samples, "random modules to sample");
  sub->add_option("--cap", cfg.cap, "syzygy closure cap");
  sub->add_option("--budget", cfg.budget, "size bound for random modules");
  sub->add_option("--out", out, "write the JSON report here");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Igusa-Todorov functions for bound quiver algebras over F_p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string out_path, simples;
  for (const auto &[name, help] : kCommands) {
    auto *sub = app.add_subcommand(name, help);
    add_options(sub, cfg, out_path, simples);
  }
  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  // The example needs at least 200 sampled modules for findim.
  if (cfg.command == "example-paper" &&
      app.get_subcommands().front()->get_option("--samples")->count() == 0)
    cfg.samples = 200;
  if (!simples.empty()) {
    std::stringstream ss(simples);
    for (std::string s; std::getline(ss, s, ',');)
      if (!s.empty())
        cfg.simples.push_back(s);
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto result = run_command(cfg);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const std::string json = result.report.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << json;
    } else {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      f << json;
    }
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cerr << result.table << "time" << std::string(2, ' ') << t.str()
              << " s\n";
    return result.ok ? 0 : 1;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
