#include "matkern/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matkern/driver.hpp"
#include "matkern/errors.hpp"
#include "matkern/generate.hpp"
#include "matkern/io.hpp"
#include "matkern/rng.hpp"
#include "matkern/verify.hpp"

namespace matkern {

namespace {

std::uint64_t env_seed_default() {
  if (const char* env = std::getenv("MATKERN_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

void warn_to_stderr(const std::string& message) {
  std::cerr << "warning: " << message << "\n";
}

Instance load(const std::string& path) {
  return load_instance(path, warn_to_stderr);
}

int cmd_gen(const std::string& kind, const GenParams& params,
            std::uint64_t seed, const std::string& out) {
  Instance instance = generate(kind, params, seed);
  save_instance(instance, out);
  std::cout << "wrote " << out << " (" << instance.name << ", digest "
            << instance_digest(instance) << ")\n";
  return 0;
}

int cmd_kernelize(const std::string& in, const std::string& out,
                  const std::string& alg_str, std::uint64_t seed,
                  std::optional<std::int64_t> rounds, int repeat,
                  std::optional<int> k_override) {
  auto alg = parse_alg(alg_str);
  if (!alg) throw malformed_input("unknown --alg '" + alg_str + "'");
  Instance instance = load(in);
  Kernel kernel =
      run_kernel_repeated(instance, *alg, seed, repeat, rounds, k_override);
  KernelFile file;
  file.instance_digest = instance_digest(instance);
  file.algorithm = kernel.algorithm;
  file.seed = seed;
  file.rounds = kernel.rounds;
  file.repeat = repeat;
  file.elements = kernel.elements;
  save_kernel(file, out);
  std::cout << "wrote " << out << " (|R| = " << file.elements.size()
            << ", T = " << file.rounds << ", repeat = " << repeat << ")\n";
  return 0;
}

int cmd_verify(const std::string& in, const std::string& kernel_path,
               bool as_json) {
  Instance instance = load(in);
  KernelFile kernel = load_kernel(kernel_path);
  const std::string digest = instance_digest(instance);
  if (kernel.instance_digest != digest) {
    throw malformed_input("kernel was produced for a different instance "
                          "(digest mismatch)");
  }
  VerificationReport report =
      check_single_exc(instance, kernel.elements, instance.k);
  enumerate_feasible(instance, instance.k, [&](const ElementSet& x_set) {
    if (x_set.empty()) return;
    if (!check_reachability(instance, kernel.elements, x_set).ok) {
      report.reachability_failures.push_back(x_set);
    }
  });
  ElementSet ground(instance.n);
  for (int e = 0; e < instance.n; ++e) ground[e] = e;
  report.opt_full = opt_value(instance, ground, instance.k);
  report.opt_kernel = opt_value(instance, kernel.elements, instance.k);
  report.trials = 1;
  report.successes = report.clean() ? 1 : 0;

  if (as_json) {
    std::cout << report_to_json(report);
  } else {
    std::cout << "instance: " << instance.name << " (" << digest << ")\n"
              << "kernel: |R| = " << kernel.elements.size() << ", algorithm = "
              << kernel.algorithm << ", seed = " << kernel.seed
              << ", T = " << kernel.rounds << ", repeat = " << kernel.repeat
              << "\n"
              << "single_exc_violations: "
              << report.single_exc_violations.size() << "\n"
              << "reachability_failures: "
              << report.reachability_failures.size() << "\n"
              << "opt_full: " << report.opt_full << "\n"
              << "opt_kernel: " << report.opt_kernel << "\n"
              << "verdict: " << (report.clean() ? "PASS" : "FAIL") << "\n";
  }
  return report.clean() ? 0 : 1;
}

int cmd_solve(const std::string& in, const std::string& kernel_path) {
  Instance instance = load(in);
  ElementSet domain(instance.n);
  for (int e = 0; e < instance.n; ++e) domain[e] = e;
  if (!kernel_path.empty()) {
    KernelFile kernel = load_kernel(kernel_path);
    if (kernel.instance_digest != instance_digest(instance)) {
      throw malformed_input("kernel was produced for a different instance "
                            "(digest mismatch)");
    }
    domain = kernel.elements;
  }
  auto [value, solution] = opt_solution(instance, domain, instance.k);
  std::cout << "opt_value: " << value << "\n";
  std::cout << "opt_set:";
  for (int e : solution) std::cout << " " << e;
  std::cout << "\n";
  return 0;
}

int cmd_bench(const std::vector<std::string>& inputs,
              const std::string& algs_csv, int trials, std::uint64_t seed,
              const std::string& out) {
  std::vector<Alg> algs;
  std::string token;
  std::istringstream algs_in(algs_csv);
  while (std::getline(algs_in, token, ',')) {
    auto alg = parse_alg(token);
    if (!alg) throw malformed_input("unknown algorithm '" + token + "'");
    algs.push_back(*alg);
  }
  if (algs.empty()) throw malformed_input("bench: no algorithms given");

  std::ostringstream csv;
  csv << "instance,algorithm,k,T,R_size,wall_ms,success_fraction\n";
  for (const std::string& path : inputs) {
    Instance instance = load(path);
    for (Alg alg : algs) {
      const auto start = std::chrono::steady_clock::now();
      Kernel kernel = run_kernel(instance, alg, seed);
      const auto stop = std::chrono::steady_clock::now();
      const double wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      SuccessRateReport rate = estimate_success_rate(
          instance, make_kernelizer(alg), trials, seed);
      csv << instance.name << "," << alg_name(alg) << "," << instance.k << ","
          << kernel.rounds << "," << kernel.elements.size() << "," << wall_ms
          << "," << rate.fraction() << "\n";
    }
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw malformed_input("cannot write file: " + out);
    f << csv.str();
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"reachable-kernel toolkit for weighted matroid intersection"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind = "partition";
  GenParams params;
  std::uint64_t gen_seed = env_seed_default();
  std::string gen_out;
  gen->add_option("--kind", gen_kind,
                  "partition|coverable-graphic|coverable-cographic|"
                  "transversal|laminar|matching");
  gen->add_option("--n", params.n, "ground set size");
  gen->add_option("--d", params.d, "number of matroids");
  gen->add_option("--k", params.k, "parameter k");
  gen->add_option("--seed", gen_seed, "random seed (env MATKERN_SEED)");
  gen->add_option("--wmin", params.weight_min, "minimum weight");
  gen->add_option("--wmax", params.weight_max, "maximum weight");
  gen->add_option("--vertices", params.vertices, "graph vertices (0 = auto)");
  gen->add_option("--rights", params.right_vertices,
                  "transversal right vertices (0 = auto)");
  gen->add_option("--depth", params.depth, "laminar nesting depth");
  gen->add_option("--colors", params.colors, "matching colors (0 = auto)");
  gen->add_option("-o,--out", gen_out, "output instance file")->required();

  // kernelize
  auto* ker = app.add_subcommand("kernelize", "compute a reachable kernel");
  std::string ker_in, ker_out, ker_alg;
  std::uint64_t ker_seed = env_seed_default();
  std::int64_t ker_rounds = -1;
  int ker_repeat = 1;
  int ker_k = 0;
  ker->add_option("-i,--in", ker_in, "instance file")->required();
  ker->add_option("-o,--out", ker_out, "output kernel file")->required();
  ker->add_option("--alg", ker_alg,
                  "partition|coverable|transversal|laminar|matching|"
                  "deterministic")
      ->required();
  ker->add_option("--seed", ker_seed, "random seed (env MATKERN_SEED)");
  ker->add_option("--rounds", ker_rounds, "override the round count T");
  ker->add_option("--repeat", ker_repeat,
                  "union of this many independent kernels");
  ker->add_option("--k", ker_k, "override the instance's k");

  // verify
  auto* ver = app.add_subcommand("verify", "check a kernel against its "
                                           "instance");
  std::string ver_in, ver_kernel;
  bool ver_json = false;
  ver->add_option("-i,--in", ver_in, "instance file")->required();
  ver->add_option("-r,--kernel", ver_kernel, "kernel file")->required();
  ver->add_flag("--json", ver_json, "print the report as JSON");

  // solve
  auto* sol = app.add_subcommand("solve", "exact optimum by branch and bound");
  std::string sol_in, sol_kernel;
  sol->add_option("-i,--in", sol_in, "instance file")->required();
  sol->add_option("-r,--kernel", sol_kernel,
                  "restrict the search to a kernel file");

  // bench
  auto* ben = app.add_subcommand("bench", "CSV benchmark over instances");
  std::vector<std::string> ben_in;
  std::string ben_algs = "partition";
  std::string ben_out;
  int ben_trials = 100;
  std::uint64_t ben_seed = env_seed_default();
  ben->add_option("-i,--in", ben_in, "instance files")->required();
  ben->add_option("--algs", ben_algs, "comma-separated algorithms");
  ben->add_option("--trials", ben_trials, "success-rate trials per row");
  ben->add_option("--seed", ben_seed, "random seed (env MATKERN_SEED)");
  ben->add_option("-o,--out", ben_out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_kind, params, gen_seed, gen_out);
    if (ker->parsed()) {
      return cmd_kernelize(
          ker_in, ker_out, ker_alg, ker_seed,
          ker_rounds >= 0 ? std::optional<std::int64_t>(ker_rounds)
                          : std::nullopt,
          ker_repeat, ker_k > 0 ? std::optional<int>(ker_k) : std::nullopt);
    }
    if (ver->parsed()) return cmd_verify(ver_in, ver_kernel, ver_json);
    if (sol->parsed()) return cmd_solve(sol_in, sol_kernel);
    if (ben->parsed()) {
      return cmd_bench(ben_in, ben_algs, ben_trials, ben_seed, ben_out);
    }
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace matkern
