// kspectral: classify / verify / bound / search / scan on the annulus 1/R < |z| < R.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kspectral/bounds.hpp"
#include "kspectral/classes.hpp"
#include "kspectral/errors.hpp"
#include "kspectral/search.hpp"
#include "kspectral/serialize.hpp"
#include "kspectral/verify_suite.hpp"

namespace {

using namespace kspectral;

enum class SamplerClass { Auto, Quantum, Numerical };

struct CliConfig {
  double R = 2.0;
  std::string matrix_path;
  std::optional<int> dim;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::string out_path;
  Suite suite = Suite::All;
  int degree = 0;
  int iters = 400;
  int restarts = 8;
  int samples = 10;
  std::vector<double> R_list;
  SamplerClass cls = SamplerClass::Auto;
  std::string function_path;
};

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

void require_radius(double R) {
  if (!(R > 1.0 + kMinThickness)) bad_input("--R must exceed 1");
}

double sampler_margin(double R) { return std::min(0.1, 0.25 * (R - 1.0)); }

OperatorClass resolve_class(SamplerClass cls) {
  return cls == SamplerClass::Numerical ? OperatorClass::Numerical : OperatorClass::Quantum;
}

/// --matrix xor (--dim with the sampler class and seed).
Matrix load_matrix(const CliConfig& cfg) {
  const bool from_file = !cfg.matrix_path.empty();
  if (from_file == cfg.dim.has_value()) bad_input("give exactly one of --matrix or --dim");
  if (from_file) return read_matrix_file(cfg.matrix_path);
  if (*cfg.dim < 1) bad_input("--dim must be positive");
  return sample_member(resolve_class(cfg.cls), *cfg.dim, cfg.R, sampler_margin(cfg.R), cfg.seed);
}

int run_classify(const CliConfig& cfg) {
  require_radius(cfg.R);
  std::cout << to_json(classify(load_matrix(cfg), cfg.R)).dump(2) << '\n';
  return kExitOk;
}

int run_verify_command(const CliConfig& cfg) {
  require_radius(cfg.R);
  if (!(cfg.tol > 0.0)) bad_input("--tol must be positive");
  if (cfg.samples < 1) bad_input("--samples must be positive");
  VerifyOptions options;
  options.suite = cfg.suite;
  options.R = cfg.R;
  options.dim = cfg.dim.value_or(4);
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.tol = cfg.tol;
  const auto rows = run_verify(options);
  write_verify_csv(std::cout, rows);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& row) { return row.pass; });
  return ok ? kExitOk : kExitFailed;
}

int run_bound(const CliConfig& cfg) {
  require_radius(cfg.R);
  const Annulus annulus = Annulus::make(cfg.R);
  const Matrix A = load_matrix(cfg);
  const int degree = cfg.degree > 0 ? cfg.degree : static_cast<int>(A.rows());
  LaurentFunction f = cfg.function_path.empty() ? random_laurent(-degree, degree, cfg.seed, annulus)
                                                : read_function_file(cfg.function_path);
  if (f.is_zero()) bad_input("the test function is identically zero");
  f = (1.0 / boundary_sup(f, annulus)) * f;
  const ClassReport classes = classify(A, cfg.R);
  const ResolventTable table = converged_resolvents(A, annulus, {1e-12, 256, 1 << 16});
  std::cout << to_json(bound_report(f, table, classes)).dump(2) << '\n';
  return kExitOk;
}

int run_search(const CliConfig& cfg) {
  require_radius(cfg.R);
  if (cfg.iters < 1 || cfg.restarts < 1) bad_input("--iters and --restarts must be positive");
  const Annulus annulus = Annulus::make(cfg.R);
  const Matrix A = load_matrix(cfg);
  const int degree = cfg.degree > 0 ? cfg.degree : static_cast<int>(A.rows());
  const SearchResult result = search_k_lower(A, annulus, -degree, degree, cfg.iters, cfg.restarts, cfg.seed);
  std::cout << to_json(result).dump(2) << '\n';
  return kExitOk;
}

int run_scan(const CliConfig& cfg) {
  if (cfg.R_list.empty()) bad_input("--R-list needs at least one radius");
  for (double R : cfg.R_list) require_radius(R);
  if (!cfg.dim || *cfg.dim < 1) bad_input("--dim must be positive");
  if (cfg.samples < 1) bad_input("--samples must be positive");
  if (cfg.iters < 1 || cfg.restarts < 1) bad_input("--iters and --restarts must be positive");
  const SearchBudget budget{cfg.iters, cfg.restarts, cfg.degree};
  const auto rows = scan(resolve_class(cfg.cls), *cfg.dim, cfg.R_list, cfg.samples, budget, cfg.seed);
  if (cfg.out_path.empty()) {
    write_scan_csv(std::cout, rows);
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) bad_input("cannot write " + cfg.out_path);
    write_scan_csv(out, rows);
  }
  return kExitOk;
}

void add_matrix_source(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--matrix,--matrix-path", cfg.matrix_path, "Matrix JSON file {\"dim\": d, \"rows\": ...}");
  cmd->add_option("--dim", cfg.dim, "Sample a member of this dimension instead of reading --matrix");
  cmd->add_option("--class", cfg.cls, "Sampler class (auto samples the quantum class)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, SamplerClass>{{"auto", SamplerClass::Auto},
                                                                              {"quantum", SamplerClass::Quantum},
                                                                              {"numerical", SamplerClass::Numerical}},
                                          CLI::ignore_case));
  cmd->add_option("--seed", cfg.seed, "Seed for every randomized step");
}

void add_search_budget(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--degree", cfg.degree, "Exponent window [-degree, degree]; 0 uses the dimension");
  cmd->add_option("--iters", cfg.iters, "Hill-climbing passes per restart");
  cmd->add_option("--restarts", cfg.restarts, "Independent restarts");
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Spectral-set bounds on the annulus 1/R < |z| < R"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "Norms, numerical radii and class membership (JSON)");
  classify_cmd->add_option("--R", cfg.R, "Outer radius");
  add_matrix_source(classify_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks (CSV; exit 1 on failure)");
  verify_cmd->add_option("--R", cfg.R, "Outer radius");
  verify_cmd->add_option("--dim", cfg.dim, "Dimension of sampled members");
  verify_cmd->add_option("--samples", cfg.samples, "Members and test functions per check");
  verify_cmd->add_option("--seed", cfg.seed, "Seed");
  verify_cmd->add_option("--tol", cfg.tol, "Slack on the inequality checks");
  verify_cmd->add_option("--suite", cfg.suite, "kernels, lemma, sbound or all")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Suite>{
              {"kernels", Suite::Kernels}, {"lemma", Suite::Lemma}, {"sbound", Suite::SBound}, {"all", Suite::All}},
          CLI::ignore_case));

  auto* bound_cmd = app.add_subcommand("bound", "Two-constant upper bound for one test function (JSON)");
  bound_cmd->add_option("--R", cfg.R, "Outer radius");
  add_matrix_source(bound_cmd, cfg);
  bound_cmd->add_option("--function", cfg.function_path, "JSON file with the test function as [[k, re, im], ...]; random if absent");
  bound_cmd->add_option("--degree", cfg.degree, "Exponent window of the random test function");

  auto* search_cmd = app.add_subcommand("search", "Lower bound on the spectral constant (JSON)");
  search_cmd->add_option("--R", cfg.R, "Outer radius");
  add_matrix_source(search_cmd, cfg);
  add_search_budget(search_cmd, cfg);

  auto* scan_cmd = app.add_subcommand("scan", "Lower/upper bound sweep over radii (CSV)");
  scan_cmd->add_option("--R-list", cfg.R_list, "Outer radii")->delimiter(',');
  scan_cmd->add_option("--samples", cfg.samples, "Members per radius");
  scan_cmd->add_option("--out,--out-path", cfg.out_path, "CSV destination (standard output if absent)");
  add_matrix_source(scan_cmd, cfg);
  add_search_budget(scan_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*classify_cmd) return run_classify(cfg);
    if (*verify_cmd) return run_verify_command(cfg);
    if (*bound_cmd) return run_bound(cfg);
    if (*search_cmd) return run_search(cfg);
    if (*scan_cmd) {
      if (!cfg.matrix_path.empty()) bad_input("scan samples its own members; --matrix is not accepted");
      return run_scan(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
