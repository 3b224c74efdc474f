// Command-line front end: estimate survival/censoring curves from CSV data,
// run the identity verification battery, and drive simulations.
//
// Exit codes: 0 success, 1 identity-check failure, 2 input/parse error,
// 3 computation error.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "survkit/csv.hpp"
#include "survkit/estimators.hpp"
#include "survkit/identities.hpp"
#include "survkit/jump_table.hpp"
#include "survkit/report_json.hpp"
#include "survkit/sim_json.hpp"
#include "survkit/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitComputeError = 3;

survkit::CensoredSample load_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw survkit::CsvError("cannot open input file: " + path, 0);
  return survkit::read_sample_csv(in);
}

std::vector<double> default_grid(const survkit::JumpTable& jt) {
  std::vector<double> grid;
  grid.reserve(jt.m() + 2);
  grid.push_back(0.0);
  grid.insert(grid.end(), jt.times.begin(), jt.times.end());
  grid.push_back(jt.last_time() + 1.0);
  return grid;
}

survkit::StepFunction compute_estimator(const std::string& id, const survkit::JumpTable& jt,
                                        double tol, int max_iter) {
  if (id == "naive") return survkit::naive_survival(jt);
  if (id == "pl") return survkit::product_limit_failure(jt);
  if (id == "sc") return survkit::self_consistent(jt, tol, max_iter).estimate;
  if (id == "ipcw-cdf") {
    return survkit::ipcw_cdf(jt, survkit::product_limit_censoring_dagger(jt));
  }
  if (id == "ipcw-surv") {
    return survkit::ipcw_survival_tilde(jt, survkit::product_limit_censoring_dagger(jt));
  }
  if (id == "rttr") return survkit::rttr(jt).estimate;
  if (id == "censor-pl") return survkit::product_limit_censoring_dagger(jt);
  if (id == "censor-naive") return survkit::product_limit_censoring_naive(jt);
  throw std::logic_error("unknown estimator id: " + id);
}

struct EstimateOptions {
  std::string input;
  std::string estimator;
  std::vector<double> eval_at;
  std::string format = "csv";
  double tol = 1e-12;
  int max_iter = 10000;
};

int run_estimate(const EstimateOptions& opt) {
  const survkit::CensoredSample sample = load_sample(opt.input);
  const survkit::JumpTable jt = survkit::build_jump_table(sample);

  std::vector<double> grid = opt.eval_at.empty() ? default_grid(jt) : opt.eval_at;
  for (double t : grid) {
    if (!(t >= 0.0)) {
      throw survkit::CsvError("evaluation points must be nonnegative", 0);
    }
  }

  const survkit::StepFunction curve = compute_estimator(opt.estimator, jt, opt.tol, opt.max_iter);

  if (opt.format == "json") {
    nlohmann::json points = nlohmann::json::array();
    for (double t : grid) {
      const double value = curve(t);
      points.push_back({{"t", t},
                        {"value", value},
                        {"left_limit", t > 0.0 ? curve.left_limit(t) : value}});
    }
    std::cout << nlohmann::json{{"estimator", opt.estimator}, {"points", std::move(points)}}
                     .dump(2)
              << '\n';
  } else {
    survkit::write_curve_csv(std::cout, curve, grid);
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string input;
  double tol = 1e-12;
  std::string format = "json";
};

int run_verify(const VerifyOptions& opt) {
  const survkit::CensoredSample sample = load_sample(opt.input);
  const survkit::VerificationReport report =
      survkit::verify_all(survkit::build_jump_table(sample), opt.tol);

  if (opt.format == "csv") {
    std::cout << "name,maxResidual,tolerance,passed,conditionHolds\n";
    for (const survkit::IdentityCheck& check : report.checks) {
      std::cout << check.name << ',' << survkit::format_double(check.max_residual) << ','
                << survkit::format_double(check.tolerance) << ','
                << (check.passed ? "true" : "false") << ','
                << (check.condition_holds.has_value() ? (*check.condition_holds ? "true" : "false")
                                                      : "")
                << '\n';
    }
  } else {
    std::cout << survkit::report_to_json(report).dump(2) << '\n';
  }

  std::size_t passed = 0;
  for (const survkit::IdentityCheck& check : report.checks) passed += check.passed ? 1 : 0;
  std::cerr << passed << '/' << report.checks.size() << " checks passed\n";
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

struct SimulateOptions {
  std::string config;
  std::string out;
  int reps = 0;
  std::uint64_t seed_offset = 0;
  bool verify = false;
  double tol = 1e-12;
};

int run_simulate(const SimulateOptions& opt) {
  survkit::SimConfig config = survkit::load_sim_config(opt.config);

  int passed = 0;
  int common_disc = 0;
  int last_all_failures = 0;
  for (int rep = 1; rep <= opt.reps; ++rep) {
    survkit::SimConfig rep_config = config;
    rep_config.seed = config.seed + opt.seed_offset + static_cast<std::uint64_t>(rep - 1);
    const survkit::CensoredSample sample = survkit::generate(rep_config);

    const std::string path = opt.out + "_r" + std::to_string(rep) + ".csv";
    std::ofstream out(path);
    if (!out) throw survkit::ConfigError("cannot write sample file: " + path);
    survkit::write_sample_csv(out, sample);

    if (opt.verify) {
      const survkit::JumpTable jt = survkit::build_jump_table(sample);
      const survkit::VerificationReport report = survkit::verify_all(jt, opt.tol);
      passed += report.all_passed() ? 1 : 0;
      common_disc += report.summary.common_discontinuity_before_last ? 1 : 0;
      last_all_failures += report.summary.last_time_all_failures ? 1 : 0;
    }
  }

  std::cout << "wrote " << opt.reps << " samples: " << opt.out << "_r1.csv .. " << opt.out
            << "_r" << opt.reps << ".csv\n";
  if (opt.verify) {
    std::cout << "verify: " << passed << '/' << opt.reps << " datasets passed all checks\n"
              << "common-discontinuity-before-last: " << common_disc << '\n'
              << "last-time-all-failures: " << last_all_failures << '\n';
    if (passed != opt.reps) return kExitCheckFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonparametric survival and censoring estimation with identity verification"};
  app.require_subcommand(1);

  EstimateOptions estimate_opt;
  CLI::App* estimate = app.add_subcommand("estimate", "evaluate one estimator on a CSV sample");
  estimate->add_option("--input", estimate_opt.input, "input CSV file (header time,status)")
      ->required();
  estimate
      ->add_option("--estimator", estimate_opt.estimator,
                   "one of naive, pl, sc, ipcw-cdf, ipcw-surv, rttr, censor-pl, censor-naive")
      ->required()
      ->check(CLI::IsMember({"naive", "pl", "sc", "ipcw-cdf", "ipcw-surv", "rttr", "censor-pl",
                             "censor-naive"}));
  estimate
      ->add_option("--eval-at", estimate_opt.eval_at,
                   "comma-separated evaluation points (default: 0, unique times, last + 1)")
      ->delimiter(',');
  estimate->add_option("--format", estimate_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  estimate->add_option("--tol", estimate_opt.tol, "fixed-point tolerance for sc")
      ->check(CLI::PositiveNumber);
  estimate->add_option("--max-iter", estimate_opt.max_iter, "iteration cap for sc")
      ->check(CLI::PositiveNumber);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run the identity battery on a CSV sample");
  verify->add_option("--input", verify_opt.input, "input CSV file (header time,status)")
      ->required();
  verify->add_option("--tol", verify_opt.tol, "residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  SimulateOptions simulate_opt;
  CLI::App* simulate = app.add_subcommand("simulate", "generate censored samples from a config");
  simulate->add_option("--config", simulate_opt.config, "JSON simulation config")->required();
  simulate->add_option("--out", simulate_opt.out, "output path prefix")->required();
  simulate->add_option("--reps", simulate_opt.reps, "number of replicate samples")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed-offset", simulate_opt.seed_offset,
                       "added to the config seed before the per-replicate offset");
  simulate->add_flag("--verify", simulate_opt.verify, "verify each replicate and summarize");
  simulate->add_option("--tol", simulate_opt.tol, "residual tolerance for --verify")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);
    app.exit(err);
    return kExitInputError;
  }

  try {
    if (estimate->parsed()) return run_estimate(estimate_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    return run_simulate(simulate_opt);
  } catch (const survkit::CsvError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (const survkit::ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (const survkit::ConfigError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitComputeError;
  }
}
