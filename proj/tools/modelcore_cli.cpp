// Command-line front end: build benchmark models and report timings, or
// print the closed-form model sizes.
//
//   modelcore bench <fac|lqcp> --n <int> --backend <reference|lp>
//                   [--out <path>] [--reps <int>] [--format <csv|json>]
//   modelcore counts <fac|lqcp> --n <int>
//
// Exit status: 0 on success, 2 on usage errors, 1 on other failures.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "modelcore/bench.hpp"
#include "modelcore/errors.hpp"

namespace {

constexpr int kUsageExit = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimization model construction benchmarks"};
  app.require_subcommand(1);

  std::string family;
  std::string backend = "reference";
  std::string format = "csv";
  std::string out;
  int n = 0;
  int reps = 1;

  auto* bench = app.add_subcommand("bench", "Build a benchmark model and time it");
  bench->add_option("family", family, "Model family")->required()->check(CLI::IsMember({"fac", "lqcp"}));
  bench->add_option("--n", n, "Size parameter")->required();
  bench->add_option("--backend", backend, "Backend")->check(CLI::IsMember({"reference", "lp"}));
  bench->add_option("--out", out, "LP file path (lp backend only; default <family>-<n>.lp)");
  bench->add_option("--reps", reps, "Repetitions; the minimum time is reported");
  bench->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));

  std::string counts_family;
  int counts_n = 0;
  auto* counts = app.add_subcommand("counts", "Print closed-form model sizes");
  counts->add_option("family", counts_family, "Model family")
      ->required()
      ->check(CLI::IsMember({"fac", "lqcp"}));
  counts->add_option("--n", counts_n, "Size parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (bench->parsed()) {
      const auto model_family = modelcore::parse_family(family);
      const auto backend_kind = modelcore::parse_backend(backend);
      std::optional<std::filesystem::path> lp_path;
      if (!out.empty()) {
        lp_path = out;
      } else if (backend_kind == modelcore::BackendKind::Lp) {
        lp_path = family + "-" + std::to_string(n) + ".lp";
      }
      const auto report = modelcore::run_benchmark(model_family, n, backend_kind, reps, lp_path);
      if (format == "json") {
        std::cout << modelcore::to_json(report) << '\n';
      } else {
        std::cout << modelcore::csv_header() << '\n' << modelcore::to_csv_row(report) << '\n';
      }
      return 0;
    }
    const auto model_family = modelcore::parse_family(counts_family);
    if (counts_n < (model_family == modelcore::ModelFamily::Fac ? 1 : 2)) {
      throw modelcore::UsageError("--n too small for " + counts_family);
    }
    const auto sizes = modelcore::expected_counts(model_family, counts_n);
    std::cout << "family,n,variables,linear_rows,quadratic_rows,sos_rows\n"
              << counts_family << ',' << counts_n << ',' << sizes.variables << ','
              << sizes.linear_constraints << ',' << sizes.quadratic_constraints << ','
              << sizes.sos_constraints << '\n';
    return 0;
  } catch (const modelcore::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
