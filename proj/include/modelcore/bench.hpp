#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modelcore/model.hpp"

namespace modelcore {

enum class ModelFamily { Fac, Lqcp };
enum class BackendKind { Reference, Lp };

// Throw UsageError on unknown names.
ModelFamily parse_family(std::string_view name);
BackendKind parse_backend(std::string_view name);
std::string_view to_string(ModelFamily family);
std::string_view to_string(BackendKind backend);

std::unique_ptr<Backend> make_backend(BackendKind kind,
                                      std::optional<std::filesystem::path> lp_path = {});

// Builds `family` at size `n` with default constants.
void generate(Model& model, ModelFamily family, int n);
ModelCounts expected_counts(ModelFamily family, std::int64_t n);

struct BenchReport {
  std::string family;
  int n = 0;
  std::string backend;
  ModelCounts counts;
  // Minimum over repetitions of generation plus submission time. Backend
  // construction, set_time_limit(0) and optimize() are outside the timer.
  double build_seconds = 0.0;
  int repetitions = 0;
  std::string timestamp;  // UTC, ISO 8601
  std::vector<std::pair<std::string, double>> parameters;
};

// One fresh model and backend per repetition. With BackendKind::Lp and an
// output path, optimize() writes the LP file after timing.
BenchReport run_benchmark(ModelFamily family, int n, BackendKind backend, int repetitions,
                          std::optional<std::filesystem::path> lp_path = {});

std::string csv_header();
std::string to_csv_row(const BenchReport& report);
std::string to_json(const BenchReport& report);

}  // namespace modelcore
