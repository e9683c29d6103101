#include "modelcore/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "modelcore/errors.hpp"
#include "modelcore/generators.hpp"
#include "modelcore/lp_format.hpp"
#include "modelcore/reference_backend.hpp"

namespace modelcore {

ModelFamily parse_family(std::string_view name) {
  if (name == "fac") return ModelFamily::Fac;
  if (name == "lqcp") return ModelFamily::Lqcp;
  throw UsageError("unknown model family '" + std::string(name) + "' (expected fac or lqcp)");
}

BackendKind parse_backend(std::string_view name) {
  if (name == "reference") return BackendKind::Reference;
  if (name == "lp") return BackendKind::Lp;
  throw UsageError("unknown backend '" + std::string(name) + "' (expected reference or lp)");
}

std::string_view to_string(ModelFamily family) {
  return family == ModelFamily::Fac ? "fac" : "lqcp";
}

std::string_view to_string(BackendKind backend) {
  return backend == BackendKind::Reference ? "reference" : "lp";
}

std::unique_ptr<Backend> make_backend(BackendKind kind,
                                      std::optional<std::filesystem::path> lp_path) {
  if (kind == BackendKind::Reference) return std::make_unique<ReferenceBackend>();
  if (lp_path) return std::make_unique<LpWriterBackend>(std::move(*lp_path));
  return std::make_unique<LpWriterBackend>();
}

void generate(Model& model, ModelFamily family, int n) {
  if (family == ModelFamily::Fac) {
    gen_fac(model, FacConfig{n});
  } else {
    gen_lqcp(model, LqcpConfig{n});
  }
}

ModelCounts expected_counts(ModelFamily family, std::int64_t n) {
  return family == ModelFamily::Fac ? fac_counts(n) : lqcp_counts(n);
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace

BenchReport run_benchmark(ModelFamily family, int n, BackendKind backend, int repetitions,
                          std::optional<std::filesystem::path> lp_path) {
  if (repetitions < 1) throw UsageError("repetitions must be at least 1");
  if (family == ModelFamily::Fac && n < 1) throw UsageError("fac requires --n >= 1");
  if (family == ModelFamily::Lqcp && n < 2) throw UsageError("lqcp requires --n >= 2");
  if (lp_path && backend != BackendKind::Lp) {
    throw UsageError("an LP output path only applies to the lp backend");
  }

  BenchReport report;
  report.family = std::string(to_string(family));
  report.n = n;
  report.backend = std::string(to_string(backend));
  report.repetitions = repetitions;
  report.build_seconds = std::numeric_limits<double>::infinity();
  if (family == ModelFamily::Fac) {
    report.parameters = {{"big_m", FacConfig{}.big_m}};
  } else {
    report.parameters = {{"alpha", LqcpConfig{}.alpha}};
  }

  for (int rep = 0; rep < repetitions; ++rep) {
    Model model(make_backend(backend, lp_path));
    const auto start = std::chrono::steady_clock::now();
    generate(model, family, n);
    const auto stop = std::chrono::steady_clock::now();
    model.set_time_limit(0.0);
    model.optimize();
    report.build_seconds =
        std::min(report.build_seconds, std::chrono::duration<double>(stop - start).count());
    report.counts = model.counts();
  }
  report.timestamp = utc_timestamp();
  return report;
}

std::string csv_header() {
  return "family,n,backend,variables,linear_rows,quadratic_rows,sos_rows,build_seconds,reps";
}

std::string to_csv_row(const BenchReport& report) {
  std::ostringstream row;
  row << report.family << ',' << report.n << ',' << report.backend << ','
      << report.counts.variables << ',' << report.counts.linear_constraints << ','
      << report.counts.quadratic_constraints << ',' << report.counts.sos_constraints << ','
      << format_number(report.build_seconds) << ',' << report.repetitions;
  return row.str();
}

std::string to_json(const BenchReport& report) {
  nlohmann::ordered_json json;
  json["family"] = report.family;
  json["n"] = report.n;
  json["backend"] = report.backend;
  json["variables"] = report.counts.variables;
  json["linear_rows"] = report.counts.linear_constraints;
  json["quadratic_rows"] = report.counts.quadratic_constraints;
  json["sos_rows"] = report.counts.sos_constraints;
  json["build_seconds"] = report.build_seconds;
  json["reps"] = report.repetitions;
  json["timestamp"] = report.timestamp;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) parameters[key] = value;
  json["parameters"] = parameters;
  return json.dump(2);
}

}  // namespace modelcore
