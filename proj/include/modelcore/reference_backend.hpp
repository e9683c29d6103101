#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modelcore/backend.hpp"

namespace modelcore {

// In-memory backend with solver index semantics. Every operation is checked
// against the dense ranges and any violation raises ContractViolation. When
// columns are deleted, stored rows and the objective are re-indexed with the
// same subtraction rule; references to vanished columns are dropped and a
// warning is recorded.
class ReferenceBackend : public Backend {
 public:
  std::string_view name() const override { return "reference"; }
  bool supports(ConstraintType type) const override;

  void append_column(ColumnData column) override;
  void delete_columns(std::span<const DenseIndex> columns) override;

  void append_linear_row(DenseLinearRow row) override;
  void append_quadratic_row(DenseQuadraticRow row) override;
  void append_sos_row(DenseSosRow row) override;
  void delete_rows(ConstraintType type, std::span<const DenseIndex> rows) override;

  void set_objective(DenseObjective objective) override;
  void set_time_limit(double seconds) override;
  void optimize() override;

  std::size_t num_columns() const override { return columns_.size(); }
  std::size_t num_rows(ConstraintType type) const override;

  const std::vector<ColumnData>& columns() const { return columns_; }
  const std::vector<DenseLinearRow>& linear_rows() const { return linear_rows_; }
  const std::vector<DenseQuadraticRow>& quadratic_rows() const { return quadratic_rows_; }
  const std::vector<DenseSosRow>& sos_rows() const { return sos_rows_; }
  const DenseObjective& objective() const { return objective_; }
  std::optional<double> time_limit() const { return time_limit_; }
  int optimize_calls() const { return optimize_calls_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 protected:
  void check_column(DenseIndex column, std::string_view context) const;

 private:
  std::vector<ColumnData> columns_;
  std::vector<DenseLinearRow> linear_rows_;
  std::vector<DenseQuadraticRow> quadratic_rows_;
  std::vector<DenseSosRow> sos_rows_;
  DenseObjective objective_;
  std::optional<double> time_limit_;
  int optimize_calls_ = 0;
  std::vector<std::string> warnings_;
};

// Accepts only linear rows. Stands in for solvers without quadratic or SOS
// constraints so that bridges can be exercised.
class LinearOnlyBackend : public ReferenceBackend {
 public:
  std::string_view name() const override { return "linear-only"; }
  bool supports(ConstraintType type) const override { return type == ConstraintType::Linear; }
  void append_quadratic_row(DenseQuadraticRow row) override;
  void append_sos_row(DenseSosRow row) override;
};

// Reference backend that renders its state as an LP file. optimize() writes
// the file when an output path is configured; nothing is solved.
class LpWriterBackend : public ReferenceBackend {
 public:
  LpWriterBackend() = default;
  explicit LpWriterBackend(std::filesystem::path output_path)
      : output_path_(std::move(output_path)) {}

  std::string_view name() const override { return "lp"; }
  void optimize() override;

  // Throws IoError if the file cannot be written.
  void write_lp(const std::filesystem::path& path) const;
  void write_lp() const;
  std::string lp_string() const;

  const std::optional<std::filesystem::path>& output_path() const { return output_path_; }

 private:
  std::optional<std::filesystem::path> output_path_;
};

// Value of a stored row's left-hand side at the given column values.
double evaluate_row(const DenseQuadraticRow& row, std::span<const double> column_values);
double evaluate_row(const DenseLinearRow& row, std::span<const double> column_values);
bool is_satisfied(ConstraintSense sense, double lhs, double rhs);

}  // namespace modelcore
