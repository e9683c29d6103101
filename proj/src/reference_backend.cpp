#include "modelcore/reference_backend.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "modelcore/errors.hpp"
#include "modelcore/lp_format.hpp"

namespace modelcore {

namespace {

void check_sorted_unique(std::span<const DenseIndex> indices, std::size_t count,
                         std::string_view what) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= count) {
      throw ContractViolation(std::string(what) + " index " + std::to_string(indices[i]) +
                              " out of range (count " + std::to_string(count) + ")");
    }
    if (i > 0 && indices[i - 1] >= indices[i]) {
      throw ContractViolation(std::string(what) + " indices must be strictly increasing");
    }
  }
}

template <typename T>
void erase_sorted(std::vector<T>& items, std::span<const DenseIndex> sorted) {
  if (sorted.empty()) return;
  std::size_t out = sorted.front();
  std::size_t next_deleted = 0;
  for (std::size_t i = sorted.front(); i < items.size(); ++i) {
    if (next_deleted < sorted.size() && sorted[next_deleted] == i) {
      ++next_deleted;
      continue;
    }
    if (out != i) items[out] = std::move(items[i]);
    ++out;
  }
  items.resize(out);
}

// Maps a column through a deletion: nullopt if it was deleted, otherwise
// the column minus the number of deleted columns before it.
class ColumnRemap {
 public:
  explicit ColumnRemap(std::span<const DenseIndex> deleted) : deleted_(deleted) {}

  std::optional<DenseIndex> operator()(DenseIndex column) const {
    const auto it = std::lower_bound(deleted_.begin(), deleted_.end(), column);
    if (it != deleted_.end() && *it == column) return std::nullopt;
    return column - static_cast<DenseIndex>(it - deleted_.begin());
  }

 private:
  std::span<const DenseIndex> deleted_;
};

std::size_t remap_linear(DenseLinearPart& part, const ColumnRemap& remap) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < part.columns.size(); ++i) {
    if (const auto column = remap(part.columns[i])) {
      part.columns[out] = *column;
      part.coefficients[out] = part.coefficients[i];
      ++out;
    }
  }
  const std::size_t dropped = part.columns.size() - out;
  part.columns.resize(out);
  part.coefficients.resize(out);
  return dropped;
}

std::size_t remap_quadratic(std::vector<DenseQuadraticEntry>& entries, const ColumnRemap& remap) {
  std::size_t out = 0;
  for (const DenseQuadraticEntry& entry : entries) {
    const auto column_1 = remap(entry.column_1);
    const auto column_2 = remap(entry.column_2);
    if (column_1 && column_2) entries[out++] = {*column_1, *column_2, entry.coefficient};
  }
  const std::size_t dropped = entries.size() - out;
  entries.resize(out);
  return dropped;
}

std::size_t remap_sos(DenseSosRow& row, const ColumnRemap& remap) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < row.columns.size(); ++i) {
    if (const auto column = remap(row.columns[i])) {
      row.columns[out] = *column;
      row.weights[out] = row.weights[i];
      ++out;
    }
  }
  const std::size_t dropped = row.columns.size() - out;
  row.columns.resize(out);
  row.weights.resize(out);
  return dropped;
}

std::string dropped_warning(std::size_t count, std::string_view owner, std::size_t row) {
  std::ostringstream msg;
  msg << count << " reference(s) to deleted columns dropped from " << owner << " row " << row;
  return msg.str();
}

}  // namespace

bool ReferenceBackend::supports(ConstraintType type) const {
  return type != ConstraintType::General;
}

void ReferenceBackend::check_column(DenseIndex column, std::string_view context) const {
  if (column >= columns_.size()) {
    throw ContractViolation(std::string(context) + ": column " + std::to_string(column) +
                            " out of range (columns " + std::to_string(columns_.size()) + ")");
  }
}

void ReferenceBackend::append_column(ColumnData column) {
  if (column.lower_bound > column.upper_bound) {
    throw ContractViolation("append_column: lower bound above upper bound");
  }
  columns_.push_back(std::move(column));
}

void ReferenceBackend::delete_columns(std::span<const DenseIndex> columns) {
  check_sorted_unique(columns, columns_.size(), "column");
  if (columns.empty()) return;
  erase_sorted(columns_, columns);

  const ColumnRemap remap(columns);
  for (std::size_t r = 0; r < linear_rows_.size(); ++r) {
    if (const auto n = remap_linear(linear_rows_[r].linear, remap)) {
      warnings_.push_back(dropped_warning(n, "Linear", r));
    }
  }
  for (std::size_t r = 0; r < quadratic_rows_.size(); ++r) {
    auto& row = quadratic_rows_[r];
    const auto n = remap_linear(row.linear, remap) + remap_quadratic(row.quadratic, remap);
    if (n) warnings_.push_back(dropped_warning(n, "Quadratic", r));
  }
  for (std::size_t r = 0; r < sos_rows_.size(); ++r) {
    if (const auto n = remap_sos(sos_rows_[r], remap)) {
      warnings_.push_back(dropped_warning(n, "SOS", r));
    }
  }
  const auto n = remap_linear(objective_.linear, remap) + remap_quadratic(objective_.quadratic, remap);
  if (n) warnings_.push_back(std::to_string(n) + " reference(s) to deleted columns dropped from objective");
}

void ReferenceBackend::append_linear_row(DenseLinearRow row) {
  if (row.linear.columns.size() != row.linear.coefficients.size()) {
    throw ContractViolation("append_linear_row: columns/coefficients length mismatch");
  }
  for (DenseIndex column : row.linear.columns) check_column(column, "append_linear_row");
  linear_rows_.push_back(std::move(row));
}

void ReferenceBackend::append_quadratic_row(DenseQuadraticRow row) {
  if (row.linear.columns.size() != row.linear.coefficients.size()) {
    throw ContractViolation("append_quadratic_row: columns/coefficients length mismatch");
  }
  for (DenseIndex column : row.linear.columns) check_column(column, "append_quadratic_row");
  for (const DenseQuadraticEntry& entry : row.quadratic) {
    check_column(entry.column_1, "append_quadratic_row");
    check_column(entry.column_2, "append_quadratic_row");
  }
  quadratic_rows_.push_back(std::move(row));
}

void ReferenceBackend::append_sos_row(DenseSosRow row) {
  if (row.columns.size() != row.weights.size()) {
    throw ContractViolation("append_sos_row: columns/weights length mismatch");
  }
  for (DenseIndex column : row.columns) check_column(column, "append_sos_row");
  sos_rows_.push_back(std::move(row));
}

void ReferenceBackend::delete_rows(ConstraintType type, std::span<const DenseIndex> rows) {
  switch (type) {
    case ConstraintType::Linear:
      check_sorted_unique(rows, linear_rows_.size(), "Linear row");
      erase_sorted(linear_rows_, rows);
      return;
    case ConstraintType::Quadratic:
      check_sorted_unique(rows, quadratic_rows_.size(), "Quadratic row");
      erase_sorted(quadratic_rows_, rows);
      return;
    case ConstraintType::SOS:
      check_sorted_unique(rows, sos_rows_.size(), "SOS row");
      erase_sorted(sos_rows_, rows);
      return;
    case ConstraintType::General:
      break;
  }
  throw ContractViolation("delete_rows: General constraints are not supported");
}

void ReferenceBackend::set_objective(DenseObjective objective) {
  if (objective.linear.columns.size() != objective.linear.coefficients.size()) {
    throw ContractViolation("set_objective: columns/coefficients length mismatch");
  }
  for (DenseIndex column : objective.linear.columns) check_column(column, "set_objective");
  for (const DenseQuadraticEntry& entry : objective.quadratic) {
    check_column(entry.column_1, "set_objective");
    check_column(entry.column_2, "set_objective");
  }
  objective_ = std::move(objective);
}

void ReferenceBackend::set_time_limit(double seconds) {
  if (!(seconds >= 0.0)) throw ContractViolation("set_time_limit: negative or NaN time limit");
  time_limit_ = seconds;
}

void ReferenceBackend::optimize() { ++optimize_calls_; }

std::size_t ReferenceBackend::num_rows(ConstraintType type) const {
  switch (type) {
    case ConstraintType::Linear:
      return linear_rows_.size();
    case ConstraintType::Quadratic:
      return quadratic_rows_.size();
    case ConstraintType::SOS:
      return sos_rows_.size();
    case ConstraintType::General:
      break;
  }
  return 0;
}

void LinearOnlyBackend::append_quadratic_row(DenseQuadraticRow) {
  throw UnsupportedConstraintError("backend 'linear-only' does not support Quadratic constraints");
}

void LinearOnlyBackend::append_sos_row(DenseSosRow) {
  throw UnsupportedConstraintError("backend 'linear-only' does not support SOS constraints");
}

void LpWriterBackend::optimize() {
  ReferenceBackend::optimize();
  if (output_path_) write_lp(*output_path_);
}

void LpWriterBackend::write_lp(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  modelcore::write_lp(*this, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void LpWriterBackend::write_lp() const {
  if (!output_path_) throw IoError("LpWriterBackend has no output path");
  write_lp(*output_path_);
}

std::string LpWriterBackend::lp_string() const {
  std::ostringstream out;
  modelcore::write_lp(*this, out);
  return out.str();
}

namespace {

double evaluate_linear(const DenseLinearPart& part, std::span<const double> values) {
  double lhs = 0.0;
  for (std::size_t i = 0; i < part.columns.size(); ++i) {
    lhs += part.coefficients[i] * values[part.columns[i]];
  }
  return lhs;
}

}  // namespace

double evaluate_row(const DenseLinearRow& row, std::span<const double> column_values) {
  return evaluate_linear(row.linear, column_values);
}

double evaluate_row(const DenseQuadraticRow& row, std::span<const double> column_values) {
  double lhs = 0.0;
  for (const DenseQuadraticEntry& entry : row.quadratic) {
    lhs += entry.coefficient * column_values[entry.column_1] * column_values[entry.column_2];
  }
  return lhs + evaluate_linear(row.linear, column_values);
}

bool is_satisfied(ConstraintSense sense, double lhs, double rhs) {
  switch (sense) {
    case ConstraintSense::LessEqual:
      return lhs <= rhs;
    case ConstraintSense::Equal:
      return lhs == rhs;
    case ConstraintSense::GreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

}  // namespace modelcore
