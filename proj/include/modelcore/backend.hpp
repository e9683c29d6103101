#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modelcore/handles.hpp"

namespace modelcore {

using DenseIndex = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VariableDomain : std::uint8_t { Continuous, Binary, Integer };
enum class ConstraintSense : std::uint8_t { LessEqual, Equal, GreaterEqual };
enum class ObjectiveSense : std::uint8_t { Minimize, Maximize };
enum class SosType : std::uint8_t { SOS1 = 1, SOS2 = 2 };

struct ColumnData {
  double lower_bound = -kInfinity;
  double upper_bound = kInfinity;
  VariableDomain domain = VariableDomain::Continuous;
  std::string name;

  friend bool operator==(const ColumnData&, const ColumnData&) = default;
};

struct DenseQuadraticEntry {
  DenseIndex column_1 = 0;
  DenseIndex column_2 = 0;
  double coefficient = 0.0;

  friend bool operator==(const DenseQuadraticEntry&, const DenseQuadraticEntry&) = default;
};

// Linear part of a row or objective in dense column space.
struct DenseLinearPart {
  std::vector<DenseIndex> columns;
  std::vector<double> coefficients;

  friend bool operator==(const DenseLinearPart&, const DenseLinearPart&) = default;
};

struct DenseLinearRow {
  DenseLinearPart linear;
  ConstraintSense sense = ConstraintSense::LessEqual;
  double rhs = 0.0;
  std::string name;

  friend bool operator==(const DenseLinearRow&, const DenseLinearRow&) = default;
};

// Quadratic entries follow the expression convention: (i, j, c) adds c*x_i*x_j,
// with i <= j.
struct DenseQuadraticRow {
  DenseLinearPart linear;
  std::vector<DenseQuadraticEntry> quadratic;
  ConstraintSense sense = ConstraintSense::LessEqual;
  double rhs = 0.0;
  std::string name;

  friend bool operator==(const DenseQuadraticRow&, const DenseQuadraticRow&) = default;
};

struct DenseSosRow {
  SosType type = SosType::SOS1;
  std::vector<DenseIndex> columns;
  std::vector<double> weights;
  std::string name;

  friend bool operator==(const DenseSosRow&, const DenseSosRow&) = default;
};

struct DenseObjective {
  DenseLinearPart linear;
  std::vector<DenseQuadraticEntry> quadratic;
  double constant = 0.0;
  ObjectiveSense sense = ObjectiveSense::Minimize;

  friend bool operator==(const DenseObjective&, const DenseObjective&) = default;
};

// Index-based solver interface. Columns and each row class are numbered
// 0..count-1. Deleting a sorted set of indices renumbers every survivor down
// by the number of deleted indices before it.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string_view name() const = 0;
  virtual bool supports(ConstraintType type) const = 0;

  virtual void append_column(ColumnData column) = 0;
  // `columns` must be strictly increasing.
  virtual void delete_columns(std::span<const DenseIndex> columns) = 0;

  virtual void append_linear_row(DenseLinearRow row) = 0;
  virtual void append_quadratic_row(DenseQuadraticRow row) = 0;
  virtual void append_sos_row(DenseSosRow row) = 0;
  // `rows` must be strictly increasing.
  virtual void delete_rows(ConstraintType type, std::span<const DenseIndex> rows) = 0;

  virtual void set_objective(DenseObjective objective) = 0;
  virtual void set_time_limit(double seconds) = 0;
  virtual void optimize() = 0;

  virtual std::size_t num_columns() const = 0;
  virtual std::size_t num_rows(ConstraintType type) const = 0;
};

}  // namespace modelcore
