#include "modelcore/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "modelcore/errors.hpp"

namespace modelcore {

namespace {

void check_finite_rhs(double rhs) {
  if (!std::isfinite(rhs)) throw ValidationError("right-hand side must be finite");
}

[[noreturn]] void throw_unsupported(const Backend& backend, std::string_view kind) {
  std::ostringstream msg;
  msg << "backend '" << backend.name() << "' does not support " << kind
      << " constraints and no bridge is registered";
  throw UnsupportedConstraintError(msg.str());
}

// Clears the running flag of a bridge even if it throws.
class BridgeGuard {
 public:
  explicit BridgeGuard(bool& flag) : flag_(flag) { flag_ = true; }
  ~BridgeGuard() { flag_ = false; }
  BridgeGuard(const BridgeGuard&) = delete;
  BridgeGuard& operator=(const BridgeGuard&) = delete;

 private:
  bool& flag_;
};

}  // namespace

Model::Model(std::unique_ptr<Backend> backend) : backend_(std::move(backend)) {
  if (!backend_) throw ValidationError("Model requires a backend");
}

const BipurMap& Model::constraint_map(ConstraintType type) const {
  if (type == ConstraintType::General) {
    throw UnsupportedConstraintError("General constraints are not supported");
  }
  return constraint_maps_[static_cast<std::size_t>(type)];
}

BipurMap& Model::map_for(ConstraintType type) {
  return const_cast<BipurMap&>(std::as_const(*this).constraint_map(type));
}

void Model::check_room(const BipurMap& map, ConstraintType type) const {
  if (map.next_bit() >= BipurMap::kMaxEntities) {
    throw CapacityError(std::string("no room for more ") + std::string(to_string(type)) +
                        " constraints");
  }
}

VariableIndex Model::add_variable(double lower_bound, double upper_bound, VariableDomain domain,
                                  std::string_view name) {
  if (std::isnan(lower_bound) || std::isnan(upper_bound)) {
    throw ValidationError("variable bounds must not be NaN");
  }
  if (domain == VariableDomain::Binary) {
    lower_bound = std::max(lower_bound, 0.0);
    upper_bound = std::min(upper_bound, 1.0);
  }
  if (lower_bound > upper_bound) {
    std::ostringstream msg;
    msg << "lower bound " << lower_bound << " exceeds upper bound " << upper_bound;
    throw ValidationError(msg.str());
  }
  if (variable_map_.next_bit() >= BipurMap::kMaxEntities) {
    throw CapacityError("no room for more variables");
  }
  backend_->append_column({lower_bound, upper_bound, domain, std::string(name)});
  return VariableIndex{variable_map_.add_entity()};
}

void Model::delete_variable(VariableIndex variable) {
  const InternalIndex column = variable_map_.calculate_index(variable.bit_location);
  if (!column.valid()) return;
  const DenseIndex dense = column.value();
  backend_->delete_columns(std::span<const DenseIndex>(&dense, 1));
  variable_map_.delete_entity(variable.bit_location);
}

void Model::delete_variables(std::span<const VariableIndex> variables) {
  std::vector<DenseIndex> columns;
  columns.reserve(variables.size());
  for (VariableIndex variable : variables) {
    const InternalIndex column = variable_map_.calculate_index(variable.bit_location);
    if (column.valid()) columns.push_back(column.value());
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  backend_->delete_columns(columns);
  for (VariableIndex variable : variables) variable_map_.delete_entity(variable.bit_location);
}

DenseIndex Model::column_of(VariableIndex variable) {
  const InternalIndex column = variable_map_.calculate_index(variable.bit_location);
  if (!column.valid()) {
    std::ostringstream msg;
    msg << variable << " refers to a deleted variable";
    throw StaleHandleError(msg.str());
  }
  return column.value();
}

DenseLinearPart Model::resolve_linear(const ScalarAffineFunction& function) {
  DenseLinearPart part;
  part.columns.reserve(function.terms().size());
  part.coefficients.reserve(function.terms().size());
  for (const AffineTerm& term : function.terms()) {
    part.columns.push_back(column_of(term.variable));
    part.coefficients.push_back(term.coefficient);
  }
  return part;
}

std::vector<DenseQuadraticEntry> Model::resolve_quadratic(const ScalarQuadraticFunction& function) {
  std::vector<DenseQuadraticEntry> entries;
  entries.reserve(function.quadratic_terms().size());
  for (const QuadraticTerm& term : function.quadratic_terms()) {
    entries.push_back({column_of(term.variable_1), column_of(term.variable_2), term.coefficient});
  }
  return entries;
}

ConstraintIndex Model::allocate(ConstraintType type) {
  return ConstraintIndex{type, map_for(type).add_entity()};
}

const BridgeProcedure* Model::active_bridge(ConstraintKind kind) const {
  if (bridge_running_[static_cast<std::size_t>(kind)]) return nullptr;
  return bridges_.find(kind);
}

ConstraintIndex Model::run_bridge(ConstraintKind kind, const BridgeProcedure& bridge,
                                  const ConstraintPayload& payload) {
  // Copy first: the procedure may deregister itself.
  const BridgeProcedure procedure = bridge;
  BridgeGuard guard(bridge_running_[static_cast<std::size_t>(kind)]);
  return procedure(*this, payload);
}

ConstraintIndex Model::add_linear_constraint(ScalarAffineFunction function, ConstraintSense sense,
                                             double rhs, std::string_view name) {
  check_finite_rhs(rhs);
  if (!backend_->supports(ConstraintType::Linear)) {
    if (const auto* bridge = active_bridge(ConstraintKind::Linear)) {
      return run_bridge(ConstraintKind::Linear, *bridge,
                        LinearPayload{std::move(function), sense, rhs, std::string(name)});
    }
    throw_unsupported(*backend_, "Linear");
  }
  function.canonicalize();
  DenseLinearRow row{resolve_linear(function), sense, rhs - function.constant(), std::string(name)};
  check_room(map_for(ConstraintType::Linear), ConstraintType::Linear);
  backend_->append_linear_row(std::move(row));
  return allocate(ConstraintType::Linear);
}

ConstraintIndex Model::add_quadratic_constraint(ScalarQuadraticFunction function,
                                                ConstraintSense sense, double rhs,
                                                std::string_view name) {
  check_finite_rhs(rhs);
  if (!backend_->supports(ConstraintType::Quadratic)) {
    if (const auto* bridge = active_bridge(ConstraintKind::Quadratic)) {
      return run_bridge(ConstraintKind::Quadratic, *bridge,
                        QuadraticPayload{std::move(function), sense, rhs, std::string(name)});
    }
    throw_unsupported(*backend_, "Quadratic");
  }
  function.canonicalize();
  DenseQuadraticRow row{resolve_linear(function.affine_part()), resolve_quadratic(function), sense,
                        rhs - function.affine_part().constant(), std::string(name)};
  check_room(map_for(ConstraintType::Quadratic), ConstraintType::Quadratic);
  backend_->append_quadratic_row(std::move(row));
  return allocate(ConstraintType::Quadratic);
}

ConstraintIndex Model::add_sos_constraint(std::span<const VariableIndex> variables,
                                          std::span<const double> weights, SosType type,
                                          std::string_view name) {
  if (variables.empty()) throw ValidationError("SOS constraint needs at least one variable");
  if (variables.size() != weights.size()) {
    throw ValidationError("SOS constraint has " + std::to_string(variables.size()) +
                          " variables but " + std::to_string(weights.size()) + " weights");
  }
  std::vector<double> sorted_weights(weights.begin(), weights.end());
  std::sort(sorted_weights.begin(), sorted_weights.end());
  for (std::size_t i = 0; i < sorted_weights.size(); ++i) {
    if (!std::isfinite(sorted_weights[i])) throw ValidationError("SOS weights must be finite");
    if (i > 0 && sorted_weights[i - 1] == sorted_weights[i]) {
      throw ValidationError("SOS weights must be distinct");
    }
  }
  if (!backend_->supports(ConstraintType::SOS)) {
    if (const auto* bridge = active_bridge(ConstraintKind::SOS)) {
      return run_bridge(ConstraintKind::SOS, *bridge,
                        SosPayload{{variables.begin(), variables.end()},
                                   {weights.begin(), weights.end()},
                                   type,
                                   std::string(name)});
    }
    throw_unsupported(*backend_, "SOS");
  }
  DenseSosRow row{type, {}, {weights.begin(), weights.end()}, std::string(name)};
  row.columns.reserve(variables.size());
  for (VariableIndex variable : variables) row.columns.push_back(column_of(variable));
  check_room(map_for(ConstraintType::SOS), ConstraintType::SOS);
  backend_->append_sos_row(std::move(row));
  return allocate(ConstraintType::SOS);
}

ConstraintIndex Model::add_second_order_cone_constraint(
    std::span<const VariableIndex> cone_variables, std::string_view name) {
  if (const auto* bridge = active_bridge(ConstraintKind::SecondOrderCone)) {
    return run_bridge(
        ConstraintKind::SecondOrderCone, *bridge,
        SecondOrderConePayload{{cone_variables.begin(), cone_variables.end()}, std::string(name)});
  }
  throw_unsupported(*backend_, "SecondOrderCone");
}

void Model::delete_constraint(ConstraintIndex constraint) {
  BipurMap& map = map_for(constraint.type);
  const InternalIndex row = map.calculate_index(constraint.bit_location);
  if (!row.valid()) return;
  const DenseIndex dense = row.value();
  backend_->delete_rows(constraint.type, std::span<const DenseIndex>(&dense, 1));
  map.delete_entity(constraint.bit_location);
}

void Model::set_objective(ScalarQuadraticFunction function, ObjectiveSense sense) {
  function.canonicalize();
  DenseObjective objective{resolve_linear(function.affine_part()), resolve_quadratic(function),
                           function.affine_part().constant(), sense};
  backend_->set_objective(std::move(objective));
}

void Model::set_objective(ScalarAffineFunction function, ObjectiveSense sense) {
  set_objective(ScalarQuadraticFunction(std::move(function)), sense);
}

InternalIndex Model::resolve_variable(VariableIndex variable) {
  return variable_map_.calculate_index(variable.bit_location);
}

InternalIndex Model::resolve_constraint(ConstraintIndex constraint) {
  return map_for(constraint.type).calculate_index(constraint.bit_location);
}

bool Model::is_live(VariableIndex variable) const {
  return variable_map_.is_live(variable.bit_location);
}

bool Model::is_live(ConstraintIndex constraint) const {
  return constraint_map(constraint.type).is_live(constraint.bit_location);
}

ModelCounts Model::counts() const {
  return {variable_map_.live_count(),
          constraint_maps_[static_cast<std::size_t>(ConstraintType::Linear)].live_count(),
          constraint_maps_[static_cast<std::size_t>(ConstraintType::Quadratic)].live_count(),
          constraint_maps_[static_cast<std::size_t>(ConstraintType::SOS)].live_count()};
}

}  // namespace modelcore
