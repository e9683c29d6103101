#pragma once

#include <array>
#include <memory>
#include <span>
#include <string_view>

#include "modelcore/backend.hpp"
#include "modelcore/bipur_map.hpp"
#include "modelcore/bridge.hpp"
#include "modelcore/expressions.hpp"
#include "modelcore/handles.hpp"

namespace modelcore {

struct ModelCounts {
  std::uint64_t variables = 0;
  std::uint64_t linear_constraints = 0;
  std::uint64_t quadratic_constraints = 0;
  std::uint64_t sos_constraints = 0;

  friend bool operator==(const ModelCounts&, const ModelCounts&) = default;
};

// Solver-agnostic model. Holds one BipurMap for variables and one per
// constraint type; every operation is translated to dense indices and passed
// to the backend immediately. Expressions and bounds live only in the
// backend.
//
// Deleting resolves the dense index first, tells the backend, then clears
// the bit. Deleting an already-deleted entity is a no-op. Handles of deleted
// variables inside expressions raise StaleHandleError.
//
// Single-threaded: resolution updates BipurMap caches.
class Model {
 public:
  explicit Model(std::unique_ptr<Backend> backend);

  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  Model(Model&&) noexcept = default;
  Model& operator=(Model&&) noexcept = default;

  VariableIndex add_variable(double lower_bound = -kInfinity, double upper_bound = kInfinity,
                             VariableDomain domain = VariableDomain::Continuous,
                             std::string_view name = {});
  void delete_variable(VariableIndex variable);
  // One backend call for the whole set.
  void delete_variables(std::span<const VariableIndex> variables);

  ConstraintIndex add_linear_constraint(ScalarAffineFunction function, ConstraintSense sense,
                                        double rhs, std::string_view name = {});
  ConstraintIndex add_quadratic_constraint(ScalarQuadraticFunction function, ConstraintSense sense,
                                           double rhs, std::string_view name = {});
  ConstraintIndex add_sos_constraint(std::span<const VariableIndex> variables,
                                     std::span<const double> weights, SosType type,
                                     std::string_view name = {});
  // Only available through a registered bridge.
  ConstraintIndex add_second_order_cone_constraint(std::span<const VariableIndex> cone_variables,
                                                   std::string_view name = {});
  void delete_constraint(ConstraintIndex constraint);

  void set_objective(ScalarQuadraticFunction function, ObjectiveSense sense);
  void set_objective(ScalarAffineFunction function, ObjectiveSense sense);

  InternalIndex resolve_variable(VariableIndex variable);
  InternalIndex resolve_constraint(ConstraintIndex constraint);
  bool is_live(VariableIndex variable) const;
  bool is_live(ConstraintIndex constraint) const;
  ModelCounts counts() const;

  void set_time_limit(double seconds) { backend_->set_time_limit(seconds); }
  void optimize() { backend_->optimize(); }

  void register_bridge(ConstraintKind kind, BridgeProcedure procedure) {
    bridges_.register_bridge(kind, std::move(procedure));
  }
  bool deregister_bridge(ConstraintKind kind) { return bridges_.deregister_bridge(kind); }
  const BridgeRegistry& bridges() const { return bridges_; }

  Backend& backend() { return *backend_; }
  const Backend& backend() const { return *backend_; }
  const BipurMap& variable_map() const { return variable_map_; }
  const BipurMap& constraint_map(ConstraintType type) const;

 private:
  BipurMap& map_for(ConstraintType type);
  DenseIndex column_of(VariableIndex variable);
  DenseLinearPart resolve_linear(const ScalarAffineFunction& function);
  std::vector<DenseQuadraticEntry> resolve_quadratic(const ScalarQuadraticFunction& function);
  ConstraintIndex allocate(ConstraintType type);
  void check_room(const BipurMap& map, ConstraintType type) const;
  // Runs the bridge for `kind` if one is registered and not already running.
  const BridgeProcedure* active_bridge(ConstraintKind kind) const;
  ConstraintIndex run_bridge(ConstraintKind kind, const BridgeProcedure& bridge,
                             const ConstraintPayload& payload);

  std::unique_ptr<Backend> backend_;
  BipurMap variable_map_;
  std::array<BipurMap, kNumMappedConstraintTypes> constraint_maps_;
  BridgeRegistry bridges_;
  std::array<bool, kNumConstraintKinds> bridge_running_{};
};

}  // namespace modelcore
