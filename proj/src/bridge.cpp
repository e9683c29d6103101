#include "modelcore/bridge.hpp"

#include "modelcore/errors.hpp"
#include "modelcore/model.hpp"

namespace modelcore {

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Linear:
      return "Linear";
    case ConstraintKind::Quadratic:
      return "Quadratic";
    case ConstraintKind::SOS:
      return "SOS";
    case ConstraintKind::SecondOrderCone:
      return "SecondOrderCone";
  }
  return "Unknown";
}

void BridgeRegistry::register_bridge(ConstraintKind kind, BridgeProcedure procedure) {
  if (!procedure) throw ValidationError("bridge procedure is empty");
  auto& slot = bridges_[static_cast<std::size_t>(kind)];
  if (slot) {
    throw ValidationError("a bridge for " + std::string(to_string(kind)) +
                          " constraints is already registered");
  }
  slot = std::move(procedure);
}

bool BridgeRegistry::deregister_bridge(ConstraintKind kind) {
  auto& slot = bridges_[static_cast<std::size_t>(kind)];
  const bool had = static_cast<bool>(slot);
  slot = nullptr;
  return had;
}

bool BridgeRegistry::contains(ConstraintKind kind) const {
  return static_cast<bool>(bridges_[static_cast<std::size_t>(kind)]);
}

const BridgeProcedure* BridgeRegistry::find(ConstraintKind kind) const {
  const auto& slot = bridges_[static_cast<std::size_t>(kind)];
  return slot ? &slot : nullptr;
}

ConstraintIndex bridge_soc(Model& model, std::span<const VariableIndex> cone_variables,
                           std::string_view name) {
  if (cone_variables.size() < 2) {
    throw ValidationError("second-order cone needs at least 2 variables, got " +
                          std::to_string(cone_variables.size()));
  }
  ScalarQuadraticFunction function;
  function.reserve_quadratic(cone_variables.size());
  const VariableIndex head = cone_variables.front();
  function.add_quadratic_term(head, head, 1.0);
  for (VariableIndex variable : cone_variables.subspan(1)) {
    function.add_quadratic_term(variable, variable, -1.0);
  }
  return model.add_quadratic_constraint(std::move(function), ConstraintSense::GreaterEqual, 0.0,
                                        name);
}

void register_soc_bridge(Model& model) {
  model.register_bridge(ConstraintKind::SecondOrderCone,
                        [](Model& target, const ConstraintPayload& payload) {
                          const auto* cone = std::get_if<SecondOrderConePayload>(&payload);
                          if (cone == nullptr) {
                            throw ValidationError("SOC bridge received a non-cone payload");
                          }
                          return bridge_soc(target, cone->variables, cone->name);
                        });
}

}  // namespace modelcore
