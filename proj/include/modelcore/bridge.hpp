#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modelcore/backend.hpp"
#include "modelcore/expressions.hpp"

namespace modelcore {

class Model;

// What a caller submits. SecondOrderCone is never stored as its own
// ConstraintType; it only exists as input to a bridge.
enum class ConstraintKind : std::uint8_t { Linear, Quadratic, SOS, SecondOrderCone };

inline constexpr std::size_t kNumConstraintKinds = 4;

std::string_view to_string(ConstraintKind kind);

struct LinearPayload {
  ScalarAffineFunction function;
  ConstraintSense sense = ConstraintSense::LessEqual;
  double rhs = 0.0;
  std::string name;
};

struct QuadraticPayload {
  ScalarQuadraticFunction function;
  ConstraintSense sense = ConstraintSense::LessEqual;
  double rhs = 0.0;
  std::string name;
};

struct SosPayload {
  std::vector<VariableIndex> variables;
  std::vector<double> weights;
  SosType type = SosType::SOS1;
  std::string name;
};

// variables[0] >= || variables[1..] ||
struct SecondOrderConePayload {
  std::vector<VariableIndex> variables;
  std::string name;
};

using ConstraintPayload =
    std::variant<LinearPayload, QuadraticPayload, SosPayload, SecondOrderConePayload>;

// A reformulation returns the handle of the constraint it actually created.
using BridgeProcedure = std::function<ConstraintIndex(Model&, const ConstraintPayload&)>;

// At most one bridge per submission kind.
class BridgeRegistry {
 public:
  // Throws ValidationError if `kind` already has a bridge.
  void register_bridge(ConstraintKind kind, BridgeProcedure procedure);
  // Returns false if nothing was registered.
  bool deregister_bridge(ConstraintKind kind);

  bool contains(ConstraintKind kind) const;
  const BridgeProcedure* find(ConstraintKind kind) const;

 private:
  std::array<BridgeProcedure, kNumConstraintKinds> bridges_;
};

// Rewrites x0 >= sqrt(x1^2 + ... + xn^2) as the quadratic row
// x0^2 - x1^2 - ... - xn^2 >= 0 and returns that row's handle. Note the
// quadratic form also admits x0 <= -||x1..n||; no bound on x0 is added.
// Throws ValidationError for fewer than two variables.
ConstraintIndex bridge_soc(Model& model, std::span<const VariableIndex> cone_variables,
                           std::string_view name = {});

// Registers bridge_soc for ConstraintKind::SecondOrderCone.
void register_soc_bridge(Model& model);

}  // namespace modelcore
