#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "modelcore/generators.hpp"
#include "modelcore/model.hpp"
#include "modelcore/reference_backend.hpp"

namespace modelcore::testing {

inline Model make_lp_model() { return Model(std::make_unique<LpWriterBackend>()); }

inline std::string lp_text(const Model& model) {
  return dynamic_cast<const LpWriterBackend&>(model.backend()).lp_string();
}

// Three nonnegative variables and x + 2y + 3z <= 1.
inline void build_intro_model(Model& model) {
  const VariableIndex x = model.add_variable(0.0, kInfinity, VariableDomain::Continuous, "x");
  const VariableIndex y = model.add_variable(0.0, kInfinity, VariableDomain::Continuous, "y");
  const VariableIndex z = model.add_variable(0.0, kInfinity, VariableDomain::Continuous, "z");
  ScalarAffineFunction f;
  f.add_term(x, 1.0);
  f.add_term(y, 2.0);
  f.add_term(z, 3.0);
  model.add_linear_constraint(std::move(f), ConstraintSense::LessEqual, 1.0);
}

struct GoldenCase {
  const char* file;
  std::string (*render)();
};

inline std::string render_intro() {
  Model model = make_lp_model();
  build_intro_model(model);
  return lp_text(model);
}

inline std::string render_lqcp4() {
  Model model = make_lp_model();
  gen_lqcp(model, {.n = 4});
  return lp_text(model);
}

inline std::string render_fac2() {
  Model model = make_lp_model();
  gen_fac(model, {.n = 2});
  return lp_text(model);
}

inline const GoldenCase kGoldenCases[] = {
    {"intro.lp", render_intro},
    {"lqcp4.lp", render_lqcp4},
    {"fac2.lp", render_fac2},
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace modelcore::testing
