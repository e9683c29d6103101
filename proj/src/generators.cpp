#include "modelcore/generators.hpp"

#include <string>
#include <vector>

#include "modelcore/errors.hpp"

namespace modelcore {

namespace {

void require_empty(const Model& model) {
  if (model.counts() != ModelCounts{} || model.backend().num_columns() != 0) {
    throw ValidationError("model generators require an empty model");
  }
}

std::string indexed(std::string_view prefix, std::initializer_list<int> indices) {
  std::string name(prefix);
  for (int index : indices) {
    name += '_';
    name += std::to_string(index);
  }
  return name;
}

}  // namespace

ModelCounts fac_counts(std::int64_t n) {
  const auto grid = static_cast<std::uint64_t>((n + 1) * (n + 1));
  const auto facilities = static_cast<std::uint64_t>(n);
  return {4 * facilities * grid + 2 * facilities + 1, grid * (3 * facilities + 1),
          facilities * grid, 0};
}

ModelCounts lqcp_counts(std::int64_t n) {
  const auto size = static_cast<std::uint64_t>(n);
  return {(size + 1) * (size + 1) + size, size * size + size, 0, 0};
}

void gen_fac(Model& model, const FacConfig& config) {
  if (config.n < 1) throw ValidationError("fac requires n >= 1");
  require_empty(model);
  if (!model.bridges().contains(ConstraintKind::SecondOrderCone)) register_soc_bridge(model);

  const int n = config.n;
  const double big_m = config.big_m;

  // Facility coordinates, facility-major: y[2f], y[2f+1].
  std::vector<VariableIndex> y;
  y.reserve(2 * static_cast<std::size_t>(n));
  for (int f = 1; f <= n; ++f) {
    y.push_back(model.add_variable(-kInfinity, kInfinity, VariableDomain::Continuous,
                                   indexed("y", {f, 0})));
    y.push_back(model.add_variable(-kInfinity, kInfinity, VariableDomain::Continuous,
                                   indexed("y", {f, 1})));
  }
  const VariableIndex d = model.add_variable(-kInfinity, kInfinity, VariableDomain::Continuous, "d");

  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double cx = static_cast<double>(i) / n;
      const double cy = static_cast<double>(j) / n;
      ScalarAffineFunction assignment;
      assignment.reserve(static_cast<std::size_t>(n));
      for (int f = 1; f <= n; ++f) {
        const VariableIndex z =
            model.add_variable(0.0, 1.0, VariableDomain::Binary, indexed("z", {i, j, f}));
        const VariableIndex r =
            model.add_variable(0.0, kInfinity, VariableDomain::Continuous, indexed("r", {i, j, f}));
        const VariableIndex sx = model.add_variable(-kInfinity, kInfinity,
                                                    VariableDomain::Continuous,
                                                    indexed("sx", {i, j, f}));
        const VariableIndex sy = model.add_variable(-kInfinity, kInfinity,
                                                    VariableDomain::Continuous,
                                                    indexed("sy", {i, j, f}));
        const VariableIndex yx = y[2 * static_cast<std::size_t>(f - 1)];
        const VariableIndex yy = y[2 * static_cast<std::size_t>(f - 1) + 1];

        // s = y_f - (i/n, j/n)
        ScalarAffineFunction offset_x;
        offset_x.add_term(sx, 1.0);
        offset_x.add_term(yx, -1.0);
        model.add_linear_constraint(std::move(offset_x), ConstraintSense::Equal, -cx);
        ScalarAffineFunction offset_y;
        offset_y.add_term(sy, 1.0);
        offset_y.add_term(yy, -1.0);
        model.add_linear_constraint(std::move(offset_y), ConstraintSense::Equal, -cy);

        // r <= d + M (1 - z)
        ScalarAffineFunction big_m_row;
        big_m_row.add_term(r, 1.0);
        big_m_row.add_term(d, -1.0);
        big_m_row.add_term(z, big_m);
        model.add_linear_constraint(std::move(big_m_row), ConstraintSense::LessEqual, big_m);

        const VariableIndex cone[] = {r, sx, sy};
        model.add_second_order_cone_constraint(cone);

        assignment.add_term(z, 1.0);
      }
      model.add_linear_constraint(std::move(assignment), ConstraintSense::Equal, 1.0);
    }
  }

  ScalarAffineFunction objective;
  objective.add_term(d, 1.0);
  model.set_objective(std::move(objective), ObjectiveSense::Minimize);
}

void gen_lqcp(Model& model, const LqcpConfig& config) {
  if (config.n < 2) throw ValidationError("lqcp requires n >= 2");
  require_empty(model);

  const int n = config.n;
  const int m = n;
  const double dt = 1.0 / m;
  const double dx = 1.0 / n;
  const auto width = static_cast<std::size_t>(n) + 1;

  std::vector<VariableIndex> y;
  y.reserve((static_cast<std::size_t>(m) + 1) * width);
  for (int t = 0; t <= m; ++t) {
    for (int x = 0; x <= n; ++x) {
      const double bound = t == 0 ? 0.0 : kInfinity;
      y.push_back(model.add_variable(-bound, bound, VariableDomain::Continuous,
                                     indexed("y", {t, x})));
    }
  }
  const auto state = [&](int t, int x) { return y[static_cast<std::size_t>(t) * width + x]; };

  std::vector<VariableIndex> u(static_cast<std::size_t>(m) + 1);
  for (int t = 1; t <= m; ++t) {
    u[t] = model.add_variable(-1.0, 1.0, VariableDomain::Continuous, indexed("u", {t}));
  }

  // (y[t+1,x] - y[t,x]) / dt = (laplacian at t + laplacian at t+1) / (2 dx^2)
  const double inv_dt = 1.0 / dt;
  const double half_inv_dx2 = 1.0 / (2.0 * dx * dx);
  for (int t = 0; t < m; ++t) {
    for (int x = 1; x < n; ++x) {
      ScalarAffineFunction row;
      row.reserve(6);
      row.add_term(state(t + 1, x), inv_dt + 2.0 * half_inv_dx2);
      row.add_term(state(t, x), -inv_dt + 2.0 * half_inv_dx2);
      row.add_term(state(t, x - 1), -half_inv_dx2);
      row.add_term(state(t, x + 1), -half_inv_dx2);
      row.add_term(state(t + 1, x - 1), -half_inv_dx2);
      row.add_term(state(t + 1, x + 1), -half_inv_dx2);
      model.add_linear_constraint(std::move(row), ConstraintSense::Equal, 0.0);
    }
  }

  for (int t = 1; t <= m; ++t) {
    ScalarAffineFunction left;
    left.add_term(state(t, 1), 1.0);
    left.add_term(state(t, 0), -1.0);
    model.add_linear_constraint(std::move(left), ConstraintSense::Equal, 0.0);

    // y[t,n] - y[t,n-1] = dx (u[t] - y[t,n])
    ScalarAffineFunction right;
    right.add_term(state(t, n), 1.0 + dx);
    right.add_term(state(t, n - 1), -1.0);
    right.add_term(u[t], -dx);
    model.add_linear_constraint(std::move(right), ConstraintSense::Equal, 0.0);
  }

  ScalarQuadraticFunction objective;
  objective.reserve_quadratic(width + static_cast<std::size_t>(m));
  const double tracking = 0.25 * dx;
  for (int x = 0; x <= n; ++x) {
    const double weight = (x == 0 || x == n) ? tracking : 2.0 * tracking;
    const double position = x * dx;
    const double target = 0.5 * (1.0 - position * position);
    // weight * (y - target)^2
    objective.add_quadratic_term(state(m, x), state(m, x), weight);
    objective.add_affine_term(state(m, x), -2.0 * weight * target);
    objective.add_constant(weight * target * target);
  }
  const double control = 0.25 * config.alpha * dt;
  for (int t = 1; t <= m; ++t) {
    const double weight = t == m ? control : 2.0 * control;
    objective.add_quadratic_term(u[t], u[t], weight);
  }
  model.set_objective(std::move(objective), ObjectiveSense::Minimize);
}

}  // namespace modelcore
