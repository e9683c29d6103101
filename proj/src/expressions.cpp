#include "modelcore/expressions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "modelcore/errors.hpp"

namespace modelcore {

std::string_view to_string(ConstraintType type) {
  switch (type) {
    case ConstraintType::Linear:
      return "Linear";
    case ConstraintType::Quadratic:
      return "Quadratic";
    case ConstraintType::SOS:
      return "SOS";
    case ConstraintType::General:
      return "General";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, VariableIndex v) {
  return os << "VariableIndex(" << v.bit_location << ")";
}

std::ostream& operator<<(std::ostream& os, ConstraintIndex c) {
  return os << "ConstraintIndex(" << to_string(c.type) << ", " << c.bit_location << ")";
}

namespace {

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "non-finite " << what << ": " << value;
    throw ValidationError(msg.str());
  }
}

double lookup(const Assignment& assignment, VariableIndex v) {
  const auto it = assignment.find(v);
  if (it == assignment.end()) {
    std::ostringstream msg;
    msg << "no value assigned to " << v;
    throw ValidationError(msg.str());
  }
  return it->second;
}

}  // namespace

void ScalarAffineFunction::add_term(VariableIndex variable, double coefficient) {
  check_finite(coefficient, "coefficient");
  terms_.push_back({variable, coefficient});
}

void ScalarAffineFunction::add_constant(double value) {
  check_finite(value, "constant");
  constant_ += value;
}

ScalarAffineFunction& ScalarAffineFunction::canonicalize() {
  if (is_canonical()) return *this;
  std::stable_sort(terms_.begin(), terms_.end(), [](const AffineTerm& a, const AffineTerm& b) {
    return a.variable < b.variable;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    AffineTerm merged = terms_[i];
    for (++i; i < terms_.size() && terms_[i].variable == merged.variable; ++i) {
      merged.coefficient += terms_[i].coefficient;
    }
    if (merged.coefficient != 0.0) terms_[out++] = merged;
  }
  terms_.resize(out);
  return *this;
}

bool ScalarAffineFunction::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0.0) return false;
    if (i > 0 && !(terms_[i - 1].variable < terms_[i].variable)) return false;
  }
  return true;
}

double ScalarAffineFunction::evaluate(const Assignment& assignment) const {
  double value = constant_;
  for (const AffineTerm& term : terms_) value += term.coefficient * lookup(assignment, term.variable);
  return value;
}

void ScalarQuadraticFunction::add_quadratic_term(VariableIndex variable_1, VariableIndex variable_2,
                                                 double coefficient) {
  check_finite(coefficient, "coefficient");
  quadratic_terms_.push_back({variable_1, variable_2, coefficient});
}

namespace {

bool quadratic_less(const QuadraticTerm& a, const QuadraticTerm& b) {
  if (a.variable_1 != b.variable_1) return a.variable_1 < b.variable_1;
  return a.variable_2 < b.variable_2;
}

}  // namespace

ScalarQuadraticFunction& ScalarQuadraticFunction::canonicalize() {
  affine_.canonicalize();
  if (is_canonical()) return *this;
  for (QuadraticTerm& term : quadratic_terms_) {
    if (term.variable_2 < term.variable_1) std::swap(term.variable_1, term.variable_2);
  }
  std::stable_sort(quadratic_terms_.begin(), quadratic_terms_.end(), quadratic_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < quadratic_terms_.size();) {
    QuadraticTerm merged = quadratic_terms_[i];
    for (++i; i < quadratic_terms_.size() && quadratic_terms_[i].variable_1 == merged.variable_1 &&
              quadratic_terms_[i].variable_2 == merged.variable_2;
         ++i) {
      merged.coefficient += quadratic_terms_[i].coefficient;
    }
    if (merged.coefficient != 0.0) quadratic_terms_[out++] = merged;
  }
  quadratic_terms_.resize(out);
  return *this;
}

bool ScalarQuadraticFunction::is_canonical() const {
  if (!affine_.is_canonical()) return false;
  for (std::size_t i = 0; i < quadratic_terms_.size(); ++i) {
    const QuadraticTerm& term = quadratic_terms_[i];
    if (term.coefficient == 0.0 || term.variable_2 < term.variable_1) return false;
    if (i > 0 && !quadratic_less(quadratic_terms_[i - 1], term)) return false;
  }
  return true;
}

double ScalarQuadraticFunction::evaluate(const Assignment& assignment) const {
  double value = affine_.evaluate(assignment);
  for (const QuadraticTerm& term : quadratic_terms_) {
    value += term.coefficient * lookup(assignment, term.variable_1) *
             lookup(assignment, term.variable_2);
  }
  return value;
}

}  // namespace modelcore
