#pragma once

#include <unordered_map>
#include <vector>

#include "modelcore/handles.hpp"

namespace modelcore {

struct AffineTerm {
  VariableIndex variable;
  double coefficient = 0.0;

  friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
};

struct QuadraticTerm {
  VariableIndex variable_1;
  VariableIndex variable_2;
  double coefficient = 0.0;

  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

using Assignment = std::unordered_map<VariableIndex, double>;

// constant + sum(coefficient * variable). Terms are appended as given;
// canonicalize() sorts by handle, merges duplicates and drops zeros.
class ScalarAffineFunction {
 public:
  ScalarAffineFunction() = default;
  explicit ScalarAffineFunction(double constant) : constant_(constant) {}

  // Throws ValidationError on a non-finite coefficient.
  void add_term(VariableIndex variable, double coefficient);
  void add_constant(double value);
  void reserve(std::size_t n) { terms_.reserve(n); }

  ScalarAffineFunction& canonicalize();
  bool is_canonical() const;

  // Throws ValidationError naming the first unassigned variable.
  double evaluate(const Assignment& assignment) const;

  const std::vector<AffineTerm>& terms() const { return terms_; }
  double constant() const { return constant_; }
  void set_constant(double value) { constant_ = value; }

  friend bool operator==(const ScalarAffineFunction&, const ScalarAffineFunction&) = default;

 private:
  std::vector<AffineTerm> terms_;
  double constant_ = 0.0;
};

// Quadratic terms plus an affine part. A term (a, b, c) contributes c*a*b;
// after canonicalize() every term has a <= b and (a, b) is unique, so the
// coefficient of a*b for a != b is the sum over both orderings.
class ScalarQuadraticFunction {
 public:
  ScalarQuadraticFunction() = default;
  explicit ScalarQuadraticFunction(ScalarAffineFunction affine) : affine_(std::move(affine)) {}

  void add_quadratic_term(VariableIndex variable_1, VariableIndex variable_2, double coefficient);
  void add_affine_term(VariableIndex variable, double coefficient) {
    affine_.add_term(variable, coefficient);
  }
  void add_constant(double value) { affine_.add_constant(value); }
  void reserve_quadratic(std::size_t n) { quadratic_terms_.reserve(n); }

  ScalarQuadraticFunction& canonicalize();
  bool is_canonical() const;

  double evaluate(const Assignment& assignment) const;

  const std::vector<QuadraticTerm>& quadratic_terms() const { return quadratic_terms_; }
  const ScalarAffineFunction& affine_part() const { return affine_; }
  ScalarAffineFunction& affine_part() { return affine_; }

  friend bool operator==(const ScalarQuadraticFunction&, const ScalarQuadraticFunction&) = default;

 private:
  std::vector<QuadraticTerm> quadratic_terms_;
  ScalarAffineFunction affine_;
};

}  // namespace modelcore
