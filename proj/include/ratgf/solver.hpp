#pragma once

#include <cstddef>
#include <vector>

#include "ratgf/problem.hpp"

namespace ratgf {

/// Dense table of the solution on the box 0 <= x <= bound.
class SolutionTable {
 public:
  SolutionTable() = default;
  SolutionTable(MultiIndex bound, std::vector<Rational> values);

  std::size_t dim() const { return bound_.dim(); }
  const MultiIndex& bound() const { return bound_; }
  bool contains(const MultiIndex& x) const;
  /// Throws Error(OutOfWindow) outside the box.
  const Rational& at(const MultiIndex& x) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const SolutionTable&, const SolutionTable&) = default;

 private:
  std::size_t offset(const MultiIndex& x) const;

  MultiIndex bound_;
  std::vector<Rational> values_;
};

/// Solves the Cauchy problem on the box by forward substitution
/// f(x+m) = -(1/c_m) sum_{a != m} c_a f(x+a), sweeping in graded-lex order.
SolutionTable solve_box(const DifferenceEquation& eq, const CauchyData& data, const MultiIndex& bound);

/// Discrete Green's function: solve_box with delta data at tau0.
SolutionTable green_box(const DifferenceEquation& eq, const MultiIndex& tau0, const MultiIndex& bound);

/// Largest |sum_a c_a f(x+a)| over all x with x + m inside the box.
Rational max_residual(const DifferenceEquation& eq, const SolutionTable& table);

}  // namespace ratgf
