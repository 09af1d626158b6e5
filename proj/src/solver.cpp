#include "ratgf/solver.hpp"

#include <algorithm>

namespace ratgf {

namespace {

std::vector<std::int64_t> strides_for(const MultiIndex& bound) {
  const std::size_t n = bound.dim();
  std::vector<std::int64_t> stride(n);
  std::int64_t s = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = s;
    s *= bound[i] + 1;
  }
  return stride;
}

std::int64_t flat_offset(const MultiIndex& x, const std::vector<std::int64_t>& stride) {
  std::int64_t off = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) off += x[i] * stride[i];
  return off;
}

}  // namespace

SolutionTable::SolutionTable(MultiIndex bound, std::vector<Rational> values)
    : bound_(std::move(bound)), values_(std::move(values)) {}

bool SolutionTable::contains(const MultiIndex& x) const {
  return x.dim() == bound_.dim() && x.is_nonnegative() && leq(x, bound_);
}

std::size_t SolutionTable::offset(const MultiIndex& x) const {
  return static_cast<std::size_t>(flat_offset(x, strides_for(bound_)));
}

const Rational& SolutionTable::at(const MultiIndex& x) const {
  if (!contains(x)) throw Error(ErrorKind::OutOfWindow, "point " + x.str() + " outside box 0.." + bound_.str());
  return values_[offset(x)];
}

SolutionTable solve_box(const DifferenceEquation& eq, const CauchyData& data, const MultiIndex& bound) {
  require_valid(validate_equation(eq));
  const MultiIndex& m = eq.corner();
  if (bound.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "box " + bound.str() + " for an equation of dimension " +
                                                  std::to_string(m.dim()));
  }
  require_valid(validate_data(data, m));
  if (!leq(m, bound)) throw Error(ErrorKind::BoxTooSmall, "box " + bound.str() + " does not contain m=" + m.str());

  const std::size_t n = m.dim();
  const auto stride = strides_for(bound);
  std::int64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) cells *= bound[i] + 1;
  std::vector<Rational> f(static_cast<std::size_t>(cells));

  // Data on X_0: explicit entries win, then rays (all consistent after validation).
  for (const RaySpec& ray : data.rays) {
    const std::size_t k = ray.direction;
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (ray.anchor[j] > bound[j]) inside = false;
    }
    if (!inside) continue;
    const auto vals = ray.values(static_cast<std::size_t>(bound[k] - ray.anchor[k] + 1));
    MultiIndex x = ray.anchor;
    for (const Rational& v : vals) {
      f[static_cast<std::size_t>(flat_offset(x, stride))] = v;
      ++x[k];
    }
  }
  for (const auto& [x, v] : data.entries) {
    if (leq(x, bound)) f[static_cast<std::size_t>(flat_offset(x, stride))] = v;
  }

  struct Term {
    std::int64_t offset;  // flat offset of alpha - m
    Rational coeff;
  };
  std::vector<Term> terms;
  const Rational inv_lead = eq.leading().inverse();
  for (const auto& [alpha, c] : eq.coeffs()) {
    if (alpha == m) continue;
    terms.push_back({flat_offset(alpha - m, stride), -(c * inv_lead)});
  }

  for (const MultiIndex& x : box_points_graded(MultiIndex(n), bound)) {
    if (in_x0(x, m)) continue;
    const std::int64_t base = flat_offset(x, stride);
    Rational acc;
    for (const Term& t : terms) {
      const Rational& v = f[static_cast<std::size_t>(base + t.offset)];
      if (!v.is_zero()) acc += t.coeff * v;
    }
    f[static_cast<std::size_t>(base)] = std::move(acc);
  }
  return SolutionTable(bound, std::move(f));
}

SolutionTable green_box(const DifferenceEquation& eq, const MultiIndex& tau0, const MultiIndex& bound) {
  require_valid(validate_equation(eq));
  return solve_box(eq, delta_data(tau0, eq.corner()), bound);
}

Rational max_residual(const DifferenceEquation& eq, const SolutionTable& table) {
  const MultiIndex& m = eq.corner();
  Rational worst;
  const MultiIndex hi = table.bound() - m;
  for (const MultiIndex& x : box_points(MultiIndex(m.dim()), hi)) {
    Rational acc;
    for (const auto& [alpha, c] : eq.coeffs()) acc += c * table.at(x + alpha);
    worst = std::max(worst, acc.abs());
  }
  return worst;
}

}  // namespace ratgf
