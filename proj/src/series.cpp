#include "ratgf/series.hpp"

#include <algorithm>
#include <vector>

#include "ratgf/error.hpp"

namespace ratgf {

CoeffTable::CoeffTable(MultiIndex lo, MultiIndex hi, std::int64_t order, const TermMap& terms)
    : lo_(std::move(lo)), hi_(std::move(hi)), order_(order) {
  require_same_dim(lo_, hi_, "coefficient window");
  for (const auto& [e, c] : terms) {
    if (!c.is_zero() && in_window(e)) terms_.emplace(e, c);
  }
}

bool CoeffTable::in_window(const MultiIndex& exponent) const {
  return exponent.dim() == lo_.dim() && leq(lo_, exponent) && leq(exponent, hi_);
}

Rational CoeffTable::at_exponent(const MultiIndex& exponent) const {
  if (!in_window(exponent)) {
    throw Error(ErrorKind::OutOfWindow,
                "exponent " + exponent.str() + " outside window " + lo_.str() + ".." + hi_.str());
  }
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

Rational CoeffTable::value_at(const MultiIndex& x) const { return at_exponent(solution_exponent(x)); }

MultiIndex solution_exponent(const MultiIndex& x) { return -(x + MultiIndex::ones(x.dim())); }

CoeffTable expand_at_infinity(const RationalFn& f, std::int64_t order) {
  if (order < 0) throw Error(ErrorKind::OutOfWindow, "negative expansion order");
  const std::size_t n = f.dim();
  const LaurentPoly& num = f.numerator();
  const LaurentPoly& den = f.denominator();
  const MultiIndex corner = den.max_exponent();
  const Rational lead = den.coeff(corner);
  if (lead.is_zero()) {
    throw Error(ErrorKind::NotExpandableAtInfinity,
                "denominator " + den.str() + " has no term at its maximal exponent " + corner.str());
  }

  // Substituting z = 1/w and multiplying through by w^corner turns the
  // denominator into a power series with constant term `lead`.
  const MultiIndex ones = MultiIndex::ones(n);
  const MultiIndex hi_w = ones.scaled(order + 1);
  MultiIndex lo_w = ones;
  if (!num.is_zero()) lo_w = componentwise_min(lo_w, corner - num.max_exponent());

  std::vector<std::int64_t> extent(n), stride(n);
  std::int64_t cells = 1;
  for (std::size_t i = n; i-- > 0;) {
    extent[i] = hi_w[i] - lo_w[i] + 1;
    stride[i] = cells;
    cells *= extent[i];
  }
  auto offset_of = [&](const MultiIndex& k) {
    std::int64_t off = 0;
    for (std::size_t i = 0; i < n; ++i) off += (k[i] - lo_w[i]) * stride[i];
    return off;
  };

  std::vector<Rational> g(static_cast<std::size_t>(cells));
  for (const auto& [e, c] : num.terms()) {
    const MultiIndex k = corner - e;
    if (leq(k, hi_w)) g[static_cast<std::size_t>(offset_of(k))] = c;
  }

  struct Step {
    MultiIndex shift;
    std::int64_t offset;
    Rational coeff;
  };
  std::vector<Step> steps;
  for (const auto& [e, c] : den.terms()) {
    if (e == corner) continue;
    MultiIndex j = corner - e;
    std::int64_t off = 0;
    for (std::size_t i = 0; i < n; ++i) off += j[i] * stride[i];
    steps.push_back({std::move(j), off, c});
  }
  const Rational inv_lead = lead.inverse();

  // Row-major order visits every k - j (j >= 0, j != 0) before k.
  std::int64_t flat = 0;
  for (const MultiIndex& k : box_points(lo_w, hi_w)) {
    Rational acc = g[static_cast<std::size_t>(flat)];
    for (const Step& s : steps) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (k[i] - s.shift[i] < lo_w[i]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      const Rational& prev = g[static_cast<std::size_t>(flat - s.offset)];
      if (!prev.is_zero()) acc -= s.coeff * prev;
    }
    if (!acc.is_zero()) acc *= inv_lead;
    g[static_cast<std::size_t>(flat)] = std::move(acc);
    ++flat;
  }

  CoeffTable::TermMap terms;
  flat = 0;
  for (const MultiIndex& k : box_points(lo_w, hi_w)) {
    const Rational& c = g[static_cast<std::size_t>(flat++)];
    if (!c.is_zero()) terms.emplace(-k, c);
  }
  return CoeffTable(-hi_w, -lo_w, order, terms);
}

Rational coeff_at(const RationalFn& f, const MultiIndex& x) {
  if (!x.is_nonnegative()) throw Error(ErrorKind::OutOfWindow, "coefficient index " + x.str() + " is negative");
  std::int64_t order = 0;
  for (auto v : x) order = std::max(order, v);
  return expand_at_infinity(f, order).value_at(x);
}

CoeffTable truncate(const LaurentPoly& p, const MultiIndex& lo, const MultiIndex& hi, std::int64_t order) {
  CoeffTable::TermMap terms(p.terms().begin(), p.terms().end());
  return CoeffTable(lo, hi, order, terms);
}

}  // namespace ratgf
