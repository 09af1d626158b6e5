#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "ratgf/laurent_poly.hpp"
#include "ratgf/rational_fn.hpp"

namespace ratgf {

/// Truncated Laurent expansion at infinity.
///
/// Coefficients are keyed by z-exponent e and stored only when nonzero. The
/// window is the box lo <= e <= hi; a query inside it returns the coefficient
/// (possibly 0), a query outside throws Error(OutOfWindow). The solution index
/// x of a coefficient is e = -(x + I).
class CoeffTable {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexGreater>;

  CoeffTable() = default;
  /// Terms outside the window are dropped, zero terms are ignored.
  CoeffTable(MultiIndex lo, MultiIndex hi, std::int64_t order, const TermMap& terms);

  std::size_t dim() const { return lo_.dim(); }
  std::int64_t order() const { return order_; }
  const MultiIndex& exponent_lo() const { return lo_; }
  const MultiIndex& exponent_hi() const { return hi_; }
  const TermMap& terms() const { return terms_; }

  bool in_window(const MultiIndex& exponent) const;
  Rational at_exponent(const MultiIndex& exponent) const;
  /// Coefficient f(x) of z^-(x+I).
  Rational value_at(const MultiIndex& x) const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  MultiIndex lo_;
  MultiIndex hi_;
  std::int64_t order_ = 0;
  TermMap terms_;
};

/// Exponent of z corresponding to solution index x, i.e. -(x + I).
MultiIndex solution_exponent(const MultiIndex& x);

/// Laurent expansion of f in negative powers, truncated to solution indices
/// x <= order*I (z-exponents >= -(order+1)*I). Throws
/// Error(NotExpandableAtInfinity) when the denominator has no term at its
/// componentwise-maximal exponent.
CoeffTable expand_at_infinity(const RationalFn& f, std::int64_t order);

/// Coefficient f(x) of z^-(x+I); x >= 0.
Rational coeff_at(const RationalFn& f, const MultiIndex& x);

/// Restrict a Laurent polynomial to a window.
CoeffTable truncate(const LaurentPoly& p, const MultiIndex& lo, const MultiIndex& hi, std::int64_t order);

}  // namespace ratgf
