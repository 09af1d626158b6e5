#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratgf/multi_index.hpp"
#include "ratgf/rational.hpp"

namespace ratgf {

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept leading-first under graded lexicographic order and zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class LaurentPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexGreater>;

  explicit LaurentPoly(std::size_t dim = 0) : dim_(dim) {}
  LaurentPoly(std::size_t dim, TermMap terms);

  static LaurentPoly constant(std::size_t dim, const Rational& c);
  static LaurentPoly monomial(const MultiIndex& exponent, const Rational& c = Rational(1));

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// All exponents >= 0.
  bool is_polynomial() const;

  Rational coeff(const MultiIndex& exponent) const;
  void add_term(const MultiIndex& exponent, const Rational& c);

  /// Leading term under graded lexicographic order. Requires a nonzero polynomial.
  const MultiIndex& leading_exponent() const;
  const Rational& leading_coeff() const;

  /// Componentwise min / max over the support. Requires a nonzero polynomial.
  MultiIndex min_exponent() const;
  MultiIndex max_exponent() const;

  /// Multiply by the monomial z^shift.
  LaurentPoly shifted(const MultiIndex& shift) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& k) { return a *= k; }
  friend LaurentPoly operator*(const Rational& k, LaurentPoly a) { return a *= k; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "z1^2*z2 - z1 + 1".
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

LaurentPoly poly_arith(PolyOp op, const LaurentPoly& a, const LaurentPoly& b);

/// Exact division of ordinary polynomials: returns q with q * divisor == dividend,
/// or nullopt when no such polynomial exists (or the search exceeds step_limit).
/// Laurent inputs are handled by first factoring out the monomial parts.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& dividend, const LaurentPoly& divisor,
                                        std::size_t step_limit = 20000);

/// Default variable names: "z1".."zn", or "z","w" when short_names and n == 2.
std::vector<std::string> variable_names(std::size_t dim, bool short_names = false);

}  // namespace ratgf
