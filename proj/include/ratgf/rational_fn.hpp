#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratgf/laurent_poly.hpp"

namespace ratgf {

/// Quotient of two Laurent polynomials in canonical form.
///
/// Canonical form:
///  * numerator and denominator are ordinary polynomials sharing no monomial factor;
///  * when one side divides the other exactly, the quotient replaces it;
///  * the denominator has integer coefficients with content 1 and a positive
///    graded-lex leading coefficient;
///  * zero is 0/1.
/// No general gcd is taken, so two canonical forms of the same function may
/// differ; use equivalent() to compare functions.
class RationalFn {
 public:
  explicit RationalFn(std::size_t dim = 0);
  /// Throws Error(DivisionByZero) when the denominator is zero.
  RationalFn(const LaurentPoly& numerator, const LaurentPoly& denominator);
  explicit RationalFn(const LaurentPoly& polynomial);

  std::size_t dim() const { return num_.dim(); }
  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is 1 (so the function is an ordinary polynomial).
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const;

  /// Structural equality of canonical forms (stronger than equivalent()).
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class FnOp { Add, Mul, Div };

RationalFn ratfn_arith(FnOp op, const RationalFn& f, const RationalFn& g);

/// f == g as functions: num(f)*den(g) == num(g)*den(f).
bool equivalent(const RationalFn& f, const RationalFn& g);

}  // namespace ratgf
