#include "ratgf/rational_fn.hpp"

#include "ratgf/error.hpp"

namespace ratgf {

namespace {

void require_same_dim(const RationalFn& f, const RationalFn& g, const char* what) {
  if (f.dim() != g.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimension " + std::to_string(f.dim()) +
                                                  " vs " + std::to_string(g.dim()));
  }
}

// Content-1 integer normalization factor for p: multiplying p by it yields
// integer coefficients with gcd 1 and a positive leading coefficient.
Rational normalizing_factor(const LaurentPoly& p) {
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_class d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  if (p.leading_coeff().sign() < 0) factor = -factor;
  return factor;
}

struct MonomialSplit {
  MultiIndex shift;
  LaurentPoly rest;
};

MonomialSplit split_monomial(const LaurentPoly& p) {
  MultiIndex mu = p.min_exponent();
  return {mu, p.shifted(-mu)};
}

}  // namespace

RationalFn::RationalFn(std::size_t dim) : num_(dim), den_(LaurentPoly::constant(dim, Rational(1))) {}

RationalFn::RationalFn(const LaurentPoly& numerator, const LaurentPoly& denominator)
    : num_(numerator), den_(denominator) {
  if (num_.dim() != den_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "numerator and denominator dimensions differ");
  }
  canonicalize();
}

RationalFn::RationalFn(const LaurentPoly& polynomial)
    : RationalFn(polynomial, LaurentPoly::constant(polynomial.dim(), Rational(1))) {}

void RationalFn::canonicalize() {
  const std::size_t n = den_.dim();
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(n, Rational(1));
    return;
  }
  const MultiIndex shift = componentwise_min(num_.min_exponent(), den_.min_exponent());
  num_ = num_.shifted(-shift);
  den_ = den_.shifted(-shift);

  if (!den_.is_constant()) {
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = LaurentPoly::constant(n, Rational(1));
    } else if (!num_.is_constant()) {
      if (auto r = exact_divide(den_, num_)) {
        den_ = std::move(*r);
        num_ = LaurentPoly::constant(n, Rational(1));
      }
    }
  }

  const Rational factor = normalizing_factor(den_);
  num_ *= factor;
  den_ *= factor;
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  require_same_dim(*this, rhs, "rational function addition");
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  auto [mu_b, beta] = split_monomial(den_);
  auto [mu_d, delta] = split_monomial(rhs.den_);
  const MultiIndex lcm = componentwise_max(mu_b, mu_d);
  LaurentPoly a = num_.shifted(lcm - mu_b);
  LaurentPoly c = rhs.num_.shifted(lcm - mu_d);
  // Pick a common denominator without a gcd: reuse one side when it is a multiple of the other.
  LaurentPoly common(dim());
  LaurentPoly sum(dim());
  if (auto q = exact_divide(delta, beta)) {
    common = delta;
    sum = a * *q + c;
  } else if (auto r = exact_divide(beta, delta)) {
    common = beta;
    sum = a + c * *r;
  } else {
    common = beta * delta;
    sum = a * delta + c * beta;
  }
  return *this = RationalFn(sum, common.shifted(lcm));
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) { return *this += -rhs; }

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  require_same_dim(*this, rhs, "rational function multiplication");
  LaurentPoly a = num_;
  LaurentPoly b = den_;
  LaurentPoly c = rhs.num_;
  LaurentPoly d = rhs.den_;
  if (!d.is_constant()) {
    if (auto q = exact_divide(a, d)) {
      a = std::move(*q);
      d = LaurentPoly::constant(dim(), Rational(1));
    }
  }
  if (!b.is_constant()) {
    if (auto q = exact_divide(c, b)) {
      c = std::move(*q);
      b = LaurentPoly::constant(dim(), Rational(1));
    }
  }
  return *this = RationalFn(a * c, b * d);
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  require_same_dim(*this, rhs, "rational function division");
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
  return *this *= RationalFn(rhs.den_, rhs.num_);
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFn::str(const std::vector<std::string>& names) const {
  if (is_polynomial()) return (num_ * den_.leading_coeff().inverse()).str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

RationalFn ratfn_arith(FnOp op, const RationalFn& f, const RationalFn& g) {
  switch (op) {
    case FnOp::Add: return f + g;
    case FnOp::Mul: return f * g;
    case FnOp::Div: return f / g;
  }
  return RationalFn(f.dim());
}

bool equivalent(const RationalFn& f, const RationalFn& g) {
  require_same_dim(f, g, "rational function comparison");
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

}  // namespace ratgf
