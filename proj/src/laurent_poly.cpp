#include "ratgf/laurent_poly.hpp"

#include <sstream>

#include "ratgf/error.hpp"

namespace ratgf {

namespace {

void require_same_dim(const LaurentPoly& a, const LaurentPoly& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimension " + std::to_string(a.dim()) +
                                                  " vs " + std::to_string(b.dim()));
  }
}

// Polynomial division for ordinary polynomials whose supports have min exponent 0.
std::optional<LaurentPoly> divide_ordinary(const LaurentPoly& a, const LaurentPoly& b, std::size_t step_limit) {
  const std::size_t n = a.dim();
  const MultiIndex amax = a.max_exponent();
  const MultiIndex bmax = b.max_exponent();
  if (!leq(bmax, amax)) return std::nullopt;
  if (b.is_monomial()) {
    if (!b.leading_exponent().is_zero()) return std::nullopt;
    return a * b.leading_coeff().inverse();
  }
  const MultiIndex& lb = b.leading_exponent();
  const Rational lb_inv = b.leading_coeff().inverse();
  LaurentPoly quotient(n);
  LaurentPoly rest = a;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (++steps > step_limit) return std::nullopt;
    MultiIndex e = rest.leading_exponent() - lb;
    if (!e.is_nonnegative()) return std::nullopt;
    const Rational c = rest.leading_coeff() * lb_inv;
    quotient.add_term(e, c);
    for (const auto& [be, bc] : b.terms()) rest.add_term(be + e, -(bc * c));
  }
  return quotient;
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t dim, TermMap terms) : dim_(dim) {
  for (auto& [e, c] : terms) {
    if (e.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "term exponent " + e.str() + " in dimension " + std::to_string(dim));
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::constant(std::size_t dim, const Rational& c) {
  LaurentPoly p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const MultiIndex& exponent, const Rational& c) {
  LaurentPoly p(exponent.dim());
  p.add_term(exponent, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (!e.is_nonnegative()) return false;
  }
  return true;
}

Rational LaurentPoly::coeff(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term(const MultiIndex& exponent, const Rational& c) {
  if (exponent.dim() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "term exponent " + exponent.str() + " in dimension " + std::to_string(dim_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const MultiIndex& LaurentPoly::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::DivisionByZero, "leading term of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorKind::DivisionByZero, "leading term of the zero polynomial");
  return terms_.begin()->second;
}

MultiIndex LaurentPoly::min_exponent() const {
  MultiIndex r = leading_exponent();
  for (const auto& [e, c] : terms_) r = componentwise_min(r, e);
  return r;
}

MultiIndex LaurentPoly::max_exponent() const {
  MultiIndex r = leading_exponent();
  for (const auto& [e, c] : terms_) r = componentwise_max(r, e);
  return r;
}

LaurentPoly LaurentPoly::shifted(const MultiIndex& shift) const {
  if (shift.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "monomial shift " + shift.str());
  LaurentPoly r(dim_);
  // A shift is order-preserving under graded lex, so hinting at end() keeps insertion linear.
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_dim(*this, rhs, "polynomial addition");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_dim(*this, rhs, "polynomial subtraction");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a, b, "polynomial multiplication");
  LaurentPoly r(a.dim());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  const auto vars = names.size() == dim_ ? names : variable_names(dim_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << mono;
    } else {
      os << mag.str() << '*' << mono;
    }
  }
  return os.str();
}

LaurentPoly poly_arith(PolyOp op, const LaurentPoly& a, const LaurentPoly& b) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return LaurentPoly(a.dim());
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& dividend, const LaurentPoly& divisor,
                                        std::size_t step_limit) {
  require_same_dim(dividend, divisor, "polynomial division");
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact division by the zero polynomial");
  if (dividend.is_zero()) return LaurentPoly(dividend.dim());
  const MultiIndex ma = dividend.min_exponent();
  const MultiIndex mb = divisor.min_exponent();
  auto q = divide_ordinary(dividend.shifted(-ma), divisor.shifted(-mb), step_limit);
  if (!q) return std::nullopt;
  return q->shifted(ma - mb);
}

std::vector<std::string> variable_names(std::size_t dim, bool short_names) {
  if (short_names && dim == 2) return {"z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("z" + std::to_string(i + 1));
  return out;
}

}  // namespace ratgf
