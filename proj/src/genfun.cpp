#include "ratgf/genfun.hpp"

#include <algorithm>
#include <sstream>

#include "cone.hpp"
#include "ratgf/solver.hpp"

namespace ratgf {

namespace {

using UniPoly = std::vector<Rational>;  // dense, index = power of t

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

LaurentPoly uni_to_poly(const UniPoly& p) {
  LaurentPoly r(1);
  for (std::size_t i = 0; i < p.size(); ++i) r.add_term(MultiIndex{static_cast<std::int64_t>(i)}, p[i]);
  return r;
}

// Sequence generating function of a ray: A(t) = numerator(t) / reversed(t).
struct RayGf {
  UniPoly numerator;
  UniPoly reversed;
};

RayGf ray_gf(const RaySpec& ray) {
  const std::size_t s = ray.order();
  RayGf g;
  g.reversed.resize(s + 1);
  for (std::size_t j = 0; j <= s; ++j) g.reversed[j] = ray.rec_coeffs[s - j];
  UniPoly prefix(ray.initial.begin(), ray.initial.end());
  UniPoly prod = uni_mul(prefix, g.reversed);
  prod.resize(s);
  g.numerator = std::move(prod);
  return g;
}

// Index of the last nonzero term when the ray's sequence is eventually zero
// (-1 for the zero sequence); nullopt when it has infinitely many nonzero terms.
std::optional<std::int64_t> last_nonzero_index(const RaySpec& ray) {
  const RayGf g = ray_gf(ray);
  const LaurentPoly num = uni_to_poly(g.numerator);
  if (num.is_zero()) return -1;
  auto q = exact_divide(num, uni_to_poly(g.reversed));
  if (!q) return std::nullopt;
  if (q->is_zero()) return -1;
  return q->max_exponent()[0];
}

// sum_{y >= 0} a_{y+skip} z^-(start + y e_k + I) as a rational function.
RationalFn ray_tail_gf(const RaySpec& ray, std::int64_t skip, const MultiIndex& start) {
  const std::size_t n = start.dim();
  const std::size_t k = ray.direction;
  const RayGf g = ray_gf(ray);
  // Tail numerator: A(t) - sum_{y<skip} a_y t^y = (numerator - prefix * reversed) / reversed.
  const auto vals = ray.values(static_cast<std::size_t>(skip));
  UniPoly tail = g.numerator;
  const UniPoly head = uni_mul(UniPoly(vals.begin(), vals.end()), g.reversed);
  if (tail.size() < head.size()) tail.resize(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) tail[i] -= head[i];

  const MultiIndex base = solution_exponent(start);
  LaurentPoly num(n);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i].is_zero()) continue;
    // Terms below t^skip cancel by construction.
    MultiIndex e = base;
    e[k] -= static_cast<std::int64_t>(i) - skip;
    num.add_term(e, tail[i]);
  }
  LaurentPoly den(n);
  for (std::size_t j = 0; j < g.reversed.size(); ++j) {
    MultiIndex e(n);
    e[k] = -static_cast<std::int64_t>(j);
    den.add_term(e, g.reversed[j]);
  }
  return RationalFn(num, den);
}

void add_point(LaurentPoly& acc, const CauchyData& data, const MultiIndex& corner, const MultiIndex& x) {
  const DataValue v = eval_data(data, corner, x);
  if (!v.value.is_zero()) acc.add_term(solution_exponent(x), v.value);
}

void require_problem(const DifferenceEquation& eq, const CauchyData& data) {
  require_valid(validate_equation(eq));
  require_valid(validate_data(data, eq.corner()));
}

std::string first_mismatch(const MultiIndex& x, const Rational& got, const Rational& want) {
  return "first mismatch at " + x.str() + ": " + got.str() + " vs " + want.str();
}

}  // namespace

FaceSeries face_series(const CauchyData& data, const MultiIndex& tau, const MultiIndex& flags,
                       const MultiIndex& corner) {
  if (!on_face(tau, flags, corner)) {
    throw Error(ErrorKind::PointNotOnFace, "point " + tau.str() + " is not on face " + flags.str() + " of m=" + corner.str());
  }
  const std::size_t n = corner.dim();
  FaceSeries out{tau, flags, RationalFn(n)};
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < n; ++k) {
    if (flags[k]) active.push_back(k);
  }
  if (active.size() == n) return out;  // the corner m itself is outside X_0

  LaurentPoly finite(n);
  if (active.empty()) {
    add_point(finite, data, corner, tau);
    out.gf = RationalFn(finite);
    return out;
  }

  std::vector<const RaySpec*> along;
  for (const RaySpec& ray : data.rays) {
    if (detail::ray_along_cone(ray, tau, flags)) along.push_back(&ray);
  }

  if (active.size() == 1 && !along.empty()) {
    const std::size_t k = active.front();
    const RaySpec* first = *std::min_element(along.begin(), along.end(), [k](const RaySpec* a, const RaySpec* b) {
      return a->anchor[k] < b->anchor[k];
    });
    const std::int64_t a0 = first->anchor[k];
    MultiIndex x = tau;
    for (; x[k] < a0; ++x[k]) add_point(finite, data, corner, x);
    const MultiIndex start = x;
    out.gf = RationalFn(finite) + ray_tail_gf(*first, start[k] - a0, start);
    return out;
  }

  // Finitely many nonzero values: bound them and enumerate.
  MultiIndex hi = tau;
  for (const auto& [x, v] : data.entries) {
    if (!v.is_zero() && detail::in_cone(x, tau, flags)) hi = componentwise_max(hi, x);
  }
  for (const RaySpec& ray : data.rays) {
    if (auto p = detail::ray_crossing(ray, tau, flags)) hi = componentwise_max(hi, *p);
  }
  for (const RaySpec* ray : along) {
    const auto last = last_nonzero_index(*ray);
    if (!last) {
      throw Error(ErrorKind::UnsupportedFaceData, "face through " + tau.str() + " with flags " + flags.str() +
                                                      " carries the infinite recurrent ray from " + ray->anchor.str());
    }
    MultiIndex p = ray->anchor;
    p[ray->direction] += std::max<std::int64_t>(*last, 0);
    hi = componentwise_max(hi, p);
  }
  for (const MultiIndex& x : box_points(tau, hi)) {
    if (detail::in_cone(x, tau, flags)) add_point(finite, data, corner, x);
  }
  out.gf = RationalFn(finite);
  return out;
}

RationalFn data_gf(const CauchyData& data, const MultiIndex& corner) {
  require_valid(validate_data(data, corner));
  RationalFn sum(corner.dim());
  for (const Face& face : faces(corner)) {
    for (const MultiIndex& tau : face.points) sum += face_series(data, tau, face.flags, corner).gf;
  }
  return sum;
}

RationalFn boundary_sum(const DifferenceEquation& eq, const CauchyData& data) {
  require_problem(eq, data);
  const MultiIndex& m = eq.corner();
  RationalFn sum(m.dim());
  for (const Face& face : faces(m)) {
    for (const MultiIndex& tau : face.points) {
      const FaceSeries fs = face_series(data, tau, face.flags, m);
      if (fs.gf.is_zero()) continue;
      sum += fs.gf * RationalFn(boundary_poly(eq, tau));
    }
  }
  return sum;
}

RationalFn assemble_gf(const DifferenceEquation& eq, const CauchyData& data) {
  return boundary_sum(eq, data) / RationalFn(char_poly(eq));
}

RationalFn green_gf(const DifferenceEquation& eq, const MultiIndex& tau0) {
  require_valid(validate_equation(eq));
  if (!in_x0(tau0, eq.corner())) {
    throw Error(ErrorKind::Tau0NotInX0, "point " + tau0.str() + " is not in X_0 for m=" + eq.corner().str());
  }
  return RationalFn(boundary_poly(eq, tau0).shifted(solution_exponent(tau0)), char_poly(eq));
}

CoeffTable theorem1_series(const DifferenceEquation& eq, const CauchyData& data, Formula formula,
                           std::int64_t order) {
  require_problem(eq, data);
  if (order < 0) throw Error(ErrorKind::OutOfWindow, "negative truncation order");
  const MultiIndex& m = eq.corner();
  const std::size_t n = m.dim();
  const MultiIndex ones = MultiIndex::ones(n);
  const MultiIndex lo = ones.scaled(-(order + 1));
  const MultiIndex hi = m - ones;

  // Only data points tau <= m + order*I reach the window.
  CoeffMap phi;
  for (const MultiIndex& tau : box_points(MultiIndex(n), m + ones.scaled(order))) {
    if (!in_x0(tau, m)) continue;
    const Rational v = eval_data(data, m, tau).value;
    if (!v.is_zero()) phi.emplace(tau, v);
  }

  LaurentPoly acc(n);
  switch (formula) {
    case Formula::ShiftedData:
      for (const auto& [alpha, c] : eq.coeffs()) {
        for (const auto& [tau, v] : phi) {
          if (!geq(tau, alpha)) acc.add_term(alpha - tau - ones, c * v);
        }
      }
      break;
    case Formula::GroupedByExponent:
      for (const MultiIndex& nu : box_points(ones.scaled(-order), m)) {
        if (leq(nu, MultiIndex(n))) continue;
        Rational sum;
        for (const auto& [alpha, c] : eq.coeffs()) {
          if (!leq(nu, alpha)) continue;
          if (auto it = phi.find(alpha - nu); it != phi.end()) sum += c * it->second;
        }
        acc.add_term(nu - ones, sum);
      }
      break;
    case Formula::DataMinusLower: {
      LaurentPoly data_series(n);
      for (const auto& [tau, v] : phi) data_series.add_term(solution_exponent(tau), v);
      acc = char_poly(eq) * data_series;
      for (const auto& [tau, v] : phi) {
        LaurentPoly lower(n);
        for (const auto& [alpha, c] : eq.coeffs()) {
          if (leq(alpha, tau)) lower.add_term(alpha, c);
        }
        acc -= lower.shifted(solution_exponent(tau)) * v;
      }
      break;
    }
    case Formula::BoundaryWeighted:
      for (const auto& [tau, v] : phi) acc += boundary_poly(eq, tau).shifted(solution_exponent(tau)) * v;
      break;
  }
  return truncate(acc, lo, hi, order);
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (all_passed() ? "all checks passed" : "verification FAILED") << '\n';
  return os.str();
}

VerifyReport verify(const DifferenceEquation& eq, const CauchyData& data, const MultiIndex& bound,
                    const Expectations& expected) {
  VerifyReport report;
  auto add = [&report](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  try {
    require_problem(eq, data);
    if (bound.dim() != eq.dim()) throw Error(ErrorKind::DimensionMismatch, "box " + bound.str());
    if (!leq(eq.corner(), bound)) throw Error(ErrorKind::BoxTooSmall, "box " + bound.str() + " does not contain m");
  } catch (const Error& e) {
    add("input", false, e.what());
    return report;
  }

  const MultiIndex& m = eq.corner();
  const std::size_t n = m.dim();
  std::int64_t order = 0;
  for (auto v : bound) order = std::max(order, v);

  const SolutionTable table = solve_box(eq, data, bound);
  {
    const Rational r = max_residual(eq, table);
    add("dp_residual", r.is_zero(), "max |residual| = " + r.str());
  }

  RationalFn f(n);
  RationalFn s(n);
  try {
    s = boundary_sum(eq, data);
    f = s / RationalFn(char_poly(eq));
  } catch (const Error& e) {
    add("assemble", false, e.what());
    return report;
  }

  try {
    const CoeffTable series = expand_at_infinity(f, order);
    Rational worst;
    std::string where;
    for (const MultiIndex& x : box_points_graded(MultiIndex(n), bound)) {
      const Rational diff = (series.value_at(x) - table.at(x)).abs();
      if (!diff.is_zero() && where.empty()) where = first_mismatch(x, series.value_at(x), table.at(x));
      worst = std::max(worst, diff);
    }
    add("oracle_equivalence", worst.is_zero(),
        "max |expansion - dp| = " + worst.str() + " on 0.." + bound.str() + (where.empty() ? "" : "; " + where));
  } catch (const Error& e) {
    add("oracle_equivalence", false, e.what());
  }

  std::vector<CoeffTable> tables;
  for (Formula id : {Formula::ShiftedData, Formula::GroupedByExponent, Formula::DataMinusLower,
                     Formula::BoundaryWeighted}) {
    tables.push_back(theorem1_series(eq, data, id, order));
  }
  {
    std::string detail = "order " + std::to_string(order);
    bool ok = true;
    for (std::size_t i = 1; i < tables.size(); ++i) {
      if (!(tables[i] == tables[0])) {
        ok = false;
        detail += "; formula " + std::to_string(i + 1) + " differs from formula 1";
      }
    }
    add("four_formula_agreement", ok, detail);
  }

  try {
    // P*F from the closed form, by convolving P with a long enough expansion of F.
    const LaurentPoly p = char_poly(eq);
    const std::int64_t reach = *std::max_element(m.begin(), m.end());
    const CoeffTable long_series = expand_at_infinity(f, order + reach);
    const LaurentPoly product = p * LaurentPoly(n, LaurentPoly::TermMap(long_series.terms().begin(),
                                                                         long_series.terms().end()));
    const CoeffTable pf = truncate(product, tables[0].exponent_lo(), tables[0].exponent_hi(), order);
    add("pf_series", pf == tables[0], "P*F truncated to the identity window");
  } catch (const Error& e) {
    add("pf_series", false, e.what());
  }

  {
    const RationalFn residue = RationalFn(char_poly(eq)) * f - s;
    add("assembly_identity", equivalent(residue, RationalFn(n)), "P*F - sum Phi_tau P_tau = " + residue.str());
  }

  if (expected.gf) {
    bool same = false;
    std::string detail;
    try {
      same = equivalent(f, *expected.gf);
      detail = same ? "closed form matches the expected function" : "closed form " + f.str();
      if (!same) {
        const CoeffTable ref = expand_at_infinity(*expected.gf, order);
        for (const MultiIndex& x : box_points_graded(MultiIndex(n), bound)) {
          if (ref.value_at(x) != table.at(x)) {
            detail += "; " + first_mismatch(x, table.at(x), ref.value_at(x));
            break;
          }
        }
      }
    } catch (const Error& e) {
      detail = e.what();
    }
    add("expected_gf", same, detail);
  }
  if (!expected.values.empty()) {
    std::string detail;
    bool ok = true;
    for (const auto& [x, v] : expected.values) {
      if (!table.contains(x)) continue;
      if (table.at(x) != v) {
        ok = false;
        detail = first_mismatch(x, table.at(x), v);
        break;
      }
    }
    add("expected_values", ok, detail);
  }
  return report;
}

}  // namespace ratgf
