#include "ratgf/problem.hpp"

#include <algorithm>
#include <sstream>

#include "cone.hpp"

namespace ratgf {

namespace {

Diagnostic error(ErrorKind kind, std::string message) { return {Severity::Error, kind, std::move(message)}; }

}  // namespace

DifferenceEquation::DifferenceEquation(MultiIndex corner, CoeffMap coeffs) : corner_(std::move(corner)) {
  for (auto& [alpha, c] : coeffs) {
    if (!c.is_zero()) coeffs_.emplace(alpha, c);
  }
}

Rational DifferenceEquation::coeff(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Rational() : it->second;
}

std::vector<Rational> RaySpec::values(std::size_t count) const {
  std::vector<Rational> a;
  a.reserve(count);
  const std::size_t s = order();
  for (std::size_t y = 0; y < count; ++y) {
    if (y < s) {
      a.push_back(y < initial.size() ? initial[y] : Rational());
      continue;
    }
    Rational acc;
    for (std::size_t j = 0; j < s; ++j) acc += rec_coeffs[j] * a[y - s + j];
    a.push_back(s == 0 ? Rational() : -acc / rec_coeffs[s]);
  }
  return a;
}

Rational RaySpec::value(std::int64_t index) const {
  if (index < 0) return Rational();
  return values(static_cast<std::size_t>(index) + 1).back();
}

bool RaySpec::covers(const MultiIndex& x, std::int64_t* index) const {
  if (x.dim() != anchor.dim() || direction >= x.dim()) return false;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (j != direction && x[j] != anchor[j]) return false;
  }
  if (x[direction] < anchor[direction]) return false;
  if (index) *index = x[direction] - anchor[direction];
  return true;
}

std::vector<Diagnostic> validate_equation(const DifferenceEquation& eq) {
  std::vector<Diagnostic> out;
  const MultiIndex& m = eq.corner();
  if (m.dim() == 0) out.push_back(error(ErrorKind::DimensionMismatch, "equation has dimension 0"));
  if (!m.is_nonnegative()) out.push_back(error(ErrorKind::ExponentOutOfBox, "dominant corner " + m.str() + " is negative"));
  bool dims_ok = true;
  for (const auto& [alpha, c] : eq.coeffs()) {
    if (alpha.dim() != m.dim()) {
      out.push_back(error(ErrorKind::DimensionMismatch,
                          "coefficient exponent " + alpha.str() + " has dimension " + std::to_string(alpha.dim()) +
                              ", expected " + std::to_string(m.dim())));
      dims_ok = false;
      continue;
    }
    if (!alpha.is_nonnegative() || !leq(alpha, m)) {
      out.push_back(error(ErrorKind::ExponentOutOfBox, "exponent " + alpha.str() + " is not within 0.." + m.str()));
    }
  }
  if (dims_ok && eq.coeff(m).is_zero()) {
    out.push_back(error(ErrorKind::MissingDominantCorner, "no nonzero coefficient at the dominant corner " + m.str()));
  }
  if (eq.coeffs().size() < 2) {
    out.push_back(error(ErrorKind::DegenerateEquation, "equation needs at least two nonzero terms"));
  }
  return out;
}

std::vector<Diagnostic> validate_data(const CauchyData& data, const MultiIndex& corner) {
  std::vector<Diagnostic> out;
  const std::size_t n = corner.dim();
  for (const auto& [x, v] : data.entries) {
    if (x.dim() != n) {
      out.push_back(error(ErrorKind::DimensionMismatch, "data point " + x.str() + " has wrong dimension"));
    } else if (!in_x0(x, corner)) {
      out.push_back(error(ErrorKind::EntryOutsideX0, "data point " + x.str() + " is not in X_0 for m=" + corner.str()));
    }
  }

  std::vector<bool> ray_ok(data.rays.size(), false);
  for (std::size_t r = 0; r < data.rays.size(); ++r) {
    const RaySpec& ray = data.rays[r];
    const std::string name = "ray #" + std::to_string(r);
    if (ray.anchor.dim() != n) {
      out.push_back(error(ErrorKind::DimensionMismatch, name + " anchor has wrong dimension"));
      continue;
    }
    if (ray.direction >= n) {
      out.push_back(error(ErrorKind::InvalidRay, name + " direction " + std::to_string(ray.direction) + " out of range"));
      continue;
    }
    if (!ray.anchor.is_nonnegative()) {
      out.push_back(error(ErrorKind::InvalidRay, name + " anchor " + ray.anchor.str() + " is negative"));
      continue;
    }
    if (ray.rec_coeffs.empty() || ray.rec_coeffs.back().is_zero()) {
      out.push_back(error(ErrorKind::InvalidRay, name + " needs a nonzero leading recurrence coefficient"));
      continue;
    }
    if (ray.initial.size() != ray.order()) {
      out.push_back(error(ErrorKind::InvalidRay, name + " has " + std::to_string(ray.initial.size()) +
                                                      " initial values for a recurrence of order " +
                                                      std::to_string(ray.order())));
      continue;
    }
    bool stays = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != ray.direction && ray.anchor[j] < corner[j]) stays = true;
    }
    if (!stays) {
      out.push_back(error(ErrorKind::InvalidRay, name + " from " + ray.anchor.str() + " leaves X_0"));
      continue;
    }
    ray_ok[r] = true;
  }

  // Entries lying on rays.
  for (std::size_t r = 0; r < data.rays.size(); ++r) {
    if (!ray_ok[r]) continue;
    const RaySpec& ray = data.rays[r];
    for (const auto& [x, v] : data.entries) {
      std::int64_t idx = 0;
      if (x.dim() == n && ray.covers(x, &idx)) {
        const Rational rv = ray.value(idx);
        if (rv != v) {
          out.push_back(error(ErrorKind::InconsistentCoverage, "entry " + x.str() + " = " + v.str() + " but ray #" +
                                                                  std::to_string(r) + " gives " + rv.str()));
        }
      }
    }
  }

  // Pairs of rays.
  for (std::size_t r = 0; r < data.rays.size(); ++r) {
    if (!ray_ok[r]) continue;
    for (std::size_t q = r + 1; q < data.rays.size(); ++q) {
      if (!ray_ok[q]) continue;
      const RaySpec& a = data.rays[r];
      const RaySpec& b = data.rays[q];
      const std::string pair = "rays #" + std::to_string(r) + " and #" + std::to_string(q);
      if (a.direction == b.direction) {
        const std::size_t k = a.direction;
        bool same_line = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k && a.anchor[j] != b.anchor[j]) same_line = false;
        }
        if (!same_line) continue;
        // Two recurrent sequences agreeing on order_a + order_b consecutive terms agree forever.
        const std::int64_t start = std::max(a.anchor[k], b.anchor[k]);
        const std::size_t len = a.order() + b.order() + 1;
        const auto va = a.values(static_cast<std::size_t>(start - a.anchor[k]) + len);
        const auto vb = b.values(static_cast<std::size_t>(start - b.anchor[k]) + len);
        for (std::size_t t = 0; t < len; ++t) {
          const Rational& xa = va[static_cast<std::size_t>(start - a.anchor[k]) + t];
          const Rational& xb = vb[static_cast<std::size_t>(start - b.anchor[k]) + t];
          if (xa != xb) {
            MultiIndex p = a.anchor;
            p[k] = start + static_cast<std::int64_t>(t);
            out.push_back(error(ErrorKind::InconsistentCoverage,
                                pair + " disagree at " + p.str() + ": " + xa.str() + " vs " + xb.str()));
            break;
          }
        }
      } else {
        MultiIndex p = a.anchor;
        p[a.direction] = b.anchor[a.direction];
        std::int64_t ia = 0, ib = 0;
        if (a.covers(p, &ia) && b.covers(p, &ib)) {
          const Rational xa = a.value(ia);
          const Rational xb = b.value(ib);
          if (xa != xb) {
            out.push_back(error(ErrorKind::InconsistentCoverage,
                                pair + " disagree at " + p.str() + ": " + xa.str() + " vs " + xb.str()));
          }
        }
      }
    }
  }

  if (has_errors(out)) return out;

  // Face rays without any data are silently zero; list them.
  std::vector<std::string> uncovered;
  const MultiIndex all = MultiIndex::ones(n);
  for (const Face& face : faces(corner)) {
    if (face.flags == all) continue;
    for (const MultiIndex& tau : face.points) {
      bool touched = std::any_of(data.entries.begin(), data.entries.end(),
                                 [&](const auto& kv) { return detail::in_cone(kv.first, tau, face.flags); });
      for (const RaySpec& ray : data.rays) {
        if (touched) break;
        touched = detail::ray_along_cone(ray, tau, face.flags) || detail::ray_crossing(ray, tau, face.flags).has_value();
      }
      if (!touched) uncovered.push_back(tau.str() + "+" + face.flags.str() + "y");
    }
  }
  if (!uncovered.empty()) {
    std::ostringstream os;
    os << "zero data assumed on";
    for (const auto& u : uncovered) os << ' ' << u;
    out.push_back({Severity::Notice, ErrorKind::InconsistentCoverage, os.str()});
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

void require_valid(const std::vector<Diagnostic>& diagnostics) {
  const Diagnostic* first = nullptr;
  std::string joined;
  for (const Diagnostic& d : diagnostics) {
    if (d.severity != Severity::Error) continue;
    if (!first) first = &d;
    if (!joined.empty()) joined += "; " + std::string(to_string(d.kind)) + ": ";
    joined += d.message;
  }
  if (first) throw Error(first->kind, joined);
}

LaurentPoly char_poly(const DifferenceEquation& eq) {
  LaurentPoly p(eq.dim());
  for (const auto& [alpha, c] : eq.coeffs()) p.add_term(alpha, c);
  return p;
}

LaurentPoly boundary_poly(const DifferenceEquation& eq, const MultiIndex& tau) {
  require_same_dim(tau, eq.corner(), "boundary polynomial");
  LaurentPoly p(eq.dim());
  for (const auto& [alpha, c] : eq.coeffs()) {
    if (!leq(alpha, tau)) p.add_term(alpha, c);
  }
  return p;
}

std::vector<MultiIndex> face_points(const MultiIndex& flags, const MultiIndex& corner) {
  require_same_dim(flags, corner, "face");
  MultiIndex lo(corner.dim()), hi(corner.dim());
  for (std::size_t k = 0; k < corner.dim(); ++k) {
    if (flags[k]) {
      lo[k] = hi[k] = corner[k];
    } else {
      if (corner[k] == 0) return {};
      hi[k] = corner[k] - 1;
    }
  }
  return box_points(lo, hi);
}

std::vector<Face> faces(const MultiIndex& corner) {
  const std::size_t n = corner.dim();
  std::vector<Face> out;
  for (const MultiIndex& flags : box_points(MultiIndex(n), MultiIndex::ones(n))) {
    out.push_back({flags, face_points(flags, corner)});
  }
  return out;
}

bool on_face(const MultiIndex& tau, const MultiIndex& flags, const MultiIndex& corner) {
  if (tau.dim() != corner.dim() || flags.dim() != corner.dim()) return false;
  for (std::size_t k = 0; k < corner.dim(); ++k) {
    if (tau[k] < 0) return false;
    if (flags[k] == 1) {
      if (tau[k] != corner[k]) return false;
    } else if (flags[k] == 0) {
      if (tau[k] >= corner[k]) return false;
    } else {
      return false;
    }
  }
  return true;
}

PointDecomposition decompose_point(const MultiIndex& x, const MultiIndex& corner) {
  require_same_dim(x, corner, "point decomposition");
  const std::size_t n = x.dim();
  PointDecomposition d{MultiIndex(n), MultiIndex(n), MultiIndex(n)};
  for (std::size_t k = 0; k < n; ++k) {
    d.flags[k] = x[k] >= corner[k] ? 1 : 0;
    d.tau[k] = std::min(x[k], corner[k]);
    d.y[k] = x[k] - d.tau[k];
  }
  return d;
}

bool in_x0(const MultiIndex& tau, const MultiIndex& corner) {
  if (tau.dim() != corner.dim() || !tau.is_nonnegative()) return false;
  for (std::size_t j = 0; j < tau.dim(); ++j) {
    if (tau[j] < corner[j]) return true;
  }
  return false;
}

DataValue eval_data(const CauchyData& data, const MultiIndex& corner, const MultiIndex& x) {
  if (!in_x0(x, corner)) return {Rational(), false};
  if (auto it = data.entries.find(x); it != data.entries.end()) return {it->second, true};
  for (const RaySpec& ray : data.rays) {
    std::int64_t idx = 0;
    if (ray.covers(x, &idx)) return {ray.value(idx), true};
  }
  return {Rational(), true};
}

CauchyData delta_data(const MultiIndex& tau0, const MultiIndex& corner) {
  if (!in_x0(tau0, corner)) {
    throw Error(ErrorKind::Tau0NotInX0, "point " + tau0.str() + " is not in X_0 for m=" + corner.str());
  }
  CauchyData data;
  data.entries.emplace(tau0, Rational(1));
  return data;
}

}  // namespace ratgf
