#pragma once

// Helpers shared by the data validator and the face-series builder. A "cone"
// is the lattice ray set {tau + J∘y : y >= 0} attached to a face point tau.

#include <optional>

#include "ratgf/problem.hpp"

namespace ratgf::detail {

inline bool in_cone(const MultiIndex& x, const MultiIndex& tau, const MultiIndex& flags) {
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (flags[j] ? x[j] < tau[j] : x[j] != tau[j]) return false;
  }
  return true;
}

/// The ray runs inside the cone from some index on (it is parallel to an active axis
/// and its other coordinates fit the cone).
inline bool ray_along_cone(const RaySpec& ray, const MultiIndex& tau, const MultiIndex& flags) {
  const std::size_t k = ray.direction;
  if (!flags[k]) return false;
  for (std::size_t j = 0; j < tau.dim(); ++j) {
    if (j == k) continue;
    if (flags[j] ? ray.anchor[j] < tau[j] : ray.anchor[j] != tau[j]) return false;
  }
  return true;
}

/// The single cone point hit by a ray not parallel to an active axis, if any.
inline std::optional<MultiIndex> ray_crossing(const RaySpec& ray, const MultiIndex& tau, const MultiIndex& flags) {
  const std::size_t k = ray.direction;
  if (flags[k]) return std::nullopt;
  MultiIndex p = ray.anchor;
  p[k] = tau[k];
  if (p[k] < ray.anchor[k]) return std::nullopt;
  if (!in_cone(p, tau, flags)) return std::nullopt;
  return p;
}

}  // namespace ratgf::detail
