#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratgf/problem.hpp"
#include "ratgf/rational_fn.hpp"
#include "ratgf/series.hpp"

namespace ratgf {

/// Generating function of the data along the ray tau + J∘y, y >= 0:
/// sum_y phi(tau + J∘y) z^-(tau + J∘y + I).
struct FaceSeries {
  MultiIndex tau;
  MultiIndex flags;
  RationalFn gf;
};

/// Closed form of one face series.
///
/// Faces with no active direction hold a single monomial. A face with one
/// active axis k is covered either by finitely many data points or by a
/// recurrent ray on the same line; in the latter case the ray's sequence
/// generating function A(t) = Q(t)/R(t) is built from the reversed recurrence
/// polynomial R, its tail from the face point is (A - prefix)/t^shift, and
/// t is replaced by 1/z_k. Faces with two or more active axes must carry
/// finitely many nonzero values, otherwise Error(UnsupportedFaceData).
FaceSeries face_series(const CauchyData& data, const MultiIndex& tau, const MultiIndex& flags,
                       const MultiIndex& corner);

/// Generating function of all data on X_0: the sum of every face series.
RationalFn data_gf(const CauchyData& data, const MultiIndex& corner);

/// Sum over faces J and points tau of Γ_J of face_series(tau, J) * boundary_poly(tau).
/// This equals P(z) F(z).
RationalFn boundary_sum(const DifferenceEquation& eq, const CauchyData& data);

/// Closed-form generating function F = boundary_sum / P of the solution.
RationalFn assemble_gf(const DifferenceEquation& eq, const CauchyData& data);

/// Generating function of the discrete Green's function at tau0:
/// boundary_poly(tau0) z^-(tau0+I) / P(z). Throws Error(Tau0NotInX0).
RationalFn green_gf(const DifferenceEquation& eq, const MultiIndex& tau0);

/// The four equivalent expressions for P(z) F(z) in terms of the data.
enum class Formula {
  /// sum_a c_a sum_{tau >= 0, tau not >= a} phi(tau) z^(a - tau - I)
  ShiftedData = 1,
  /// sum_{nu <= m, nu not <= 0} (sum_{nu <= a <= m} c_a phi(a - nu)) z^(nu - I)
  GroupedByExponent = 2,
  /// P(z) Phi(z) - sum_{tau in X_0} (sum_{0 <= a <= tau} c_a z^a) phi(tau) z^-(tau+I)
  DataMinusLower = 3,
  /// sum_{tau in X_0} P_tau(z) phi(tau) z^-(tau+I)
  BoundaryWeighted = 4,
};

/// Truncated expansion of P(z) F(z) over z-exponents -(order+1)I <= e <= m - I,
/// computed from the data alone by the selected formula.
CoeffTable theorem1_series(const DifferenceEquation& eq, const CauchyData& data, Formula formula,
                           std::int64_t order);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::string str() const;
};

/// Optional reference values carried by a problem file.
struct Expectations {
  std::optional<RationalFn> gf;
  CoeffMap values;
};

/// Cross-checks the closed form against the dynamic-programming solution on
/// the box, the four truncated identities against each other and against
/// P*F, the assembly identity, and any supplied expectations. Never throws
/// for check failures; each one becomes a report entry.
VerifyReport verify(const DifferenceEquation& eq, const CauchyData& data, const MultiIndex& bound,
                    const Expectations& expected = {});

}  // namespace ratgf
