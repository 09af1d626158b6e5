#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ratgf/error.hpp"
#include "ratgf/laurent_poly.hpp"
#include "ratgf/multi_index.hpp"
#include "ratgf/rational.hpp"

namespace ratgf {

using CoeffMap = std::map<MultiIndex, Rational, GradedLexGreater>;

/// Constant-coefficient difference equation sum_{0<=a<=m} c_a f(x+a) = 0.
///
/// Construction does not validate; see validate_equation().
class DifferenceEquation {
 public:
  DifferenceEquation() = default;
  DifferenceEquation(MultiIndex corner, CoeffMap coeffs);

  std::size_t dim() const { return corner_.dim(); }
  const MultiIndex& corner() const { return corner_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  Rational coeff(const MultiIndex& alpha) const;
  Rational leading() const { return coeff(corner_); }

  friend bool operator==(const DifferenceEquation&, const DifferenceEquation&) = default;

 private:
  MultiIndex corner_;
  CoeffMap coeffs_;
};

/// Data along the ray anchor + y*e_direction generated by the linear recurrence
/// sum_j rec_coeffs[j] * a_{y+j} = 0 from initial values a_0..a_{s-1}.
struct RaySpec {
  MultiIndex anchor;
  std::size_t direction = 0;
  std::vector<Rational> rec_coeffs;
  std::vector<Rational> initial;

  std::size_t order() const { return rec_coeffs.empty() ? 0 : rec_coeffs.size() - 1; }
  /// a_0 .. a_{count-1}.
  std::vector<Rational> values(std::size_t count) const;
  Rational value(std::int64_t index) const;
  /// True iff the lattice point lies on the ray; sets index when it does.
  bool covers(const MultiIndex& x, std::int64_t* index = nullptr) const;

  friend bool operator==(const RaySpec&, const RaySpec&) = default;
};

/// Cauchy data on X_0: explicit entries plus recurrent rays; everything else is 0.
struct CauchyData {
  CoeffMap entries;
  std::vector<RaySpec> rays;

  friend bool operator==(const CauchyData&, const CauchyData&) = default;
};

/// Vertex set of one face Γ_J of the box Π_m.
struct Face {
  MultiIndex flags;
  std::vector<MultiIndex> points;
};

/// x = tau + flags∘y with tau on face Γ_flags.
struct PointDecomposition {
  MultiIndex flags;
  MultiIndex tau;
  MultiIndex y;
};

enum class Severity { Error, Notice };

struct Diagnostic {
  Severity severity = Severity::Error;
  ErrorKind kind = ErrorKind::ParseError;
  std::string message;
};

/// Value of the data at a point together with a flag telling whether the
/// point belongs to X_0 (outside X_0 the value is the zero extension).
struct DataValue {
  Rational value;
  bool in_x0 = true;
};

std::vector<Diagnostic> validate_equation(const DifferenceEquation& eq);
/// Checks entries and rays against X_0 and cross-checks every overlap.
/// Also emits Notice diagnostics for face rays that carry no data at all.
std::vector<Diagnostic> validate_data(const CauchyData& data, const MultiIndex& corner);

/// Throws Error with the kind of the first error diagnostic; all messages are joined.
void require_valid(const std::vector<Diagnostic>& diagnostics);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

LaurentPoly char_poly(const DifferenceEquation& eq);

/// Sum of c_a z^a over the coefficients with a not <= tau.
LaurentPoly boundary_poly(const DifferenceEquation& eq, const MultiIndex& tau);

/// All 2^n faces of Π_m, flags enumerated in lexicographic order.
std::vector<Face> faces(const MultiIndex& corner);
std::vector<MultiIndex> face_points(const MultiIndex& flags, const MultiIndex& corner);
bool on_face(const MultiIndex& tau, const MultiIndex& flags, const MultiIndex& corner);

PointDecomposition decompose_point(const MultiIndex& x, const MultiIndex& corner);

/// tau >= 0 and tau_j < m_j for some j.
bool in_x0(const MultiIndex& tau, const MultiIndex& corner);

DataValue eval_data(const CauchyData& data, const MultiIndex& corner, const MultiIndex& x);

/// Delta data at tau0. Throws Error(Tau0NotInX0).
CauchyData delta_data(const MultiIndex& tau0, const MultiIndex& corner);

}  // namespace ratgf
