#include "ratgf/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ratgf/error.hpp"

namespace ratgf {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis) {
  MultiIndex e(dim);
  e[axis] = 1;
  return e;
}

MultiIndex::value_type MultiIndex::total_degree() const {
  return std::accumulate(c_.begin(), c_.end(), value_type{0});
}

bool MultiIndex::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](value_type v) { return v >= 0; });
}

bool MultiIndex::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](value_type v) { return v == 0; });
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& rhs) {
  require_same_dim(*this, rhs, "MultiIndex addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& rhs) {
  require_same_dim(*this, rhs, "MultiIndex subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

MultiIndex MultiIndex::operator-() const { return scaled(-1); }

MultiIndex MultiIndex::scaled(value_type k) const {
  MultiIndex r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a, b, "componentwise comparison");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool geq(const MultiIndex& a, const MultiIndex& b) { return leq(b, a); }

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a, b, "componentwise min");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

MultiIndex componentwise_max(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a, b, "componentwise max");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

MultiIndex hadamard(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a, b, "componentwise product");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] * b[i];
  return r;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return a.values() < b.values();
}

std::vector<MultiIndex> box_points(const MultiIndex& lo, const MultiIndex& hi) {
  require_same_dim(lo, hi, "box");
  std::vector<MultiIndex> out;
  if (!leq(lo, hi)) return out;
  MultiIndex x = lo;
  const std::size_t n = lo.dim();
  while (true) {
    out.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        for (std::size_t j = k + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<MultiIndex> box_points_graded(const MultiIndex& lo, const MultiIndex& hi) {
  auto pts = box_points(lo, hi);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const MultiIndex& a, const MultiIndex& b) { return a.total_degree() < b.total_degree(); });
  return pts;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& x) {
  os << '(';
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os << ')';
}

void require_same_dim(const MultiIndex& a, const MultiIndex& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + std::to_string(a.dim()) + " vs " +
                                                  std::to_string(b.dim()));
  }
}

}  // namespace ratgf
