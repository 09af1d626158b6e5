#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace ratgf {

/// A point of Z^n. Used for exponents, lattice arguments and shifts alike.
class MultiIndex {
 public:
  using value_type = std::int64_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim, value_type fill = 0) : c_(dim, fill) {}
  MultiIndex(std::initializer_list<value_type> values) : c_(values) {}
  explicit MultiIndex(std::vector<value_type> values) : c_(std::move(values)) {}

  static MultiIndex ones(std::size_t dim) { return MultiIndex(dim, 1); }
  static MultiIndex unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return c_.size(); }
  value_type operator[](std::size_t i) const { return c_[i]; }
  value_type& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<value_type>& values() const { return c_; }

  value_type total_degree() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  MultiIndex& operator+=(const MultiIndex& rhs);
  MultiIndex& operator-=(const MultiIndex& rhs);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
  MultiIndex operator-() const;
  MultiIndex scaled(value_type k) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string str() const;

 private:
  std::vector<value_type> c_;
};

// Componentwise partial order. For n > 1, !leq(a, b) ("a is not <= b") is
// not the same relation as geq(a, b): a = (3,0), b = (2,1) has !leq but not geq.
bool leq(const MultiIndex& a, const MultiIndex& b);
bool geq(const MultiIndex& a, const MultiIndex& b);

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b);
MultiIndex componentwise_max(const MultiIndex& a, const MultiIndex& b);

/// Componentwise (Hadamard) product, used for J∘y with 0/1 flag vectors.
MultiIndex hadamard(const MultiIndex& a, const MultiIndex& b);

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Graded-lex greater-than; used to store term maps leading-term first.
struct GradedLexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return GradedLexLess{}(b, a); }
};

/// Every point of the box lo <= x <= hi in lexicographic (row-major) order.
std::vector<MultiIndex> box_points(const MultiIndex& lo, const MultiIndex& hi);

/// Same points sorted by graded lexicographic order.
std::vector<MultiIndex> box_points_graded(const MultiIndex& lo, const MultiIndex& hi);

std::ostream& operator<<(std::ostream& os, const MultiIndex& x);

void require_same_dim(const MultiIndex& a, const MultiIndex& b, const char* what);

}  // namespace ratgf
