#include <gtest/gtest.h>

#include "ratgf/error.hpp"
#include "ratgf/series.hpp"
#include "test_support.hpp"

namespace ratgf {
namespace {

using testing::Generator;
using testing::poly;

LaurentPoly z_minus_1() { return poly(1, {{{1}, 1}, {{0}, -1}}); }

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
  EXPECT_EQ(Rational::parse("-10/5").str(), "-2");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_EQ(Rational::parse("0/7").denominator(), 1);
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1.5", "1/0", "--1", "1/-2", "x"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational().inverse(), Error);
}

TEST(MultiIndex, PartialOrderRelations) {
  const MultiIndex m{2, 1};
  EXPECT_TRUE(leq(MultiIndex{1, 1}, m));
  EXPECT_FALSE(leq(MultiIndex{3, 0}, m));
  EXPECT_FALSE(geq(MultiIndex{3, 0}, m));  // (3,0) is neither >= nor <= (2,1)
  EXPECT_TRUE(geq(MultiIndex{2, 5}, m));
  EXPECT_THROW(leq(MultiIndex{1}, m), Error);
}

TEST(MultiIndex, GradedLexOrder) {
  GradedLexLess less;
  EXPECT_TRUE(less(MultiIndex{5, 0}, MultiIndex{0, 6}));
  EXPECT_TRUE(less(MultiIndex{0, 2}, MultiIndex{1, 1}));
  EXPECT_FALSE(less(MultiIndex{1, 1}, MultiIndex{1, 1}));
}

TEST(PolyArith, DifferenceOfSquares) {
  const LaurentPoly zp1 = poly(1, {{{1}, 1}, {{0}, 1}});
  EXPECT_EQ(poly_arith(PolyOp::Mul, z_minus_1(), zp1), poly(1, {{{2}, 1}, {{0}, -1}}));
}

TEST(PolyArith, AdditiveInverse) {
  const LaurentPoly p = testing::isolated_char_poly();
  const LaurentPoly sum = poly_arith(PolyOp::Add, p, -p);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum.term_count(), 0U);
}

TEST(PolyArith, CharPolyTimesClosedFormGivesNumerator) {
  const RationalFn pf = RationalFn(testing::isolated_char_poly()) * testing::isolated_closed_form();
  EXPECT_TRUE(pf.is_polynomial());
  EXPECT_EQ(pf.numerator(), poly(2, {{{1, 0}, 1}, {{0, 0}, -1}}));
}

TEST(PolyArith, DimensionMismatchThrows) {
  EXPECT_THROW(poly_arith(PolyOp::Add, z_minus_1(), testing::isolated_char_poly()), Error);
  EXPECT_THROW(poly_arith(PolyOp::Mul, z_minus_1(), testing::isolated_char_poly()), Error);
}

TEST(PolyArith, NegativeExponentsAreSupported) {
  const LaurentPoly p = poly(2, {{{-1, 0}, 2}, {{0, -3}, 1}});
  const LaurentPoly q = p * LaurentPoly::monomial(MultiIndex{1, 3});
  EXPECT_EQ(q, poly(2, {{{0, 3}, 2}, {{1, 0}, 1}}));
  EXPECT_FALSE(p.is_polynomial());
  EXPECT_EQ(p.str(), "2*z1^-1 + z2^-3");
}

TEST(PolyArith, RingLawsOnRandomTriples) {
  Generator gen(7);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    const LaurentPoly a = gen.laurent(n, 5, -2, 3);
    const LaurentPoly b = gen.laurent(n, 5, -2, 3);
    const LaurentPoly c = gen.laurent(n, 5, -2, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, LaurentPoly(n));
  }
}

TEST(ExactDivide, RecoversFactorsAndRejectsNonMultiples) {
  Generator gen(11);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    LaurentPoly a = gen.laurent(n, 4, -1, 3);
    LaurentPoly b = gen.laurent(n, 4, -1, 3);
    if (b.is_zero()) continue;
    const auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q * b, a * b);
  }
  const LaurentPoly zp1 = poly(1, {{{1}, 1}, {{0}, 1}});
  EXPECT_FALSE(exact_divide(zp1, z_minus_1()).has_value());
  EXPECT_THROW(exact_divide(zp1, LaurentPoly(1)), Error);
}

TEST(RationalFnArith, AdditiveIdentity) {
  const RationalFn f(LaurentPoly::constant(2, 1), poly(2, {{{1, 1}, 1}}));
  const RationalFn sum = ratfn_arith(FnOp::Add, f, RationalFn(2));
  EXPECT_EQ(sum, f);
}

TEST(RationalFnArith, MultiplicativeInverse) {
  const LaurentPoly zp1 = poly(1, {{{1}, 1}, {{0}, 1}});
  const RationalFn prod = ratfn_arith(FnOp::Mul, RationalFn(LaurentPoly::constant(1, 1), zp1), RationalFn(zp1));
  EXPECT_TRUE(equivalent(prod, RationalFn(LaurentPoly::constant(1, 1))));
  EXPECT_EQ(prod, RationalFn(LaurentPoly::constant(1, 1)));
}

TEST(RationalFnArith, DivisionGivesClosedForm) {
  const RationalFn q = ratfn_arith(FnOp::Div, RationalFn(poly(2, {{{1, 0}, 1}, {{0, 0}, -1}})),
                                   RationalFn(testing::isolated_char_poly()));
  EXPECT_TRUE(equivalent(q, testing::isolated_closed_form()));
  EXPECT_EQ(q.denominator(), testing::isolated_char_poly());
}

TEST(RationalFnArith, DivisionByZeroFunctionThrows) {
  EXPECT_THROW(ratfn_arith(FnOp::Div, RationalFn(z_minus_1()), RationalFn(1)), Error);
  EXPECT_THROW(RationalFn(z_minus_1(), LaurentPoly(1)), Error);
}

TEST(RationalFnCanonical, NormalizesMonomialsContentAndSign) {
  // (-2/3 z^-1 w) / (4/3 z^2 w - 2/3 w) -> integer content-1 denominator, positive lead.
  const RationalFn f(poly(2, {{{-1, 1}, 1}}) * Rational(-2, 3),
                     poly(2, {{{2, 1}, 4}, {{0, 1}, -2}}) * Rational(1, 3));
  EXPECT_EQ(f.denominator(), poly(2, {{{3, 0}, 2}, {{1, 0}, -1}}));
  EXPECT_EQ(f.numerator(), poly(2, {{{0, 0}, -1}}));
  EXPECT_TRUE(f.numerator().is_polynomial());
}

TEST(RationalFnCanonical, IsIdempotent) {
  Generator gen(3);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
    LaurentPoly den = gen.laurent(n, 4, -2, 3);
    if (den.is_zero()) continue;
    const RationalFn f(gen.laurent(n, 4, -2, 3), den);
    EXPECT_EQ(RationalFn(f.numerator(), f.denominator()), f);
  }
}

TEST(RatfnEq, Examples) {
  const LaurentPoly zp1 = poly(1, {{{1}, 1}, {{0}, 1}});
  const LaurentPoly z2m1 = poly(1, {{{2}, 1}, {{0}, -1}});
  const RationalFn one = RationalFn(LaurentPoly::constant(1, 1), LaurentPoly::constant(1, 1));
  EXPECT_TRUE(equivalent(RationalFn(z_minus_1(), z2m1), one / RationalFn(zp1)));
  EXPECT_FALSE(equivalent(one / RationalFn(z_minus_1()), one / RationalFn(zp1)));
}

TEST(RatfnEq, EquivalenceRelationAndScalingInvariance) {
  Generator gen(5);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 2));
    LaurentPoly num = gen.laurent(n, 3, -1, 2);
    LaurentPoly den = gen.laurent(n, 3, -1, 2);
    LaurentPoly extra = gen.laurent(n, 3, -1, 2);
    LaurentPoly extra2 = gen.laurent(n, 3, -1, 2);
    if (den.is_zero() || extra.is_zero() || extra2.is_zero()) continue;
    const RationalFn f(num, den);
    const RationalFn g(num * extra, den * extra);
    const RationalFn h(num * extra2, den * extra2);
    EXPECT_TRUE(equivalent(f, f));
    EXPECT_TRUE(equivalent(f, g));
    EXPECT_TRUE(equivalent(g, f));
    EXPECT_TRUE(equivalent(g, h));
    EXPECT_TRUE(equivalent(f, h));
  }
}

TEST(RationalFnArith, FieldLawsUnderEquivalence) {
  Generator gen(9);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 2));
    auto rf = [&]() {
      LaurentPoly den;
      do {
        den = gen.laurent(n, 3, -1, 2);
      } while (den.is_zero());
      return RationalFn(gen.laurent(n, 3, -1, 2), den);
    };
    const RationalFn a = rf(), b = rf(), c = rf();
    EXPECT_TRUE(equivalent((a + b) + c, a + (b + c)));
    EXPECT_TRUE(equivalent(a * (b + c), a * b + a * c));
    EXPECT_TRUE(equivalent(a - a, RationalFn(n)));
    if (!b.is_zero()) EXPECT_TRUE(equivalent((a / b) * b, a));
  }
}

TEST(ExpandAtInfinity, GeometricSeries) {
  const RationalFn f(LaurentPoly::constant(1, 1), z_minus_1());
  const CoeffTable t = expand_at_infinity(f, 4);
  for (std::int64_t x = 0; x <= 4; ++x) EXPECT_EQ(t.value_at(MultiIndex{x}), Rational(1)) << x;
}

TEST(ExpandAtInfinity, FibonacciMatchesIteration) {
  const RationalFn f(LaurentPoly::constant(1, 1), poly(1, {{{2}, 1}, {{1}, -1}, {{0}, -1}}));
  const auto oracle = testing::iterate_1d({-1, -1, 1}, {0, 1}, 6);
  const CoeffTable t = expand_at_infinity(f, 5);
  for (std::int64_t x = 0; x <= 5; ++x) EXPECT_EQ(t.value_at(MultiIndex{x}), oracle[static_cast<std::size_t>(x)]);
  EXPECT_EQ(oracle, (std::vector<Rational>{0, 1, 1, 2, 3, 5}));
}

TEST(ExpandAtInfinity, IsolatedElementsCountsMatchEnumeration) {
  const CoeffTable t = expand_at_infinity(testing::isolated_closed_form(), 3);
  EXPECT_EQ(t.value_at(MultiIndex{3, 1}), Rational(2));
  for (std::int64_t x = 0; x <= 3; ++x) {
    for (std::int64_t y = 0; y <= 3; ++y) {
      EXPECT_EQ(t.value_at(MultiIndex{x, y}), Rational(testing::count_isolated(x, y))) << x << "," << y;
    }
  }
}

TEST(ExpandAtInfinity, PolynomialPartIsKept) {
  // (z^2 + 1)/z = z + z^-1 has a polynomial part at exponent 1.
  const RationalFn f(poly(1, {{{2}, 1}, {{0}, 1}}), poly(1, {{{1}, 1}}));
  const CoeffTable t = expand_at_infinity(f, 2);
  EXPECT_EQ(t.at_exponent(MultiIndex{1}), Rational(1));
  EXPECT_EQ(t.at_exponent(MultiIndex{0}), Rational(0));
  EXPECT_EQ(t.value_at(MultiIndex{0}), Rational(1));
  EXPECT_EQ(t.value_at(MultiIndex{1}), Rational(0));
}

TEST(ExpandAtInfinity, NotExpandableWithoutCornerTerm) {
  const RationalFn f(LaurentPoly::constant(2, 1), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  try {
    expand_at_infinity(f, 3);
    FAIL() << "expected NotExpandableAtInfinity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotExpandableAtInfinity);
  }
}

TEST(ExpandAtInfinity, OutOfWindowQueriesFail) {
  const CoeffTable t = expand_at_infinity(RationalFn(LaurentPoly::constant(1, 1), z_minus_1()), 4);
  EXPECT_THROW(t.value_at(MultiIndex{5}), Error);
  EXPECT_THROW(t.at_exponent(MultiIndex{3}), Error);
}

TEST(ExpandAtInfinity, Linearity) {
  Generator gen(21);
  const LaurentPoly p = testing::isolated_char_poly();
  for (int it = 0; it < 30; ++it) {
    const RationalFn f(gen.laurent(2, 4, -2, 2), p);
    const RationalFn g(gen.laurent(2, 4, -2, 2), p * poly(2, {{{1, 0}, 1}, {{0, 0}, 2}}));
    const Rational a = gen.rational(), b = gen.rational();
    const RationalFn combo = RationalFn(LaurentPoly::constant(2, a)) * f + RationalFn(LaurentPoly::constant(2, b)) * g;
    const CoeffTable tf = expand_at_infinity(f, 5);
    const CoeffTable tg = expand_at_infinity(g, 5);
    const CoeffTable tc = expand_at_infinity(combo, 5);
    for (const MultiIndex& x : box_points(MultiIndex{0, 0}, MultiIndex{5, 5})) {
      EXPECT_EQ(tc.value_at(x), a * tf.value_at(x) + b * tg.value_at(x));
    }
  }
}

TEST(ExpandAtInfinity, ConvolutionWithPolynomial) {
  Generator gen(33);
  const LaurentPoly p = testing::isolated_char_poly();
  for (int it = 0; it < 20; ++it) {
    const LaurentPoly q = gen.laurent(2, 3, 0, 2);
    const RationalFn f(gen.laurent(2, 4, -2, 1), p);
    const int d = 5;
    const CoeffTable lhs = expand_at_infinity(RationalFn(q) * f, d);
    std::int64_t deg = 0;
    if (!q.is_zero()) deg = std::max(q.max_exponent()[0], q.max_exponent()[1]);
    const CoeffTable tf = expand_at_infinity(f, d + deg);
    const LaurentPoly series(2, LaurentPoly::TermMap(tf.terms().begin(), tf.terms().end()));
    const LaurentPoly prod = q * series;
    for (const MultiIndex& x : box_points(MultiIndex{0, 0}, MultiIndex{d, d})) {
      EXPECT_EQ(lhs.value_at(x), prod.coeff(solution_exponent(x)));
    }
  }
}

TEST(CoeffAt, Examples) {
  EXPECT_EQ(coeff_at(RationalFn(LaurentPoly::constant(1, 1), z_minus_1()), MultiIndex{7}), Rational(1));
  EXPECT_EQ(coeff_at(testing::isolated_closed_form(), MultiIndex{2, 2}), Rational(testing::count_isolated(2, 2)));
  EXPECT_EQ(coeff_at(testing::isolated_closed_form(), MultiIndex{2, 2}), Rational(1));
  EXPECT_EQ(coeff_at(testing::isolated_closed_form(), MultiIndex{2, 0}), Rational(1));
  EXPECT_THROW(coeff_at(testing::isolated_closed_form(), MultiIndex{-1, 0}), Error);
}

TEST(CoeffAt, ConsistentWithExpansion) {
  const CoeffTable t = expand_at_infinity(testing::isolated_closed_form(), 6);
  for (const MultiIndex& x : box_points(MultiIndex{0, 0}, MultiIndex{6, 6})) {
    EXPECT_EQ(coeff_at(testing::isolated_closed_form(), x), t.value_at(x));
  }
}

}  // namespace
}  // namespace ratgf
