#include <gtest/gtest.h>

#include "mapoly/error.hpp"
#include "mapoly/poly.hpp"
#include "oracles.hpp"

using namespace mapoly;

namespace {

PolyQ y(int n, int i) { return PolyQ::variable(n, i); }
PolyQ c(int n, Rat v) { return PolyQ::constant(n, v); }
Monomial mono(std::vector<int> e) { return Monomial::from_exponents(e); }

}  // namespace

TEST(Monomial, GradedOrder) {
  EXPECT_LT(mono({0, 0}), mono({0, 1}));
  EXPECT_LT(mono({0, 1}), mono({1, 0}));
  EXPECT_LT(mono({3, 0}), mono({0, 4}));
  EXPECT_LT(mono({0, 1, 0, 1}), mono({1, 0, 1, 0}));
  EXPECT_EQ(mono({2, 1, 3}).degree(), 6);
  EXPECT_EQ(mono({2, 1, 3}).exponents(3), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(mono({2, 0, 1}).to_string(3), "y1^2*y3");
  EXPECT_EQ(Monomial().to_string(2), "1");
}

TEST(Monomial, Arithmetic) {
  EXPECT_EQ(mono({1, 2}) * mono({3, 0}), mono({4, 2}));
  EXPECT_TRUE(mono({1, 0}).divides(mono({1, 2})));
  EXPECT_FALSE(mono({2, 0}).divides(mono({1, 2})));
  EXPECT_EQ(mono({4, 2}) / mono({1, 2}), mono({3, 0}));
  EXPECT_EQ(Monomial::var(2, 3), mono({0, 0, 3}));
}

TEST(Monomial, Limits) {
  EXPECT_THROW(mono(std::vector<int>(8, 1)), Error);
  EXPECT_THROW(mono({200, 100}), Error);
  EXPECT_NO_THROW(mono({255}));
}

TEST(ParamCoeff, Arithmetic) {
  const ParamCoeff a = ParamCoeff::param(0), b = ParamCoeff::param(1);
  const ParamCoeff e = (a + b) * (a - b);
  EXPECT_EQ(e, a * a - b * b);
  EXPECT_EQ(e.degree(), 2);
  EXPECT_EQ(e.params(), (std::vector<int>{0, 1}));
  EXPECT_TRUE((a - a).is_zero());
  const ParamCoeff l = ParamCoeff(Rat(3)) + a * ParamCoeff(make_rat(1, 2));
  EXPECT_EQ(l.constant(), Rat(3));
  EXPECT_EQ(l.linear_coefficient(0), make_rat(1, 2));
  EXPECT_EQ(l.linear_coefficient(1), Rat(0));
  EXPECT_EQ(e.substitute({{0, Rat(2)}}), ParamCoeff(Rat(4)) - b * b);
  EXPECT_EQ(e.evaluate({Rat(3), Rat(1)}), Rat(8));
}

TEST(SparsePoly, Construction) {
  const PolyQ f(2, {{mono({1, 0}), Rat(2)}, {mono({0, 0}), Rat(1)}, {mono({1, 0}), Rat(-2)}, {mono({0, 1}), Rat(0)}});
  EXPECT_EQ(f, c(2, 1));
  EXPECT_EQ(f.size(), 1U);
  EXPECT_TRUE(PolyQ(2).is_zero());
  EXPECT_EQ(PolyQ(2).degree(), -1);
}

TEST(SparsePoly, MulExamples) {
  EXPECT_EQ((c(2, 1) + y(2, 0)) * (c(2, 1) + y(2, 1)), c(2, 1) + y(2, 0) + y(2, 1) + y(2, 0) * y(2, 1));
  const PolyQ half = c(1, 1) + y(1, 0).scaled(make_rat(1, 2));
  EXPECT_EQ(pow(half, 2), c(1, 1) + y(1, 0) + (y(1, 0) * y(1, 0)).scaled(make_rat(1, 4)));
  const PolyQ s = c(2, 1) + y(2, 0) + y(2, 1);
  const PolyQ t = mul(s, s, 1);
  EXPECT_EQ(t, (c(2, 1) + y(2, 0).scaled(2) + y(2, 1).scaled(2)).truncated(1));
  EXPECT_EQ(t.truncation(), 1);
}

TEST(SparsePoly, TruncationPropagates) {
  const PolyQ s = (c(2, 1) + y(2, 0)).truncated(3);
  const PolyQ f = c(2, 1) + y(2, 1);
  EXPECT_EQ((s * f).truncation(), 3);
  EXPECT_EQ((s + f).truncation(), 3);
  EXPECT_EQ(mul(s, f, 1).truncation(), 1);
  EXPECT_EQ(s.coefficient(mono({1, 0})), Rat(1));
  try {
    s.coefficient(mono({2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncatedEvaluation);
  }
}

TEST(SparsePoly, VariableCountMismatch) {
  try {
    (void)(c(2, 1) + c(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VariableCountMismatch);
  }
}

TEST(SparsePoly, PartialDerivative) {
  const PolyQ f = y(2, 0) * y(2, 0) * y(2, 1);
  EXPECT_EQ(partial_derivative(f, 0), (y(2, 0) * y(2, 1)).scaled(2));
  EXPECT_TRUE(partial_derivative(c(3, 7), 2).is_zero());
  EXPECT_EQ(partial_derivative(f.truncated(4), 1).truncation(), 3);
}

TEST(SparsePoly, HomogeneousPart) {
  const PolyQ f = c(2, 1) + y(2, 0) + y(2, 0) * y(2, 1) + (y(2, 1) * y(2, 1)).scaled(3);
  const auto h = f.homogeneous_part(2);
  ASSERT_EQ(h.size(), 2U);
  EXPECT_EQ(h[0].first, mono({0, 2}));
  EXPECT_EQ(h[0].second, Rat(3));
  EXPECT_EQ(h[1].first, mono({1, 1}));
}

TEST(Determinant, Examples) {
  std::vector<std::vector<PolyQ>> m = {{c(2, 1) + y(2, 0), y(2, 1)}, {PolyQ(2), c(2, 1)}};
  EXPECT_EQ(determinant(m), c(2, 1) + y(2, 0));
  std::vector<std::vector<PolyQ>> id(6, std::vector<PolyQ>(6, PolyQ(1)));
  for (int i = 0; i < 6; ++i) id[i][i] = c(1, 1);
  EXPECT_EQ(determinant(id), c(1, 1));
}

TEST(Determinant, NotSquare) {
  std::vector<std::vector<PolyQ>> m = {{c(1, 1), c(1, 2)}};
  EXPECT_THROW(determinant(m), Error);
}

TEST(Determinant, ParamEntries) {
  const ParamPoly a = ParamPoly::constant(1, ParamCoeff::param(0));
  const ParamPoly b = ParamPoly::variable(1, 0);
  const std::vector<std::vector<ParamPoly>> m = {{a, b}, {b, a}};
  const ParamPoly d = determinant(m);
  EXPECT_EQ(d, mul(a, a) - mul(b, b));
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(c(2, 1) + y(2, 0) + y(2, 1), {Rat(1), Rat(2)}), Rat(4));
  const PolyQ s = pow(c(2, 1) + (y(2, 0) + y(2, 1)).scaled(make_rat(1, 3)), 3);
  EXPECT_EQ(evaluate(s, {Rat(3), Rat(3)}), Rat(27));
  const ParamPoly ay = ParamPoly(1, {{Monomial::var(0), ParamCoeff::param(0)}});
  EXPECT_EQ(evaluate(ay, {Rat(2)}, {make_rat(1, 2)}), Rat(1));
}

TEST(Evaluate, Errors) {
  try {
    evaluate(c(2, 1), {Rat(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VariableCountMismatch);
  }
  try {
    evaluate(c(1, 1).truncated(2), {Rat(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncatedEvaluation);
  }
}

TEST(Coefficient, Examples) {
  EXPECT_EQ((c(2, 1) + (y(2, 0) * y(2, 1)).scaled(2)).coefficient(mono({1, 1})), Rat(2));
  const ParamPoly f(1, {{mono({2}), ParamCoeff::param(3)}});
  EXPECT_EQ(f.coefficient(mono({2})), ParamCoeff::param(3));
  EXPECT_TRUE(f.coefficient(mono({1})).is_zero());
}

TEST(ParamPoly, SubstituteAndConvert) {
  const ParamPoly f(2, {{Monomial(), ParamCoeff(Rat(1))},
                        {mono({1, 1}), ParamCoeff::param(0)},
                        {mono({2, 0}), ParamCoeff::param(1) * ParamCoeff::param(0)}});
  EXPECT_EQ(parameters(f), (std::vector<int>{0, 1}));
  EXPECT_FALSE(to_polyq(f));
  const ParamPoly g = substitute(f, {{0, Rat(2)}});
  EXPECT_EQ(parameters(g), std::vector<int>{1});
  const auto h = to_polyq(substitute(g, {{1, Rat(0)}}));
  ASSERT_TRUE(h);
  EXPECT_EQ(*h, c(2, 1) + (y(2, 0) * y(2, 1)).scaled(2));
  EXPECT_EQ(lift(*h).terms().size(), 2U);
}

TEST(Printing, Polynomials) {
  EXPECT_EQ(to_string(c(2, 1) + y(2, 0).scaled(make_rat(-1, 2))), "1 - 1/2*y1");
  EXPECT_EQ(to_string(PolyQ(1)), "0");
}

TEST(Oracle, NaiveProductMatches) {
  oracle::Random rnd(7);
  for (int i = 0; i < 200; ++i) {
    const PolyQ f = rnd.poly(3, 5, 8), g = rnd.poly(3, 5, 8);
    EXPECT_EQ(oracle::dense(f * g), oracle::mul(oracle::dense(f), oracle::dense(g)));
  }
}
