#include <gtest/gtest.h>

#include "mapoly/ansatz.hpp"
#include "mapoly/error.hpp"
#include "mapoly/ma_verifier.hpp"
#include "oracles.hpp"
#include "shapes.hpp"

using namespace mapoly;

namespace {

PolyQ square_solution() { return product_solution(simplex_solution(1), simplex_solution(1)); }

// (P P_ab - P_a P_b) y_a + P P_a delta_ab, written out with the oracle types.
oracle::Dense entry_by_hand(const PolyQ& p, int a, int b) {
  const int n = p.nvars();
  const oracle::Dense P = oracle::dense(p), Pa = oracle::dense(partial_derivative(p, a)),
                     Pb = oracle::dense(partial_derivative(p, b)),
                     Pab = oracle::dense(partial_derivative(partial_derivative(p, a), b));
  oracle::Dense ya;
  std::vector<int> e(n, 0);
  e[a] = 1;
  ya[e] = 1;
  oracle::Dense m = oracle::mul(oracle::sub(oracle::mul(P, Pab), oracle::mul(Pa, Pb)), ya);
  if (a == b) m = oracle::add(m, oracle::mul(P, Pa));
  return m;
}

}  // namespace

TEST(MAMatrix, OneDimensional) {
  const PolyQ p = simplex_solution(1);
  const MAMatrix m = ma_matrix(lift(p));
  ASSERT_EQ(m.entries.size(), 1U);
  EXPECT_EQ(to_polyq(m.entries[0][0]), p);
}

TEST(MAMatrix, EntriesMatchDefinition) {
  oracle::Random rnd(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rnd.uniform(2, 3);
    PolyQ p = rnd.poly(n, 3, 6) + PolyQ::constant(n, 1);
    if (sgn(p.coefficient(Monomial())) == 0) continue;
    const MAMatrix m = ma_matrix(lift(p));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) EXPECT_EQ(oracle::dense(*to_polyq(m.entries[a][b])), entry_by_hand(p, a, b));
  }
}

TEST(MAMatrix, IdentityAtOrigin) {
  const Polytope hex = shapes::hexagon();
  const AnsatzTemplate t = build_template(hex, kh_feasible(hex)[0]);
  const MAMatrix m = ma_matrix(t.polynomial());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const ParamCoeff c = m.entries[a][b].coefficient(Monomial());
      EXPECT_EQ(c, ParamCoeff(Rat(a == b ? 1 : 0)));
    }
  EXPECT_EQ(determinant(m.entries).coefficient(Monomial()), ParamCoeff(Rat(1)));
}

TEST(MAMatrix, NotSymmetric) {
  const MAMatrix m = ma_matrix(lift(simplex_solution(2)));
  EXPECT_NE(m.entries[0][1], m.entries[1][0]);
}

TEST(MAMatrix, DegreeBookkeeping) {
  const MAMatrix m = ma_matrix(lift(simplex_solution(2)));
  for (const auto& row : m.entries)
    for (const auto& e : row) EXPECT_LE(e.degree(), 6);
}

TEST(MAMatrix, Truncated) {
  const MAMatrix full = ma_matrix(lift(simplex_solution(3)));
  const MAMatrix cut = ma_matrix(lift(simplex_solution(3)), 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(cut.entries[a][b].truncation(), 2);
      EXPECT_EQ(cut.entries[a][b], full.entries[a][b].truncated(2));
    }
}

TEST(MAMatrix, ZeroConstantTerm) {
  try {
    ma_matrix(lift(PolyQ::variable(2, 0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroConstantTerm);
  }
}

TEST(Residual, KnownSolutions) {
  EXPECT_TRUE(residual(simplex_solution(1)).is_zero());
  EXPECT_TRUE(residual(square_solution()).is_zero());
  EXPECT_TRUE(residual(simplex_solution(2)).is_zero());
  EXPECT_FALSE(residual(PolyQ::constant(2, 1) + PolyQ::variable(2, 0) + PolyQ::variable(2, 1)).is_zero());
}

TEST(Residual, HexagonMixedCoefficient) {
  const Polytope hex = shapes::hexagon();
  const AnsatzTemplate t = build_template(hex, kh_feasible(hex)[0]);
  const ParamCoeff c = residual(t.polynomial(), 2).coefficient(Monomial::from_exponents(std::vector<int>{1, 1}));
  ASSERT_TRUE(c.is_constant());
  EXPECT_NE(c.constant(), Rat(0));
}

TEST(Verify, SymbolicSimplices) {
  for (int n = 1; n <= 3; ++n) {
    const VerifyReport r = verify_solution(simplex_solution(n));
    EXPECT_TRUE(r.solution) << n;
    EXPECT_EQ(r.mode, VerifyMode::Symbolic);
    EXPECT_FALSE(r.counterexample);
  }
}

TEST(Verify, SampledSimplices) {
  for (int n = 4; n <= 5; ++n) {
    VerifyOptions o;
    o.mode = VerifyMode::Sampled;
    const VerifyReport r = verify_solution(simplex_solution(n), o);
    EXPECT_TRUE(r.solution) << n;
    EXPECT_EQ(r.trials, 20);
    EXPECT_EQ(r.seed, 1U);
    EXPECT_EQ(r.degree_bound, (2 * n - 1) * (n + 1));
  }
}

TEST(Verify, ProductIsNotASolution) {
  const PolyQ p = (PolyQ::constant(2, 1) + PolyQ::variable(2, 0)) * (PolyQ::constant(2, 1) + PolyQ::variable(2, 1));
  const VerifyReport sym = verify_solution(p);
  EXPECT_FALSE(sym.solution);
  VerifyOptions o;
  o.mode = VerifyMode::Sampled;
  const VerifyReport r = verify_solution(p, o);
  EXPECT_FALSE(r.solution);
  ASSERT_TRUE(r.counterexample);
  EXPECT_NE(evaluate(residual(p), *r.counterexample), Rat(0));
  EXPECT_NE(evaluate(residual(p), {Rat(1), Rat(1)}), Rat(0));
}

TEST(Verify, Errors) {
  try {
    verify_solution(PolyQ::variable(1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroConstantTerm);
  }
  VerifyOptions o;
  o.mode = VerifyMode::Sampled;
  o.trials = 0;
  EXPECT_THROW(verify_solution(simplex_solution(1), o), Error);
}

TEST(Verify, SamplePointsReproducible) {
  EXPECT_EQ(sample_point(3, 1, 0), sample_point(3, 1, 0));
  EXPECT_NE(sample_point(3, 1, 0), sample_point(3, 1, 1));
  EXPECT_NE(sample_point(3, 1, 0), sample_point(3, 2, 0));
  const Rat lo = 1, hi = Rat(Int(1) << 32);
  for (int t = 0; t < 50; ++t)
    for (const auto& v : sample_point(4, 9, t)) {
      EXPECT_TRUE(is_integer(v));
      EXPECT_GE(v, lo);
      EXPECT_LE(v, hi);
    }
}

TEST(Verify, ProductClosureSymbolic) {
  const PolyQ s1 = simplex_solution(1), s2 = simplex_solution(2);
  EXPECT_TRUE(verify_solution(product_solution(s1, s1)).solution);
  EXPECT_TRUE(verify_solution(product_solution(s2, s1)).solution);
  EXPECT_TRUE(verify_solution(product_solution(product_solution(s1, s1), s1)).solution);
}

TEST(SupportPolytope, Examples) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(support_polytope(simplex_solution(n)), shapes::simplex(n)) << n;
  EXPECT_EQ(support_polytope(square_solution()), shapes::cube(2));
  const PolyQ tri = PolyQ::constant(2, 1) + PolyQ::variable(2, 0) + PolyQ::variable(2, 1);
  EXPECT_EQ(support_polytope(tri).vertices(), shapes::points({{-1, -1}, {-1, 0}, {0, -1}}));
  try {
    support_polytope(PolyQ::constant(1, 1) - PolyQ::variable(1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeCoefficient);
  }
}

TEST(SupportPolytope, SolutionsAreReflexiveDelzantBalanced) {
  const PolyQ s1 = simplex_solution(1), s2 = simplex_solution(2), s3 = simplex_solution(3);
  for (const PolyQ& p : {s1, s2, s3, product_solution(s1, s1), product_solution(s2, s1), product_solution(s2, s2),
                         product_solution(s3, s1)}) {
    const Polytope q = support_polytope(p);
    EXPECT_TRUE(is_reflexive(q));
    EXPECT_TRUE(is_delzant(q));
    EXPECT_EQ(barycenter(q), RatVector(p.nvars(), Rat(0)));
  }
}

TEST(SupportPolytope, AxisLengthsAreAxisDegrees) {
  const PolyQ s1 = simplex_solution(1), s2 = simplex_solution(2);
  for (const PolyQ& p : {s1, s2, simplex_solution(3), product_solution(s2, s1), product_solution(s1, s1)}) {
    const IntVector k = axis_lengths(support_polytope(p));
    for (int i = 0; i < p.nvars(); ++i) {
      int deg = 0;
      for (const auto& [m, c] : p.terms())
        if (m.degree() == m.exponent(i)) deg = std::max(deg, m.exponent(i));
      EXPECT_EQ(k[i], deg);
    }
  }
}
