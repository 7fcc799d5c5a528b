#include <gtest/gtest.h>

#include "properties.hpp"

TEST(Properties, RingLaws) {
  const auto r = props::ring_laws(1000, 101);
  EXPECT_EQ(r.cases, 1000);
  EXPECT_EQ(r.failures, 0) << r.first;
}

TEST(Properties, TruncationConsistency) {
  const auto r = props::truncation_consistency(1000, 202);
  EXPECT_EQ(r.cases, 1000);
  EXPECT_EQ(r.failures, 0) << r.first;
}

TEST(Properties, DeterminantMatchesCofactorExpansion) {
  const auto r = props::determinant_vs_cofactor(1000, 303);
  EXPECT_EQ(r.cases, 1000);
  EXPECT_EQ(r.failures, 0) << r.first;
}

TEST(Properties, EvaluateIsAHomomorphism) {
  const auto r = props::evaluate_homomorphism(1000, 404);
  EXPECT_EQ(r.cases, 1000);
  EXPECT_EQ(r.failures, 0) << r.first;
}

TEST(Properties, SupportPolytopeRoundTrip) {
  const auto r = props::support_round_trip(1000, 505);
  EXPECT_EQ(r.cases, 1000);
  EXPECT_EQ(r.failures, 0) << r.first;
}
