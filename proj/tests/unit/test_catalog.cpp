#include <gtest/gtest.h>

#include <set>

#include "mapoly/catalog.hpp"
#include "mapoly/error.hpp"
#include "shapes.hpp"

using namespace mapoly;

TEST(Catalog, EntryCounts) {
  const std::vector<std::size_t> sizes = {1, 2, 2, 4, 7, 13};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(builtin_catalog(n).size(), sizes[n - 1]) << n;
  EXPECT_EQ(full_catalog().size(), 29U);
}

TEST(Catalog, SimplexFirst) {
  for (int n = 1; n <= 6; ++n) {
    const auto c = builtin_catalog(n);
    EXPECT_EQ(c[0].id, "simplex-" + std::to_string(n));
    EXPECT_TRUE(c[0].is_simplex());
    EXPECT_EQ(c[0].polytope(), shapes::simplex(n));
    EXPECT_EQ(c[0].expected_verdict, VerdictKind::Solution);
    for (std::size_t i = 1; i < c.size(); ++i) {
      EXPECT_FALSE(c[i].is_simplex());
      EXPECT_EQ(c[i].id, "T" + std::to_string(n) + "." + std::to_string(i));
      EXPECT_EQ(c[i].table, n);
      EXPECT_EQ(c[i].row, static_cast<int>(i));
    }
  }
}

TEST(Catalog, UniqueIdsAndShapes) {
  std::set<std::string> ids;
  for (const auto& e : full_catalog()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    for (const auto& row : e.a) EXPECT_EQ(static_cast<int>(row.size()), e.dim) << e.id;
    EXPECT_EQ(static_cast<int>(e.expected_k.size()), e.dim);
    EXPECT_EQ(static_cast<int>(e.expected_h.size()), e.dim);
    // the base facets -e_i lead every matrix
    for (int i = 0; i < e.dim; ++i) {
      IntVector r(e.dim, 0);
      r[i] = -1;
      EXPECT_EQ(e.a[i], r) << e.id;
    }
  }
}

TEST(Catalog, Hexagon) {
  const auto c = builtin_catalog(2);
  EXPECT_EQ(c[1].polytope(), shapes::hexagon());
  EXPECT_EQ(c[1].expected_k, (IntVector{1, 1}));
}

TEST(Catalog, PairwiseInequivalent) {
  for (int n = 2; n <= 4; ++n) {
    const auto c = builtin_catalog(n);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        EXPECT_FALSE(unimodular_equivalent(c[i].polytope(), c[j].polytope())) << c[i].id << " " << c[j].id;
  }
}

TEST(Catalog, UnsupportedDimension) {
  for (int n : {0, 7, -1}) {
    try {
      builtin_catalog(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
    }
  }
}
