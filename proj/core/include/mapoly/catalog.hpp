#pragma once

#include <string>
#include <vector>

#include "mapoly/obstruction.hpp"
#include "mapoly/polytope.hpp"

namespace mapoly {

/// A smooth reflexive polytope with barycenter 0 together with the k/H
/// values recorded for it. (table, row) locate the entry in the source
/// tables; table 1 is the simplex family.
struct CatalogEntry {
  std::string id;
  int dim = 0;
  int table = 0;
  int row = 0;
  IntMatrix a;
  IntVector expected_k;
  IntMatrix expected_h;
  VerdictKind expected_verdict = VerdictKind::Inconclusive;

  bool is_simplex() const noexcept { return table == 1; }
  /// vertices_of(a, 1).
  Polytope polytope() const;
};

/// The n-simplex followed by the undecomposable entries of dimension n.
/// Throws UnsupportedDimension outside 1..6.
std::vector<CatalogEntry> builtin_catalog(int n);

/// Every entry of dimension 1..6.
std::vector<CatalogEntry> full_catalog();

}  // namespace mapoly
