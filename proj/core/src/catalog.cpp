#include "mapoly/catalog.hpp"

#include "mapoly/error.hpp"

namespace mapoly {
namespace {

struct Fixture {
  int dim;
  int row;
  IntMatrix a;
  IntVector k;
  IntMatrix h;
};

// Facet matrices A (rows a with <a, y> <= 1), edge lengths k at the vertex -1
// and line lengths H, as tabulated.
const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> data = {
    {2, 1, {{-1, 0}, {0, -1}, {1, -1}, {-1, 1}, {1, 0}, {0, 1}},
     {1, 1},
     {{0, 2}, {2, 0}}},
    {3, 1, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 0, -1}, {0, 0, 1}, {0, 1, 1}},
     {1, 3, 2},
     {{0, 1, 2}, {3, 0, 2}, {2, 2, 0}}},
    {4, 1, {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
     {1, 1, 1, 1},
     {{0, 0, 2, 2}, {0, 0, 2, 2}, {2, 2, 0, 0}, {2, 2, 0, 0}}},
    {4, 2, {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 1, -1, -1}, {0, -1, 1, 0}, {-1, 0, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}},
     {1, 1, 1, 1},
     {{0, 0, 2, 2}, {0, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 1, 0}}},
    {4, 3, {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, -1, 0, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}},
     {1, 1, 3, 1},
     {{0, 1, 1, 2}, {1, 0, 1, 2}, {3, 3, 0, 2}, {1, 2, 1, 0}}},
    {5, 1, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {1, 1, 0, 0, -2}, {0, 0, 0, 0, 1}, {0, 0, 1, 1, 2}},
     {1, 1, 5, 5, 2},
     {{0, 0, 1, 1, 3}, {0, 0, 1, 1, 3}, {5, 5, 0, 4, 3}, {5, 5, 4, 0, 3}, {2, 2, 2, 2, 0}}},
    {5, 2, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {1, 1, 0, -1, -1}, {-1, -1, 0, 1, 1}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 1}},
     {1, 1, 4, 1, 1},
     {{0, 0, 1, 2, 2}, {0, 0, 1, 2, 2}, {4, 4, 0, 3, 3}, {2, 2, 1, 0, 0}, {2, 2, 1, 0, 0}}},
    {5, 3, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {1, 0, 0, 0, -1}, {0, 1, 0, 0, -1}, {0, -1, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, -1, 1, 0, 1}, {0, 1, 0, 1, 0}},
     {1, 1, 2, 3, 1},
     {{0, 1, 1, 1, 2}, {1, 0, 1, 1, 2}, {2, 3, 0, 2, 1}, {3, 2, 3, 0, 3}, {1, 2, 1, 1, 0}}},
    {5, 4, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {1, 0, 0, 0, -1}, {0, 1, 0, 0, -1}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}},
     {1, 1, 3, 3, 2},
     {{0, 1, 1, 1, 2}, {1, 0, 1, 1, 2}, {3, 3, 0, 3, 2}, {3, 3, 3, 0, 2}, {2, 2, 2, 2, 0}}},
    {5, 5, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {1, 0, 0, 0, -1}, {0, 1, 0, -1, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 1, 1}},
     {1, 1, 4, 3, 3},
     {{0, 1, 1, 1, 2}, {1, 0, 1, 2, 1}, {4, 4, 0, 3, 3}, {3, 3, 3, 0, 2}, {3, 3, 3, 2, 0}}},
    {5, 6, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {1, 1, 0, 0, -1}, {0, 0, 0, 0, 1}, {0, 0, 1, 1, 1}},
     {2, 2, 4, 4, 2},
     {{0, 1, 2, 2, 3}, {1, 0, 2, 2, 3}, {4, 4, 0, 3, 3}, {4, 4, 3, 0, 3}, {2, 2, 2, 2, 0}}},
    {6, 1, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 1, -1, -1, -1}, {-1, -1, -1, 1, 1, 1}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}},
     {1, 1, 1, 1, 1, 1},
     {{0, 0, 0, 2, 2, 2}, {0, 0, 0, 2, 2, 2}, {0, 0, 0, 2, 2, 2}, {2, 2, 2, 0, 0, 0}, {2, 2, 2, 0, 0, 0}, {2, 2, 2, 0, 0, 0}}},
    {6, 2, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 1, -1, -1, -1}, {0, -1, -1, 1, 1, 0}, {0, 1, 1, 0, -1, 0}, {-1, 0, -1, 1, 1, 1}, {1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1}},
     {1, 1, 1, 1, 1, 2},
     {{0, 0, 0, 2, 2, 2}, {0, 0, 0, 2, 2, 2}, {0, 0, 0, 2, 2, 2}, {1, 2, 2, 0, 0, 1}, {1, 2, 2, 0, 0, 1}, {3, 2, 3, 1, 1, 0}}},
    {6, 3, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 1, -1, -1, -1}, {0, 0, -1, 1, 0, 0}, {0, -1, 0, 0, 1, 0}, {-1, 0, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}},
     {1, 1, 1, 1, 1, 1},
     {{0, 0, 0, 2, 2, 2}, {0, 0, 0, 2, 2, 2}, {0, 0, 0, 2, 2, 2}, {1, 1, 2, 0, 1, 1}, {1, 2, 1, 1, 0, 1}, {2, 1, 1, 1, 1, 0}}},
    {6, 4, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 0, 0, 0, -2}, {0, 0, 1, 0, 0, -1}, {0, 0, -1, 0, 0, 1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 2}},
     {1, 1, 1, 5, 5, 1},
     {{0, 0, 1, 1, 1, 3}, {0, 0, 1, 1, 1, 3}, {1, 1, 0, 1, 1, 2}, {5, 5, 5, 0, 4, 3}, {5, 5, 5, 4, 0, 3}, {1, 1, 2, 1, 1, 0}}},
    {6, 5, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 0, 0, -1, -1}, {0, -1, 1, -1, 1, 0}, {-1, 0, -1, 1, 0, 1}, {1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}},
     {1, 1, 1, 1, 1, 1},
     {{0, 0, 1, 1, 2, 2}, {0, 0, 1, 1, 2, 2}, {1, 2, 0, 2, 0, 1}, {2, 1, 2, 0, 1, 0}, {1, 2, 0, 2, 0, 1}, {2, 1, 2, 0, 1, 0}}},
    {6, 6, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 0, 0, -1, -1}, {0, 0, 1, 0, 0, -1}, {-1, -1, 0, 0, 1, 1}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 1}},
     {1, 1, 1, 3, 1, 1},
     {{0, 0, 1, 1, 2, 2}, {0, 0, 1, 1, 2, 2}, {1, 1, 0, 1, 1, 2}, {3, 3, 3, 0, 3, 2}, {2, 2, 1, 1, 0, 0}, {2, 2, 1, 1, 0, 0}}},
    {6, 7, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 0, 0, -1, -1}, {-1, -1, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}},
     {1, 1, 4, 4, 1, 1},
     {{0, 0, 1, 1, 2, 2}, {0, 0, 1, 1, 2, 2}, {3, 3, 0, 4, 4, 4}, {4, 4, 4, 0, 3, 3}, {2, 2, 1, 1, 0, 0}, {2, 2, 1, 1, 0, 0}}},
    {6, 8, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 0, 0, -1, -1}, {0, 0, 0, 0, 1, -1}, {0, 0, 0, 0, -1, 1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 1, 1, 1, 1}},
     {1, 1, 5, 5, 1, 1},
     {{0, 0, 1, 1, 2, 2}, {0, 0, 1, 1, 2, 2}, {5, 5, 0, 4, 4, 4}, {5, 5, 4, 0, 4, 4}, {1, 1, 1, 1, 0, 2}, {1, 1, 1, 1, 2, 0}}},
    {6, 9, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 1, 0, 0, -1, -1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 1, 1, 1, 1}},
     {1, 1, 5, 5, 2, 2},
     {{0, 0, 1, 1, 2, 2}, {0, 0, 1, 1, 2, 2}, {5, 5, 0, 4, 4, 4}, {5, 5, 4, 0, 4, 4}, {2, 2, 2, 2, 0, 2}, {2, 2, 2, 2, 2, 0}}},
    {6, 10, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 0, 0, 0, 0, -1}, {0, 1, 0, 0, 0, -1}, {0, 0, 1, 0, 0, -1}, {0, 0, -1, 0, 0, 1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}},
     {1, 1, 1, 3, 3, 1},
     {{0, 1, 1, 1, 1, 2}, {1, 0, 1, 1, 1, 2}, {1, 1, 0, 1, 1, 2}, {3, 3, 3, 0, 3, 2}, {3, 3, 3, 3, 0, 2}, {1, 1, 2, 1, 1, 0}}},
    {6, 11, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 0, 0, 0, 0, -1}, {0, 1, 0, 0, 0, -1}, {0, -1, 1, 0, 0, 0}, {0, -1, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}},
     {1, 1, 1, 3, 3, 1},
     {{0, 1, 1, 1, 1, 2}, {1, 0, 1, 1, 1, 2}, {1, 2, 0, 1, 1, 1}, {3, 2, 3, 0, 3, 3}, {3, 3, 3, 3, 0, 2}, {1, 2, 1, 1, 1, 0}}},
    {6, 12, {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {1, 0, 0, 0, 0, -1}, {-1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, -1}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 1}},
     {1, 2, 2, 4, 4, 1},
     {{0, 1, 1, 1, 1, 2}, {2, 0, 1, 2, 2, 3}, {2, 1, 0, 2, 2, 3}, {4, 4, 4, 0, 3, 3}, {4, 4, 4, 3, 0, 3}, {2, 1, 1, 1, 1, 0}}},
  };
  return data;
}

VerdictKind expected_for(int dim, int row) {
  switch (dim) {
    case 2: return VerdictKind::CoefficientObstruction;
    case 4:
    case 6: return row == 1 ? VerdictKind::CoefficientObstruction : VerdictKind::RelationObstruction;
    default: return VerdictKind::RelationObstruction;
  }
}

CatalogEntry simplex_entry(int n) {
  CatalogEntry e;
  e.id = "simplex-" + std::to_string(n);
  e.dim = n;
  e.table = 1;
  e.row = 1;
  for (int i = 0; i < n; ++i) {
    IntVector r(n, 0);
    r[i] = -1;
    e.a.push_back(r);
  }
  e.a.push_back(IntVector(n, 1));
  e.expected_k.assign(n, n + 1);
  e.expected_h.assign(n, IntVector(n, n));
  for (int i = 0; i < n; ++i) e.expected_h[i][i] = 0;
  e.expected_verdict = VerdictKind::Solution;
  return e;
}

}  // namespace

Polytope CatalogEntry::polytope() const {
  return vertices_of(HalfspaceSystem::unit_rhs(dim, a));
}

std::vector<CatalogEntry> builtin_catalog(int n) {
  if (n < 1 || n > 6) throw Error(ErrorCode::UnsupportedDimension, "catalog covers dimensions 1..6, got " + std::to_string(n));
  std::vector<CatalogEntry> out{simplex_entry(n)};
  for (const Fixture& f : fixtures()) {
    if (f.dim != n) continue;
    CatalogEntry e;
    e.id = "T" + std::to_string(n) + "." + std::to_string(f.row);
    e.dim = n;
    e.table = n;
    e.row = f.row;
    e.a = f.a;
    e.expected_k = f.k;
    e.expected_h = f.h;
    e.expected_verdict = expected_for(n, f.row);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 6; ++n) {
    auto part = builtin_catalog(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace mapoly
