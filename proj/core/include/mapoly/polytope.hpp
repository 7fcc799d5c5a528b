#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mapoly/rational.hpp"

namespace mapoly {

using LatticePoint = IntVector;

/// {y : A y <= b}. Rows are kept primitive (gcd of each A row is 1) with b
/// rescaled accordingly, sorted, and free of duplicates.
class HalfspaceSystem {
 public:
  HalfspaceSystem() = default;
  HalfspaceSystem(int dim, IntMatrix a, RatVector b, bool irredundant = false);

  /// The reflexive normalization A y <= 1.
  static HalfspaceSystem unit_rhs(int dim, IntMatrix a);

  int dim() const noexcept { return dim_; }
  std::size_t rows() const noexcept { return a_.size(); }
  const IntMatrix& a() const noexcept { return a_; }
  const RatVector& b() const noexcept { return b_; }
  bool irredundant() const noexcept { return irredundant_; }

  bool contains(const RatVector& y) const;
  bool contains(const LatticePoint& p) const;
  /// a_i . y - b_i, exact.
  Rat slack(std::size_t row, const RatVector& y) const;

  friend bool operator==(const HalfspaceSystem&, const HalfspaceSystem&) = default;

 private:
  int dim_ = 0;
  IntMatrix a_;
  RatVector b_;
  bool irredundant_ = false;
};

/// A bounded full-dimensional polytope with both descriptions materialized.
/// Vertices are unique and sorted lexicographically; facets are irredundant.
/// Immutable once built.
class Polytope {
 public:
  int dim() const noexcept { return dim_; }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  const HalfspaceSystem& facets() const noexcept { return facets_; }
  /// Integer points of the polytope in lexicographic order.
  const std::vector<LatticePoint>& lattice_points() const noexcept { return lattice_points_; }
  /// max over lattice points p of sum(p_i + 1).
  std::int64_t degree_bound() const noexcept { return degree_bound_; }
  /// Indices of the facets tight at each vertex.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const noexcept { return vertex_facets_; }
  bool is_lattice() const;

  std::optional<std::size_t> find_vertex(const RatVector& v) const;

  friend bool operator==(const Polytope& x, const Polytope& y) {
    return x.vertices_ == y.vertices_ && x.facets_ == y.facets_;
  }

  friend Polytope vertices_of(const HalfspaceSystem& h);
  friend Polytope facets_of(std::vector<RatVector> points);

 private:
  Polytope(int dim, std::vector<RatVector> vertices, HalfspaceSystem facets);

  int dim_ = 0;
  std::vector<RatVector> vertices_;
  HalfspaceSystem facets_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  std::vector<LatticePoint> lattice_points_;
  std::int64_t degree_bound_ = 0;
};

/// Vertex enumeration by intersecting every n-subset of rows.
/// Throws UnboundedSystem or EmptyOrLowerDimensional.
Polytope vertices_of(const HalfspaceSystem& h);

/// Convex hull of a point set (non-extreme points are dropped).
/// Throws DegenerateInput when the points do not span affinely.
Polytope facets_of(std::vector<RatVector> points);
Polytope facets_of(const std::vector<LatticePoint>& points);

const std::vector<LatticePoint>& lattice_points(const Polytope& p);

/// Lattice points satisfying every facet inequality strictly.
std::vector<LatticePoint> interior_lattice_points(const Polytope& p);

bool is_reflexive(const Polytope& p);
bool is_delzant(const Polytope& p);

/// Vertex adjacency of the edge graph.
std::vector<std::vector<std::size_t>> edge_graph(const Polytope& p);

/// Exact centroid via a pulling triangulation from the lexicographically least vertex.
RatVector barycenter(const Polytope& p);

/// Finest partition of the coordinates (0-based) such that every facet
/// normal is supported in a single block. Throws NotReflexive.
std::vector<std::vector<int>> decompose(const Polytope& p);

Polytope cartesian_product(const Polytope& p, const Polytope& q);

/// U with |det U| = 1 mapping the vertices of p onto those of q, where
/// U.v = w + offset for matched vertices v of p and w of q.
struct UnimodularMap {
  IntMatrix u;
  IntVector offset;
};

std::optional<UnimodularMap> unimodular_equivalent(const Polytope& p, const Polytope& q);

struct PolygonCensus {
  std::vector<Polytope> classes;      ///< smooth reflexive classes, one representative each
  std::vector<Polytope> barycentric;  ///< the subset with barycenter 0
  std::size_t polygons_scanned = 0;   ///< polygons with 0 as unique interior point
};

/// Brute force over all convex lattice polygons with vertices in [-4,4]^2
/// having 0 as their only interior lattice point.
PolygonCensus enumerate_smooth_reflexive_2d();

namespace detail {
/// Facets of conv(points) by double description on the polar cone.
/// Rows are (A row primitive, b) with a.x <= b.
HalfspaceSystem hull_facets(const std::vector<RatVector>& points);
int affine_rank(const std::vector<RatVector>& points);
}  // namespace detail

}  // namespace mapoly
