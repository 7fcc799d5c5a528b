#include "mapoly/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mapoly/error.hpp"

namespace mapoly {

namespace {

std::int64_t gcd_row(const IntVector& row) {
  std::int64_t g = 0;
  for (auto x : row) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Calls f(subset) for every k-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatMatrix to_rat_rows(const IntMatrix& a, const std::vector<std::size_t>& rows) {
  RatMatrix out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(to_rat(a[r]));
  return out;
}

// Some nonzero d with A d <= 0, found among the extreme rays of the
// recession cone (each is cut out by n-1 independent tight rows).
bool has_recession_direction(const HalfspaceSystem& h) {
  const std::size_t n = static_cast<std::size_t>(h.dim());
  const auto& a = h.a();
  if (rank(to_rat_rows(a, [&] {
        std::vector<std::size_t> all(a.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
      }())) < static_cast<int>(n))
    return true;
  if (n == 1) return false;
  bool found = false;
  for_each_subset(a.size(), n - 1, [&](const std::vector<std::size_t>& rows) {
    if (found) return;
    RatMatrix sub = to_rat_rows(a, rows);
    if (rank(sub) != static_cast<int>(n - 1)) return;
    // Generalized cross product spans the kernel.
    RatVector dir(n);
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix minor;
      for (const auto& row : sub) {
        RatVector r;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) r.push_back(row[k]);
        minor.push_back(std::move(r));
      }
      dir[j] = determinant(std::move(minor));
      if (j % 2 == 1) dir[j] = -dir[j];
    }
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& row : a) {
        Rat s = 0;
        for (std::size_t k = 0; k < n; ++k) s += dir[k] * row[k];
        if (sign * s > 0) {
          ok = false;
          break;
        }
      }
      if (ok) found = true;
    }
  });
  return found;
}

std::int64_t floor64(const Rat& r) { return to_int64(floor(r)); }

}  // namespace

// ---------------------------------------------------------------------------
// HalfspaceSystem

HalfspaceSystem::HalfspaceSystem(int dim, IntMatrix a, RatVector b, bool irredundant)
    : dim_(dim), irredundant_(irredundant) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "A and b have different row counts");
  std::vector<std::pair<IntVector, Rat>> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != static_cast<std::size_t>(dim))
      throw Error(ErrorCode::DimensionMismatch, "row length differs from dimension");
    auto g = gcd_row(a[i]);
    Rat rhs = b[i];
    if (g > 1) {
      for (auto& x : a[i]) x /= g;
      rhs /= static_cast<long>(g);
    }
    rows.emplace_back(std::move(a[i]), std::move(rhs));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (auto& [row, rhs] : rows) {
    a_.push_back(std::move(row));
    b_.push_back(std::move(rhs));
  }
}

HalfspaceSystem HalfspaceSystem::unit_rhs(int dim, IntMatrix a) {
  RatVector b(a.size(), Rat(1));
  return HalfspaceSystem(dim, std::move(a), std::move(b));
}

Rat HalfspaceSystem::slack(std::size_t row, const RatVector& y) const {
  Rat s = 0;
  for (int k = 0; k < dim_; ++k) s += y[k] * a_[row][k];
  return s - b_[row];
}

bool HalfspaceSystem::contains(const RatVector& y) const {
  for (std::size_t r = 0; r < a_.size(); ++r)
    if (slack(r, y) > 0) return false;
  return true;
}

bool HalfspaceSystem::contains(const LatticePoint& p) const { return contains(to_rat(p)); }

// ---------------------------------------------------------------------------
// Polytope

Polytope::Polytope(int dim, std::vector<RatVector> vertices, HalfspaceSystem facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertex_facets_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t r = 0; r < facets_.rows(); ++r)
      if (facets_.slack(r, vertices_[v]) == 0) vertex_facets_[v].push_back(r);

  // Lattice points: scan the bounding box with integer arithmetic.
  const std::size_t n = static_cast<std::size_t>(dim_);
  IntVector lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rat mn = vertices_[0][k], mx = vertices_[0][k];
    for (const auto& v : vertices_) {
      if (v[k] < mn) mn = v[k];
      if (v[k] > mx) mx = v[k];
    }
    lo[k] = to_int64(ceil(mn));
    hi[k] = to_int64(floor(mx));
    if (lo[k] > hi[k]) return;
  }
  IntVector bounds(facets_.rows());
  for (std::size_t r = 0; r < facets_.rows(); ++r) bounds[r] = floor64(facets_.b()[r]);
  LatticePoint p = lo;
  degree_bound_ = 0;
  bool first = true;
  while (true) {
    bool inside = true;
    for (std::size_t r = 0; r < facets_.rows() && inside; ++r) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += facets_.a()[r][k] * p[k];
      if (s > bounds[r]) inside = false;
    }
    if (inside) {
      lattice_points_.push_back(p);
      std::int64_t deg = 0;
      for (auto x : p) deg += x + 1;
      if (first || deg > degree_bound_) degree_bound_ = deg;
      first = false;
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (p[k] < hi[k]) {
        ++p[k];
        for (std::size_t j = k + 1; j < n; ++j) p[j] = lo[j];
        break;
      }
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& x : v)
      if (!is_integer(x)) return false;
  return true;
}

std::optional<std::size_t> Polytope::find_vertex(const RatVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it != vertices_.end() && *it == v) return static_cast<std::size_t>(it - vertices_.begin());
  return std::nullopt;
}

Polytope facets_of(std::vector<RatVector> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "no points");
  const int n = static_cast<int>(points[0].size());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (detail::affine_rank(points) < n) throw Error(ErrorCode::DegenerateInput, "points are not full-dimensional");
  HalfspaceSystem h = detail::hull_facets(points);
  std::vector<RatVector> vertices;
  for (const auto& p : points) {
    std::vector<std::size_t> tight;
    for (std::size_t r = 0; r < h.rows(); ++r)
      if (h.slack(r, p) == 0) tight.push_back(r);
    if (static_cast<int>(tight.size()) >= n && rank(to_rat_rows(h.a(), tight)) == n) vertices.push_back(p);
  }
  return Polytope(n, std::move(vertices), std::move(h));
}

Polytope facets_of(const std::vector<LatticePoint>& points) {
  std::vector<RatVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));
  return facets_of(std::move(pts));
}

Polytope vertices_of(const HalfspaceSystem& h) {
  const std::size_t n = static_cast<std::size_t>(h.dim());
  if (n == 0) throw Error(ErrorCode::EmptyOrLowerDimensional, "dimension 0");
  if (has_recession_direction(h)) throw Error(ErrorCode::UnboundedSystem, "system admits a recession direction");
  std::set<RatVector> found;
  for_each_subset(h.rows(), n, [&](const std::vector<std::size_t>& rows) {
    RatMatrix a = to_rat_rows(h.a(), rows);
    RatVector b;
    for (auto r : rows) b.push_back(h.b()[r]);
    RatVector x;
    if (!solve(std::move(a), std::move(b), x)) return;
    if (h.contains(x)) found.insert(std::move(x));
  });
  std::vector<RatVector> vertices(found.begin(), found.end());
  if (vertices.empty() || detail::affine_rank(vertices) < static_cast<int>(n))
    throw Error(ErrorCode::EmptyOrLowerDimensional, "system is empty or not full-dimensional");
  Polytope p = facets_of(std::move(vertices));
  // Every facet of the hull must be one of the input rows.
  for (std::size_t r = 0; r < p.facets().rows(); ++r) {
    bool present = false;
    for (std::size_t s = 0; s < h.rows() && !present; ++s)
      present = h.a()[s] == p.facets().a()[r] && h.b()[s] == p.facets().b()[r];
    if (!present) throw std::logic_error("vertices_of: hull facet missing from the input system");
  }
  return p;
}

const std::vector<LatticePoint>& lattice_points(const Polytope& p) { return p.lattice_points(); }

std::vector<LatticePoint> interior_lattice_points(const Polytope& p) {
  std::vector<LatticePoint> out;
  const auto& h = p.facets();
  for (const auto& pt : p.lattice_points()) {
    RatVector y = to_rat(pt);
    bool strict = true;
    for (std::size_t r = 0; r < h.rows() && strict; ++r)
      if (h.slack(r, y) >= 0) strict = false;
    if (strict) out.push_back(pt);
  }
  return out;
}

bool is_reflexive(const Polytope& p) {
  if (!p.is_lattice()) return false;
  for (const auto& b : p.facets().b())
    if (b != 1) return false;
  auto interior = interior_lattice_points(p);
  if (interior.size() != 1 || interior[0] != LatticePoint(p.dim(), 0))
    throw std::logic_error("reflexive polytope with an interior lattice point other than 0");
  return true;
}

std::vector<std::vector<std::size_t>> edge_graph(const Polytope& p) {
  const auto& vf = p.vertex_facets();
  const std::size_t nv = p.vertices().size();
  const int n = p.dim();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      std::vector<std::size_t> common;
      std::set_intersection(vf[u].begin(), vf[u].end(), vf[v].begin(), vf[v].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) < n - 1) continue;
      if (rank(to_rat_rows(p.facets().a(), common)) != n - 1) continue;
      bool edge = true;
      for (std::size_t w = 0; w < nv && edge; ++w) {
        if (w == u || w == v) continue;
        if (std::includes(vf[w].begin(), vf[w].end(), common.begin(), common.end())) edge = false;
      }
      if (edge) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

namespace {
IntVector primitive_direction(const RatVector& from, const RatVector& to) {
  Int q = 1;
  for (std::size_t k = 0; k < from.size(); ++k) q = lcm(q, Int(Rat(to[k] - from[k]).get_den()));
  std::vector<Int> d(from.size());
  Int g = 0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    d[k] = Int((to[k] - from[k]) * q);
    g = gcd(g, d[k]);
  }
  IntVector out(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) out[k] = to_int64(Int(d[k] / g));
  return out;
}
}  // namespace

bool is_delzant(const Polytope& p) {
  const auto adj = edge_graph(p);
  const auto& verts = p.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (adj[v].size() != static_cast<std::size_t>(p.dim())) return false;
    RatMatrix dirs;
    for (auto w : adj[v]) dirs.push_back(to_rat(primitive_direction(verts[v], verts[w])));
    Rat det = determinant(std::move(dirs));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

namespace {

class PullingTriangulation {
 public:
  explicit PullingTriangulation(const Polytope& p) : p_(p) {
    tight_.assign(p.vertices().size(), std::vector<bool>(p.facets().rows(), false));
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
      for (auto r : p.vertex_facets()[v]) tight_[v][r] = true;
  }

  const std::vector<std::vector<std::size_t>>& simplices(const std::vector<std::size_t>& face, int k) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    if (static_cast<int>(face.size()) == k + 1) {
      out.push_back(face);
    } else {
      const std::size_t apex = face.front();
      for (const auto& sub : facets_of_face(face, k)) {
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        for (const auto& s : simplices(sub, k - 1)) {
          std::vector<std::size_t> cell;
          cell.reserve(s.size() + 1);
          cell.push_back(apex);
          cell.insert(cell.end(), s.begin(), s.end());
          out.push_back(std::move(cell));
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

 private:
  std::vector<std::vector<std::size_t>> facets_of_face(const std::vector<std::size_t>& face, int k) {
    std::set<std::vector<std::size_t>> found;
    for (std::size_t r = 0; r < p_.facets().rows(); ++r) {
      std::vector<std::size_t> sub;
      for (auto v : face)
        if (tight_[v][r]) sub.push_back(v);
      if (static_cast<int>(sub.size()) < k || sub.size() == face.size()) continue;
      if (found.count(sub)) continue;
      std::vector<RatVector> pts;
      for (auto v : sub) pts.push_back(p_.vertices()[v]);
      if (detail::affine_rank(pts) == k - 1) found.insert(std::move(sub));
    }
    return {found.begin(), found.end()};
  }

  const Polytope& p_;
  std::vector<std::vector<bool>> tight_;
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo_;
};

}  // namespace

RatVector barycenter(const Polytope& p) {
  const std::size_t n = static_cast<std::size_t>(p.dim());
  if (p.vertices().size() < n + 1) throw Error(ErrorCode::DegenerateInput, "polytope is not full-dimensional");
  PullingTriangulation tri(p);
  std::vector<std::size_t> all(p.vertices().size());
  std::iota(all.begin(), all.end(), 0);
  const auto& verts = p.vertices();
  RatVector weighted(n, Rat(0));
  Rat total = 0;
  for (const auto& cell : tri.simplices(all, static_cast<int>(n))) {
    RatMatrix m;
    for (std::size_t i = 1; i < cell.size(); ++i) {
      RatVector row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = verts[cell[i]][k] - verts[cell[0]][k];
      m.push_back(std::move(row));
    }
    Rat vol = abs(determinant(std::move(m)));
    total += vol;
    for (std::size_t k = 0; k < n; ++k) {
      Rat s = 0;
      for (auto v : cell) s += verts[v][k];
      weighted[k] += vol * s / static_cast<long>(n + 1);
    }
  }
  if (total == 0) throw Error(ErrorCode::DegenerateInput, "zero volume");
  for (auto& w : weighted) w /= total;
  return weighted;
}

std::vector<std::vector<int>> decompose(const Polytope& p) {
  if (!is_reflexive(p)) throw Error(ErrorCode::NotReflexive, "decomposition needs the A y <= 1 normalization");
  const int n = p.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : p.facets().a()) {
    int first = -1;
    for (int k = 0; k < n; ++k) {
      if (row[k] == 0) continue;
      if (first < 0) first = k;
      else parent[find(k)] = find(first);
    }
  }
  std::map<int, std::vector<int>> blocks;
  for (int k = 0; k < n; ++k) blocks[find(k)].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

Polytope cartesian_product(const Polytope& p, const Polytope& q) {
  std::vector<RatVector> points;
  points.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) {
      RatVector x = v;
      x.insert(x.end(), w.begin(), w.end());
      points.push_back(std::move(x));
    }
  return facets_of(std::move(points));
}

std::optional<UnimodularMap> unimodular_equivalent(const Polytope& p, const Polytope& q) {
  const std::size_t n = static_cast<std::size_t>(p.dim());
  if (q.dim() != p.dim() || p.vertices().size() != q.vertices().size()) return std::nullopt;
  const auto adj_p = edge_graph(p);
  const auto adj_q = edge_graph(q);
  const auto& vp = p.vertices();
  const auto& vq = q.vertices();
  std::set<RatVector> target(vq.begin(), vq.end());

  // Base: vertex 0 of p and n neighbours that span affinely with it.
  std::vector<std::size_t> base;
  {
    const auto& nb = adj_p[0];
    bool ok = false;
    for_each_subset(nb.size(), n, [&](const std::vector<std::size_t>& pick) {
      if (ok) return;
      std::vector<RatVector> pts{vp[0]};
      for (auto i : pick) pts.push_back(vp[nb[i]]);
      if (detail::affine_rank(pts) == static_cast<int>(n)) {
        ok = true;
        for (auto i : pick) base.push_back(nb[i]);
      }
    });
    if (!ok) return std::nullopt;
  }
  RatMatrix src(n, RatVector(n));  // columns are base edge vectors of p
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) src[k][j] = vp[base[j]][k] - vp[0][k];

  for (std::size_t w = 0; w < vq.size(); ++w) {
    if (adj_q[w].size() != adj_p[0].size()) continue;
    const auto& nb = adj_q[w];
    // Ordered choices of n distinct neighbours of w.
    std::vector<std::size_t> choice(n);
    std::vector<bool> used(nb.size(), false);
    std::optional<UnimodularMap> result;
    auto attempt = [&]() {
      // U * src = dst  =>  U^T = solve(src^T, dst^T) column by column.
      IntMatrix u(n, IntVector(n));
      for (std::size_t row = 0; row < n; ++row) {
        RatMatrix a(n, RatVector(n));
        RatVector rhs(n);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) a[j][k] = src[k][j];
          rhs[j] = vq[nb[choice[j]]][row] - vq[w][row];
        }
        RatVector x;
        if (!solve(std::move(a), std::move(rhs), x)) return false;
        for (std::size_t k = 0; k < n; ++k) {
          if (!is_integer(x[k])) return false;
          u[row][k] = to_int64(x[k].get_num());
        }
      }
      RatMatrix ur;
      for (const auto& r : u) ur.push_back(to_rat(r));
      Rat det = determinant(ur);
      if (det != 1 && det != -1) return false;
      // offset = U v0 - w0
      IntVector offset(n);
      for (std::size_t row = 0; row < n; ++row) {
        Rat s = 0;
        for (std::size_t k = 0; k < n; ++k) s += ur[row][k] * vp[0][k];
        s -= vq[w][row];
        if (!is_integer(s)) return false;
        offset[row] = to_int64(s.get_num());
      }
      for (const auto& v : vp) {
        RatVector img(n);
        for (std::size_t row = 0; row < n; ++row) {
          Rat s = 0;
          for (std::size_t k = 0; k < n; ++k) s += ur[row][k] * v[k];
          img[row] = s - offset[row];
        }
        if (!target.count(img)) return false;
      }
      result = UnimodularMap{std::move(u), std::move(offset)};
      return true;
    };
    std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
      if (depth == n) return attempt();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        choice[depth] = i;
        if (place(depth + 1)) return true;
        used[i] = false;
      }
      return false;
    };
    if (place(0)) return result;
  }
  return std::nullopt;
}

}  // namespace mapoly
