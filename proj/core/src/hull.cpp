// Convex hull by the double description method applied to the polar cone
//   C* = { (b, a) : b - a.v >= 0 for every input point v }.
// For a full-dimensional point set C* is pointed and its extreme rays are
// exactly the facet inequalities a.x <= b of conv(points).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "mapoly/error.hpp"
#include "mapoly/polytope.hpp"

namespace mapoly::detail {
namespace {

using ZVec = std::vector<Int>;

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  ZVec v;
  Bits zero;
};

void make_primitive(ZVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// (q, -q v) with q the common denominator of v.
ZVec homogenize(const RatVector& v) {
  Int q = 1;
  for (const auto& x : v) q = lcm(q, Int(x.get_den()));
  ZVec row;
  row.reserve(v.size() + 1);
  row.push_back(q);
  for (const auto& x : v) row.push_back(Int(-(x * q)));
  return row;
}

}  // namespace

int affine_rank(const std::vector<RatVector>& points) {
  if (points.size() <= 1) return 0;
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

HalfspaceSystem hull_facets(const std::vector<RatVector>& points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "empty point set");
  const std::size_t n = points[0].size();
  const std::size_t d = n + 1;
  for (const auto& p : points)
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of different dimension");

  // Far points first: once the hull is nearly complete the remaining
  // constraints are satisfied by every ray and cost one dot product each.
  RatVector centroid(n, Rat(0));
  for (const auto& p : points)
    for (std::size_t k = 0; k < n; ++k) centroid[k] += p[k];
  for (auto& c : centroid) c /= static_cast<long>(points.size());
  std::vector<Rat> dist(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rat s = 0;
    for (std::size_t k = 0; k < n; ++k) s += (points[i][k] - centroid[k]) * (points[i][k] - centroid[k]);
    dist[i] = s;
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return dist[x] > dist[y]; });

  std::vector<ZVec> rows;
  rows.reserve(points.size());
  for (auto i : order) rows.push_back(homogenize(points[i]));

  // Greedy basis of d linearly independent rows, moved to the front.
  std::vector<std::size_t> basis;
  RatMatrix basis_rows;
  for (std::size_t i = 0; i < rows.size() && basis.size() < d; ++i) {
    RatVector r(rows[i].begin(), rows[i].end());
    basis_rows.push_back(r);
    if (rank(basis_rows) == static_cast<int>(basis_rows.size())) {
      basis.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (basis.size() < d) throw Error(ErrorCode::DegenerateInput, "points do not span the ambient space affinely");
  {
    std::vector<ZVec> reordered;
    reordered.reserve(rows.size());
    std::vector<bool> used(rows.size(), false);
    for (auto i : basis) {
      reordered.push_back(rows[i]);
      used[i] = true;
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i]) reordered.push_back(rows[i]);
    rows = std::move(reordered);
  }

  const std::size_t m = rows.size();
  std::vector<Ray> rays;
  // Columns of the inverse of the basis matrix: row_i . ray_j = delta_ij.
  for (std::size_t j = 0; j < d; ++j) {
    RatMatrix a(d, RatVector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) a[i][k] = rows[i][k];
    RatVector e(d, Rat(0)), x;
    e[j] = 1;
    solve(a, e, x);
    Int q = 1;
    for (const auto& c : x) q = lcm(q, Int(c.get_den()));
    Ray ray{ZVec(d), Bits(m)};
    for (std::size_t k = 0; k < d; ++k) ray.v[k] = Int(x[k] * q);
    make_primitive(ray.v);
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) ray.zero.set(i);
    rays.push_back(std::move(ray));
  }

  for (std::size_t r = d; r < m; ++r) {
    std::vector<Int> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      s[j] = dot(rows[r], rays[j].v);
      int sg = sgn(s[j]);
      if (sg > 0) pos.push_back(j);
      else if (sg < 0) neg.push_back(j);
    }
    if (neg.empty()) {
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (s[j] == 0) rays[j].zero.set(r);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (sgn(s[j]) < 0) continue;
      Ray kept = rays[j];
      if (s[j] == 0) kept.zero.set(r);
      next.push_back(std::move(kept));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() < static_cast<int>(d) - 2) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.subset_of(rays[t].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{ZVec(d), common};
        for (std::size_t k = 0; k < d; ++k) fresh.v[k] = s[p] * rays[q].v[k] - s[q] * rays[p].v[k];
        make_primitive(fresh.v);
        fresh.zero.set(r);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  IntMatrix a;
  RatVector b;
  for (const auto& ray : rays) {
    ZVec normal(ray.v.begin() + 1, ray.v.end());
    Int g = 0;
    for (const auto& x : normal) g = gcd(g, x);
    IntVector row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = to_int64(Int(normal[k] / g));
    a.push_back(std::move(row));
    b.push_back(make_rat(ray.v[0], g));
  }
  return HalfspaceSystem(static_cast<int>(n), std::move(a), std::move(b), true);
}

}  // namespace mapoly::detail
