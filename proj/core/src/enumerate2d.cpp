#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "mapoly/polytope.hpp"

namespace mapoly {

namespace {

constexpr int kBox = 4;

using P2 = std::array<int, 2>;

long cross(const P2& o, const P2& a, const P2& b) {
  return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
}

bool nonzero(const P2& p) { return p[0] != 0 || p[1] != 0; }

// True when some nonzero lattice point lies strictly inside the
// counter-clockwise triangle abc.
bool blocked(const P2& a, const P2& b, const P2& c) {
  const int x0 = std::min({a[0], b[0], c[0]}), x1 = std::max({a[0], b[0], c[0]});
  const int y0 = std::min({a[1], b[1], c[1]}), y1 = std::max({a[1], b[1], c[1]});
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) {
      P2 p{x, y};
      if (nonzero(p) && cross(a, b, p) > 0 && cross(b, c, p) > 0 && cross(c, a, p) > 0) return true;
    }
  return false;
}

class ChainSearch {
 public:
  std::vector<std::vector<P2>> polygons;

  void run() {
    for (int x = -kBox; x <= kBox; ++x)
      for (int y = -kBox; y <= kBox; ++y) {
        chain_ = {P2{x, y}};
        extend();
      }
  }

 private:
  static constexpr P2 kOrigin{0, 0};

  void extend() {
    const P2 v0 = chain_.front();
    const P2 last = chain_.back();
    const std::size_t k = chain_.size();
    for (int x = v0[0]; x <= kBox; ++x) {
      for (int y = -kBox; y <= kBox; ++y) {
        P2 next{x, y};
        if (!(v0 < next)) continue;
        // 0 strictly left of the new edge.
        if (cross(last, next, kOrigin) <= 0) continue;
        if (k >= 2) {
          const P2 prev = chain_[k - 2];
          if (cross(prev, last, next) <= 0) continue;  // strict left turn
          if (cross(v0, last, next) <= 0) continue;             // angular order around v0
          if (blocked(v0, last, next)) continue;
          // Segment v0-last turns into a diagonal once next is appended.
          if (k >= 3 && blocked_on_segment(v0, last)) continue;
        }
        chain_.push_back(next);
        if (chain_.size() >= 3 && closes()) polygons.push_back(chain_);
        extend();
        chain_.pop_back();
      }
    }
  }

  static bool blocked_on_segment(const P2& a, const P2& b) {
    const int dx = b[0] - a[0], dy = b[1] - a[1];
    const int g = std::gcd(std::abs(dx), std::abs(dy));
    for (int t = 1; t < g; ++t) {
      P2 p{a[0] + dx / g * t, a[1] + dy / g * t};
      if (nonzero(p)) return true;
    }
    return false;
  }

  // The closing edge last -> v0 keeps convexity and has 0 strictly on its left.
  bool closes() const {
    const std::size_t k = chain_.size();
    const P2& v0 = chain_.front();
    const P2& last = chain_.back();
    return cross(last, v0, kOrigin) > 0 && cross(chain_[k - 2], last, v0) > 0 && cross(last, v0, chain_[1]) > 0;
  }

  std::vector<P2> chain_;
};

long max_norm(const Polytope& p) {
  long m = 0;
  for (const auto& v : p.vertices())
    for (const auto& x : v) m = std::max(m, std::labs(to_int64(x.get_num())));
  return m;
}

}  // namespace

PolygonCensus enumerate_smooth_reflexive_2d() {
  ChainSearch search;
  search.run();

  PolygonCensus census;
  census.polygons_scanned = search.polygons.size();
  std::vector<Polytope> reps;
  for (const auto& poly : search.polygons) {
    std::vector<LatticePoint> pts;
    for (const auto& v : poly) pts.push_back({v[0], v[1]});
    Polytope p = facets_of(pts);
    if (!is_reflexive(p) || !is_delzant(p)) continue;
    bool seen = false;
    for (auto& rep : reps) {
      if (unimodular_equivalent(rep, p)) {
        if (max_norm(p) < max_norm(rep)) rep = p;
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(p));
  }
  for (const auto& rep : reps)
    if (max_norm(rep) >= kBox) throw std::logic_error("polygon class representative touches the search box");
  std::sort(reps.begin(), reps.end(), [](const Polytope& a, const Polytope& b) {
    if (a.vertices().size() != b.vertices().size()) return a.vertices().size() < b.vertices().size();
    return a.vertices() < b.vertices();
  });
  for (const auto& rep : reps) {
    auto c = barycenter(rep);
    if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; })) census.barycentric.push_back(rep);
  }
  census.classes = std::move(reps);
  return census;
}

}  // namespace mapoly
