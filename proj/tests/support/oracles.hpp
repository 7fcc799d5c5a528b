// Independent reference implementations used by the tests. Nothing here
// calls into the library's algorithms; only its value types are shared.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "mapoly/poly.hpp"
#include "mapoly/polytope.hpp"

namespace oracle {

using mapoly::Int;
using mapoly::IntMatrix;
using mapoly::IntVector;
using mapoly::Rat;
using mapoly::RatVector;

// Polynomial as exponent vector -> coefficient, zeros removed.
using Dense = std::map<std::vector<int>, Rat>;

inline void prune(Dense& d) {
  for (auto it = d.begin(); it != d.end();)
    it = sgn(it->second) == 0 ? d.erase(it) : std::next(it);
}

inline Dense dense(const mapoly::PolyQ& f) {
  Dense d;
  for (const auto& [m, c] : f.terms()) d[m.exponents(f.nvars())] = c;
  return d;
}

inline int total(const std::vector<int>& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

inline Dense add(Dense a, const Dense& b) {
  for (const auto& [e, c] : b) a[e] += c;
  prune(a);
  return a;
}

inline Dense sub(Dense a, const Dense& b) {
  for (const auto& [e, c] : b) a[e] -= c;
  prune(a);
  return a;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  prune(out);
  return out;
}

inline Dense truncate(Dense a, int d) {
  for (auto it = a.begin(); it != a.end();)
    it = total(it->first) > d ? a.erase(it) : std::next(it);
  return a;
}

// Cofactor expansion along the first row, no sharing between minors.
inline Dense det_cofactor(const std::vector<std::vector<Dense>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Dense out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Dense>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Dense> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Dense t = mul(m[0][j], det_cofactor(minor));
    out = j % 2 == 0 ? add(out, t) : sub(out, t);
  }
  return out;
}

inline Rat eval(const Dense& f, const RatVector& y) {
  Rat s = 0;
  for (const auto& [e, c] : f) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) t *= y[i];
    s += t;
  }
  return s;
}

// a.y <= 1 for every row, tested directly against the input matrix.
inline bool inside(const IntMatrix& a, const IntVector& y) {
  for (const auto& row : a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += row[i] * y[i];
    if (s > 1) return false;
  }
  return true;
}

inline bool strictly_inside(const IntMatrix& a, const IntVector& y) {
  for (const auto& row : a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += row[i] * y[i];
    if (s >= 1) return false;
  }
  return true;
}

// Lattice points of {A y <= 1} inside the box [lo, hi]^n, lexicographic.
inline std::vector<IntVector> box_scan(const IntMatrix& a, int n, int lo, int hi) {
  std::vector<IntVector> out;
  IntVector y(n, lo);
  while (true) {
    if (inside(a, y)) out.push_back(y);
    int i = n - 1;
    while (i >= 0 && y[i] == hi) y[i--] = lo;
    if (i < 0) break;
    ++y[i];
  }
  return out;
}

inline int rank_of(std::vector<RatVector> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// A lattice point of {A y <= 1} is a vertex iff its tight rows have rank n.
inline std::vector<IntVector> lattice_vertices(const IntMatrix& a, int n, int lo, int hi) {
  std::vector<IntVector> out;
  for (const auto& y : box_scan(a, n, lo, hi)) {
    std::vector<RatVector> tight;
    for (const auto& row : a) {
      std::int64_t s = 0;
      for (int i = 0; i < n; ++i) s += row[i] * y[i];
      if (s == 1) tight.push_back(mapoly::to_rat(row));
    }
    if (rank_of(tight) == n) out.push_back(y);
  }
  return out;
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
inline std::vector<IntVector> hull_2d(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const IntVector& o, const IntVector& a, const IntVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<IntVector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

inline Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Number of partitions of n.
inline int partitions(int n) {
  std::vector<int> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rat small_rat() {
    const int num = uniform(-5, 5);
    const int den = uniform(1, 4);
    return mapoly::make_rat(num, den);
  }

  Rat positive_rat() { return mapoly::make_rat(uniform(1, 9), uniform(1, 5)); }

  std::vector<int> exponents(int nvars, int max_degree) {
    std::vector<int> e(nvars, 0);
    const int d = uniform(0, max_degree);
    for (int k = 0; k < d; ++k) ++e[uniform(0, nvars - 1)];
    return e;
  }

  mapoly::PolyQ poly(int nvars, int max_degree, int max_terms) {
    std::vector<mapoly::PolyQ::Term> terms;
    const int t = uniform(0, max_terms);
    for (int k = 0; k < t; ++k)
      terms.emplace_back(mapoly::Monomial::from_exponents(exponents(nvars, max_degree)), small_rat());
    return mapoly::PolyQ(nvars, std::move(terms));
  }

  RatVector point(int nvars) {
    RatVector y(nvars);
    for (auto& v : y) v = small_rat();
    return y;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
