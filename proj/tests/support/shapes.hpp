#pragma once

#include "mapoly/polytope.hpp"

namespace shapes {

inline const mapoly::IntMatrix& hexagon_rows() {
  static const mapoly::IntMatrix a = {{-1, 0}, {0, -1}, {1, -1}, {-1, 1}, {1, 0}, {0, 1}};
  return a;
}

inline mapoly::Polytope from_rows(const mapoly::IntMatrix& a) {
  return mapoly::vertices_of(mapoly::HalfspaceSystem::unit_rhs(static_cast<int>(a[0].size()), a));
}

inline mapoly::Polytope hexagon() { return from_rows(hexagon_rows()); }

// [-1, 1]^n
inline mapoly::Polytope cube(int n) {
  mapoly::IntMatrix a;
  for (int i = 0; i < n; ++i)
    for (int s : {-1, 1}) {
      mapoly::IntVector r(n, 0);
      r[i] = s;
      a.push_back(r);
    }
  return from_rows(a);
}

// -y_i <= 1 and sum y_i <= 1.
inline mapoly::Polytope simplex(int n) {
  mapoly::IntMatrix a;
  for (int i = 0; i < n; ++i) {
    mapoly::IntVector r(n, 0);
    r[i] = -1;
    a.push_back(r);
  }
  a.push_back(mapoly::IntVector(n, 1));
  return from_rows(a);
}

inline std::vector<mapoly::RatVector> points(std::initializer_list<mapoly::IntVector> pts) {
  std::vector<mapoly::RatVector> out;
  for (const auto& p : pts) out.push_back(mapoly::to_rat(p));
  return out;
}

}  // namespace shapes
