#pragma once

#include <algorithm>
#include <array>

#include "regge/assembly.hpp"

namespace regge::detail {

inline std::size_t at(int i) { return static_cast<std::size_t>(i); }

/// Position of global vertex v among the sorted vertices of a simplex.
template <std::size_t N>
int local_of(const std::array<int, N>& verts, int v) {
  const auto it = std::find(verts.begin(), verts.end(), v);
  return it == verts.end() ? -1 : static_cast<int>(it - verts.begin());
}

/// Gradients of the barycentric coordinates of cell k (sorted vertex order).
inline std::array<Vec3, 4> bary_grads(const SimplicialComplex3& mesh, int k) {
  const auto& tv = mesh.tet(k);
  const Vec3 o = mesh.point(tv[0]);
  Mat3 j;
  for (int c = 0; c < 3; ++c) {
    const Vec3 d = mesh.point(tv[at(c + 1)]) - o;
    for (int r = 0; r < 3; ++r) j(r, c) = d[r];
  }
  const Mat3 inv = inverse(j);
  std::array<Vec3, 4> g;
  for (int a = 1; a < 4; ++a) g[at(a)] = inv.row(a - 1);
  g[0] = -(g[1] + g[2] + g[3]);
  return g;
}

inline int O(const SimplicialComplex3& mesh, int dtau, int tau, int dsig, int sig) {
  return incidence(mesh.vertices_of(dtau, tau), mesh.vertices_of(dsig, sig));
}

}  // namespace regge::detail
