#include "assembly_internal.hpp"

namespace regge {

using detail::at;
using detail::O;

#define REGGE_CACHED(name) \
  const SparseMat& Assembler::name() { return cached(#name, &Assembler::build_##name); }

REGGE_CACHED(rm_aux0)
REGGE_CACHED(rm_aux1)
REGGE_CACHED(p1n1)
REGGE_CACHED(p1n2)
REGGE_CACHED(p0n0)
REGGE_CACHED(p0n1)
REGGE_CACHED(p0n2)
REGGE_CACHED(hess0)
REGGE_CACHED(hess_curl)
REGGE_CACHED(hess_div)

#undef REGGE_CACHED

SparseMat Assembler::build_rm_aux0() {
  const auto basis = rm_basis();
  const int F0 = mesh_.count_interior(2);
  SparseMat d(3 * F0, 6 * mesh_.num_tets());
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int k : mesh_.face_tets(f)) {
      const int o = O(mesh_, 2, f, 3, k);
      for (int j = 0; j < 3; ++j) {
        const int e = mesh_.face_edges(f)[at(j)];
        const Vec3 mid = edge_midpoint(mesh_, e);
        for (int i = 0; i < 6; ++i) d.add(3 * fi + j, 6 * k + i, o * dot(basis[at(i)](mid), fr_.edge_t[at(e)]));
      }
    }
  }
  return d;
}

SparseMat Assembler::build_rm_aux1() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(mesh_.count_interior(1), 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int j = 0; j < 3; ++j) {
      const int e = mesh_.face_edges(f)[at(j)];
      const int ei = mesh_.interior_index(1, e);
      if (ei >= 0) d.add(ei, 3 * fi + j, O(mesh_, 1, e, 2, f));
    }
  }
  return d;
}

// λ_j n_f restricted to an interior edge e ⊂ f is n_f at the endpoint that is
// face vertex j and zero at the other.
SparseMat Assembler::build_p1n1() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(4 * mesh_.count_interior(1), 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    const Vec3& n = fr_.face_n[at(f)];
    for (int e : mesh_.face_edges(f)) {
      const int ei = mesh_.interior_index(1, e);
      if (ei < 0) continue;
      const int o = O(mesh_, 1, e, 2, f);
      const auto c = decompose_edge_normal(e, n, "p1n");
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 2; ++a) {
          if (mesh_.edge(e)[at(a)] != mesh_.face(f)[at(j)]) continue;
          for (int i = 0; i < 2; ++i) d.add(4 * ei + 2 * a + i, 3 * fi + j, o * c[at(i)]);
        }
    }
  }
  return d;
}

SparseMat Assembler::build_p1n2() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(3 * mesh_.count_interior(0), 4 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const Vec3* n[2] = {&fr_.edge_n1[at(e)], &fr_.edge_n2[at(e)]};
    for (int a = 0; a < 2; ++a) {
      const int x = mesh_.edge(e)[at(a)];
      const int xi = mesh_.interior_index(0, x);
      if (xi < 0) continue;
      const int o = O(mesh_, 0, x, 1, e);
      for (int i = 0; i < 2; ++i)
        for (int c = 0; c < 3; ++c) d.add(3 * xi + c, 4 * ei + 2 * a + i, o * (*n[i])[c]);
    }
  }
  return d;
}

SparseMat Assembler::build_p0n0() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(F0, mesh_.num_vertices());
  for (int fi = 0; fi < F0; ++fi)
    for (const auto& [v, alpha] : normal_jump_scalar(mesh_.interior_list(2)[at(fi)])) d.add(fi, v, alpha);
  return d;
}

SparseMat Assembler::build_p0n1() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(2 * mesh_.count_interior(1), F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int e : mesh_.face_edges(f)) {
      const int ei = mesh_.interior_index(1, e);
      if (ei < 0) continue;
      const auto c = decompose_edge_normal(e, fr_.face_n[at(f)], "p0n");
      for (int i = 0; i < 2; ++i) d.add(2 * ei + i, fi, O(mesh_, 1, e, 2, f) * c[at(i)]);
    }
  }
  return d;
}

SparseMat Assembler::build_p0n2() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(3 * mesh_.count_interior(0), 2 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const Vec3* n[2] = {&fr_.edge_n1[at(e)], &fr_.edge_n2[at(e)]};
    for (int x : mesh_.edge(e)) {
      const int xi = mesh_.interior_index(0, x);
      if (xi < 0) continue;
      const int o = O(mesh_, 0, x, 1, e);
      for (int i = 0; i < 2; ++i)
        for (int c = 0; c < 3; ++c) d.add(3 * xi + c, 2 * ei + i, o * (*n[i])[c]);
    }
  }
  return d;
}

SparseMat Assembler::build_hess0() { return Rational(-1) * p0n0(); }

SparseMat Assembler::build_hess_curl() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(2 * mesh_.count_interior(1), F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int e : mesh_.face_edges(f)) {
      const int ei = mesh_.interior_index(1, e);
      if (ei < 0) continue;
      const auto c = decompose_edge_normal(e, fr_.face_n[at(f)], "hessian curl");
      for (int i = 0; i < 2; ++i) d.add(2 * ei + i, fi, mesh_.edge_face_sign(e, f) * c[at(i)]);
    }
  }
  return d;
}

SparseMat Assembler::build_hess_div() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(3 * mesh_.count_interior(0), 2 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const Vec3* n[2] = {&fr_.edge_n1[at(e)], &fr_.edge_n2[at(e)]};
    for (int a = 0; a < 2; ++a) {
      const int xi = mesh_.interior_index(0, mesh_.edge(e)[at(a)]);
      if (xi < 0) continue;
      for (int i = 0; i < 2; ++i)
        for (int c = 0; c < 3; ++c) d.add(3 * xi + c, 2 * ei + i, a == 0 ? (*n[i])[c] : Rational(-(*n[i])[c]));
    }
  }
  return d;
}

}  // namespace regge
