#include <map>

#include "assembly_internal.hpp"

namespace regge {

using detail::at;
using detail::local_of;
using detail::O;

#define REGGE_CACHED(name) \
  const SparseMat& Assembler::name() { return cached(#name, &Assembler::build_##name); }

REGGE_CACHED(lag_def)
REGGE_CACHED(regge_inc)
REGGE_CACHED(regge_div)
REGGE_CACHED(lift_L)
REGGE_CACHED(correction_K)
REGGE_CACHED(x_def)
REGGE_CACHED(x_inc)
REGGE_CACHED(x_div)
REGGE_CACHED(ned_def)
REGGE_CACHED(phi_inc)
REGGE_CACHED(xhat2_div)
REGGE_CACHED(nedc_def)
REGGE_CACHED(nedc_inc)
REGGE_CACHED(regdual_in_xhat2)
REGGE_CACHED(ned_in_x0)
REGGE_CACHED(phi_in_x1)
REGGE_CACHED(xhat2_in_x2)
REGGE_CACHED(lagdual_in_x3)

#undef REGGE_CACHED

Assembler::Assembler(const SimplicialComplex3& mesh) : mesh_(mesh), fr_(regge::frames(mesh)) {}

const SparseMat& Assembler::cached(const std::string& key, Builder build) {
  const auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  SparseMat m = (this->*build)();
  return cache_.emplace(key, std::move(m)).first->second;
}

SparseMat Assembler::build_lag_def() {
  SparseMat d(mesh_.num_edges(), 3 * mesh_.num_vertices());
  for (int e = 0; e < mesh_.num_edges(); ++e) {
    const Vec3& t = fr_.edge_t[at(e)];
    const auto& ev = mesh_.edge(e);
    for (int i = 0; i < 3; ++i) {
      d.add(e, 3 * ev[1] + i, t[i]);
      d.add(e, 3 * ev[0] + i, -t[i]);
    }
  }
  return d;
}

SparseMat Assembler::build_lift_L() {
  SparseMat l(2 * mesh_.num_edges(), mesh_.num_edges());
  for (int e = 0; e < mesh_.num_edges(); ++e) l.add(2 * e + 1, e, 1);
  return l;
}

SparseMat Assembler::build_correction_K() {
  const int E = mesh_.num_edges();
  const int nphi = 3 * mesh_.count_interior(2);
  SparseMat select(nphi, E + nphi);
  for (int i = 0; i < nphi; ++i) select.add(i, E + i, 1);
  return select * nedc_def() * lift_L();
}

SparseMat Assembler::build_regge_inc() {
  const int E0 = mesh_.count_interior(1), F0 = mesh_.count_interior(2);
  // r_e = Σ_f O(e,f) Σ_j q_j p_j, as rigid-motion coordinates per interior edge.
  SparseMat r(6 * E0, 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int j = 0; j < 3; ++j) {
      const auto c = phi_normal_rm(mesh_, fr_, f, j).coords();
      for (int e : mesh_.face_edges(f)) {
        const int ei = mesh_.interior_index(1, e);
        if (ei < 0) continue;
        const int o = O(mesh_, 1, e, 2, f);
        for (int i = 0; i < 6; ++i) r.add(6 * ei + i, 3 * fi + j, o * c[at(i)]);
      }
    }
  }
  const SparseMat rk = (r * correction_K()).transpose();
  SparseMat inc(E0, mesh_.num_edges());
  for (int col = 0; col < rk.rows(); ++col) {
    std::map<int, std::array<Rational, 6>> blocks;
    for (const auto& [row, v] : rk.row(col)) blocks[row / 6][at(row % 6)] = v;
    for (const auto& [ei, c] : blocks) {
      const int e = mesh_.interior_list(1)[at(ei)];
      const Vec3& t = fr_.edge_t[at(e)];
      const RigidMotion got = RigidMotion::from_coords(c);
      const Rational lambda = dot(got.b, t) / dot(t, t);
      ++decompositions_;
      if (!(got == lambda * regdual_rm(mesh_, fr_, e)))
        throw Error(ErrorKind::DecompositionResidual,
                    "inc: accumulated rigid motion on edge " + std::to_string(e) + " does not vanish on the edge");
      inc.add(ei, col, -lambda);
    }
  }
  return inc;
}

SparseMat Assembler::build_regge_div() {
  SparseMat d(3 * mesh_.count_interior(0), mesh_.count_interior(1));
  for (int ei = 0; ei < mesh_.count_interior(1); ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const Vec3& t = fr_.edge_t[at(e)];
    for (int a = 0; a < 2; ++a) {
      const int xi = mesh_.interior_index(0, mesh_.edge(e)[at(a)]);
      if (xi < 0) continue;
      for (int i = 0; i < 3; ++i) d.add(3 * xi + i, ei, a == 0 ? t[i] : Rational(-t[i]));
    }
  }
  return d;
}

SparseMat Assembler::build_x_def() {
  SparseMat d(6 * mesh_.count_interior(2), 6 * mesh_.num_tets());
  for (int k = 0; k < mesh_.num_tets(); ++k)
    for (int f : mesh_.tet_faces(k)) {
      const int fi = mesh_.interior_index(2, f);
      if (fi < 0) continue;
      const int o = O(mesh_, 2, f, 3, k);
      for (int i = 0; i < 6; ++i) d.add(6 * fi + i, 6 * k + i, o);
    }
  return d;
}

SparseMat Assembler::build_x_inc() {
  SparseMat d(6 * mesh_.count_interior(1), 6 * mesh_.count_interior(2));
  for (int fi = 0; fi < mesh_.count_interior(2); ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int e : mesh_.face_edges(f)) {
      const int ei = mesh_.interior_index(1, e);
      if (ei < 0) continue;
      const int o = O(mesh_, 1, e, 2, f);
      for (int i = 0; i < 6; ++i) d.add(6 * ei + i, 6 * fi + i, o);
    }
  }
  return d;
}

SparseMat Assembler::build_x_div() {
  SparseMat d(6 * mesh_.count_interior(0), 6 * mesh_.count_interior(1));
  for (int ei = 0; ei < mesh_.count_interior(1); ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    for (int x : mesh_.edge(e)) {
      const int xi = mesh_.interior_index(0, x);
      if (xi < 0) continue;
      const int o = O(mesh_, 0, x, 1, e);
      for (int i = 0; i < 6; ++i) d.add(6 * xi + i, 6 * ei + i, o);
    }
  }
  return d;
}

namespace {

// Accumulates face jumps Σ_K ε(f,K) u_K(x_j) per (column, j) and turns them
// into normal coefficients q_j, rejecting any tangential jump.
struct JumpAccumulator {
  std::map<std::pair<int, int>, Vec3> jumps;
  void add(int col, int j, const Rational& eps, const Vec3& value) {
    auto& slot = jumps[{col, j}];
    slot += eps * value;
  }
  void flush(SparseMat& out, int row0, const Vec3& n, int f, long& count) {
    const Rational nn = dot(n, n);
    for (const auto& [key, jump] : jumps) {
      ++count;
      if (!cross(jump, n).is_zero())
        throw Error(ErrorKind::DecompositionResidual,
                    "tangential jump across face " + std::to_string(f) + " in column " + std::to_string(key.first));
      out.add(row0 + key.second, key.first, dot(jump, n) / nn);
    }
    jumps.clear();
  }
};

}  // namespace

SparseMat Assembler::build_ned_def() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(3 * F0, mesh_.num_edges());
  std::vector<std::array<RigidMotion, 6>> cells;
  for (int k = 0; k < mesh_.num_tets(); ++k) cells.push_back(ned_cell_basis(mesh_, fr_, k));
  JumpAccumulator acc;
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int k : mesh_.face_tets(f)) {
      const Rational eps = mesh_.face_tet_sign(f, k);
      for (int l = 0; l < 6; ++l)
        for (int j = 0; j < 3; ++j)
          acc.add(mesh_.tet_edges(k)[at(l)], j, eps, cells[at(k)][at(l)](mesh_.point(mesh_.face(f)[at(j)])));
    }
    acc.flush(d, 3 * fi, fr_.face_n[at(f)], f, decompositions_);
  }
  return d;
}

SparseMat Assembler::build_nedc_def() {
  const int E = mesh_.num_edges(), F0 = mesh_.count_interior(2);
  SparseMat d(E + 3 * F0, 2 * E);
  for (int e = 0; e < E; ++e) d.add(e, 2 * e + 1, 1);
  JumpAccumulator acc;
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int k : mesh_.face_tets(f)) {
      const Rational eps = mesh_.face_tet_sign(f, k);
      for (int l = 0; l < 6; ++l)
        for (int mom = 0; mom < 2; ++mom) {
          const auto vals = nedc_cell_basis(mesh_, fr_, k, l, mom);
          const int col = 2 * mesh_.tet_edges(k)[at(l)] + mom;
          for (int j = 0; j < 3; ++j) acc.add(col, j, eps, vals[at(local_of(mesh_.tet(k), mesh_.face(f)[at(j)]))]);
        }
    }
    acc.flush(d, E + 3 * fi, fr_.face_n[at(f)], f, decompositions_);
  }
  return d;
}

SparseMat Assembler::build_phi_inc() {
  const int E0 = mesh_.count_interior(1), F0 = mesh_.count_interior(2);
  SparseMat d(5 * E0, 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int j = 0; j < 3; ++j) {
      const RigidMotion p = phi_normal_rm(mesh_, fr_, f, j);
      for (int e : mesh_.face_edges(f)) {
        const int ei = mesh_.interior_index(1, e);
        if (ei < 0) continue;
        const int o = O(mesh_, 1, e, 2, f);
        ++decompositions_;
        const auto c = xhat2_coords(mesh_, fr_, e, p);
        for (int l = 0; l < 5; ++l) d.add(5 * ei + l, 3 * fi + j, o * c[at(l)]);
      }
    }
  }
  return d;
}

SparseMat Assembler::build_xhat2_div() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(6 * mesh_.count_interior(0), 5 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const auto basis = xhat2_basis(mesh_, fr_, e);
    for (int x : mesh_.edge(e)) {
      const int xi = mesh_.interior_index(0, x);
      if (xi < 0) continue;
      const int o = O(mesh_, 0, x, 1, e);
      for (int l = 0; l < 5; ++l) {
        const auto c = basis[at(l)].coords();
        for (int i = 0; i < 6; ++i) d.add(6 * xi + i, 5 * ei + l, o * c[at(i)]);
      }
    }
  }
  return d;
}

SparseMat Assembler::build_regdual_in_xhat2() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(5 * E0, E0);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const auto c = xhat2_coords(mesh_, fr_, e, regdual_rm(mesh_, fr_, e));
    for (int l = 0; l < 5; ++l) d.add(5 * ei + l, ei, c[at(l)]);
  }
  return d;
}

SparseMat Assembler::build_nedc_inc() {
  const int E = mesh_.num_edges(), E0 = mesh_.count_interior(1), F0 = mesh_.count_interior(2);
  const SparseMat reg_part = regdual_in_xhat2() * regge_inc();
  return block_matrix({{&reg_part, &phi_inc()}}, {5 * E0}, {E, 3 * F0});
}

SparseMat Assembler::build_ned_in_x0() {
  SparseMat d(6 * mesh_.num_tets(), mesh_.num_edges());
  for (int k = 0; k < mesh_.num_tets(); ++k) {
    const auto cells = ned_cell_basis(mesh_, fr_, k);
    for (int l = 0; l < 6; ++l) {
      const auto c = cells[at(l)].coords();
      for (int i = 0; i < 6; ++i) d.add(6 * k + i, mesh_.tet_edges(k)[at(l)], -mesh_.orientation(k) * c[at(i)]);
    }
  }
  return d;
}

SparseMat Assembler::build_phi_in_x1() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(6 * F0, 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int j = 0; j < 3; ++j) {
      const auto c = phi_normal_rm(mesh_, fr_, f, j).coords();
      for (int i = 0; i < 6; ++i) d.add(6 * fi + i, 3 * fi + j, c[at(i)]);
    }
  }
  return d;
}

SparseMat Assembler::build_xhat2_in_x2() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(6 * E0, 5 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const auto basis = xhat2_basis(mesh_, fr_, mesh_.interior_list(1)[at(ei)]);
    for (int l = 0; l < 5; ++l) {
      const auto c = basis[at(l)].coords();
      for (int i = 0; i < 6; ++i) d.add(6 * ei + i, 5 * ei + l, c[at(i)]);
    }
  }
  return d;
}

SparseMat Assembler::build_lagdual_in_x3() {
  const int V0 = mesh_.count_interior(0);
  SparseMat d(6 * V0, 3 * V0);
  for (int xi = 0; xi < V0; ++xi) {
    const Vec3& x = mesh_.point(mesh_.interior_list(0)[at(xi)]);
    for (int i = 0; i < 3; ++i) {
      // e_i × (y − x) has a = x × e_i, b = e_i.
      const auto c = RigidMotion{cross(x, Vec3::unit(i)), Vec3::unit(i)}.coords();
      for (int r = 0; r < 6; ++r) d.add(6 * xi + r, 3 * xi + i, c[at(r)]);
    }
  }
  return d;
}

}  // namespace regge
