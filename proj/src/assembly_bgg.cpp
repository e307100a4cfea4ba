#include <map>

#include "assembly_internal.hpp"
#include "regge/dense.hpp"

namespace regge {

using detail::at;
using detail::bary_grads;
using detail::local_of;
using detail::O;

#define REGGE_CACHED(name) \
  const SparseMat& Assembler::name() { return cached(#name, &Assembler::build_##name); }

REGGE_CACHED(vh_grad)
REGGE_CACHED(vh_curl)
REGGE_CACHED(vh_div)
REGGE_CACHED(wh_grad)
REGGE_CACHED(wh_curl)
REGGE_CACHED(wh_div)
REGGE_CACHED(s0)
REGGE_CACHED(s1)
REGGE_CACHED(s2)
REGGE_CACHED(t1)
REGGE_CACHED(t2)

#undef REGGE_CACHED

namespace {

std::string mat_text(const Mat3& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + to_string(m(i, j));
    s += i < 2 ? ";" : "]";
  }
  return s;
}

std::array<Mat3, 3> face_payloads(const FrameSet& fr, int f) {
  const Vec3& n = fr.face_n[at(f)];
  return {Mat3::outer(n, fr.face_t1[at(f)]), Mat3::outer(n, fr.face_t2[at(f)]),
          dot(n, n) * Mat3::identity() - Mat3::outer(n, n)};
}

}  // namespace

std::array<Rational, 3> Assembler::decompose_face(int f, const Mat3& p, const char* what) {
  ++decompositions_;
  const auto b = face_payloads(fr_, f);
  DenseMat gram(3, DenseVec(3));
  DenseVec rhs(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) gram[i][j] = frobenius(b[i], b[j]);
    rhs[i] = frobenius(b[i], p);
  }
  const auto sol = dense_solve(gram, rhs);
  std::array<Rational, 3> c{(*sol)[0], (*sol)[1], (*sol)[2]};
  if (!(c[0] * b[0] + c[1] * b[1] + c[2] * b[2] == p))
    throw Error(ErrorKind::DecompositionResidual,
                std::string(what) + ": payload " + mat_text(p) + " on face " + std::to_string(f) +
                    " is outside span{n t1, n t2, (n.n)I - nn^T}");
  return c;
}

std::array<Rational, 2> Assembler::decompose_edge_normal(int e, const Vec3& v, const char* what) {
  ++decompositions_;
  const Vec3& n1 = fr_.edge_n1[at(e)];
  const Vec3& n2 = fr_.edge_n2[at(e)];
  std::array<Rational, 2> c{dot(v, n1) / dot(n1, n1), dot(v, n2) / dot(n2, n2)};
  if (!(c[0] * n1 + c[1] * n2 == v))
    throw Error(ErrorKind::DecompositionResidual,
                std::string(what) + ": vector has a tangential component on edge " + std::to_string(e));
  return c;
}

std::map<int, Rational> Assembler::normal_jump_scalar(int f) {
  const Vec3& n = fr_.face_n[at(f)];
  std::map<int, Vec3> jumps;
  for (int k : mesh_.face_tets(f)) {
    const Rational eps = mesh_.face_tet_sign(f, k);
    const auto g = bary_grads(mesh_, k);
    for (int a = 0; a < 4; ++a) jumps[mesh_.tet(k)[at(a)]] += eps * g[at(a)];
  }
  std::map<int, Rational> out;
  for (const auto& [v, jump] : jumps) {
    ++decompositions_;
    if (!cross(jump, n).is_zero())
      throw Error(ErrorKind::DecompositionResidual, "tangential gradient jump on face " + std::to_string(f));
    const Rational alpha = dot(jump, n) / dot(n, n);
    if (alpha != 0) out[v] = alpha;
  }
  return out;
}

SparseMat Assembler::build_vh_grad() {
  const DofSpace vh1 = space("vh1");
  SparseMat d(vh1.dim(), 3 * mesh_.num_vertices());
  const SparseMat& reg = lag_def();
  for (int e = 0; e < mesh_.num_edges(); ++e)
    for (const auto& [c, v] : reg.row(e)) d.add(vh1.index(DofFamily::RegEdge, e, 0), c, v);
  for (int k = 0; k < mesh_.num_tets(); ++k) {
    const auto g = bary_grads(mesh_, k);
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 3; ++c) {
        const Vec3 w = vskw(Mat3::outer(Vec3::unit(c), g[at(a)]));
        for (int i = 0; i < 3; ++i) d.add(vh1.index(DofFamily::CellSkw, k, i), 3 * mesh_.tet(k)[at(a)] + c, w[i]);
      }
  }
  return d;
}

SparseMat Assembler::build_vh_curl() {
  const DofSpace vh1 = space("vh1"), vh2 = space("vh2");
  SparseMat d(vh2.dim(), vh1.dim());
  for (int f : mesh_.interior_list(2)) {
    const Vec3& n = fr_.face_n[at(f)];
    std::map<int, Mat3> jumps;
    for (int k : mesh_.face_tets(f)) {
      const Rational eps = mesh_.face_tet_sign(f, k);
      const auto reg = regge_cell_basis(mesh_, fr_, k);
      for (int l = 0; l < 6; ++l)
        jumps[vh1.index(DofFamily::RegEdge, mesh_.tet_edges(k)[at(l)], 0)] += eps * row_cross(reg[at(l)], n);
      for (int i = 0; i < 3; ++i)
        jumps[vh1.index(DofFamily::CellSkw, k, i)] += eps * row_cross(mskw(Vec3::unit(i)), n);
    }
    const int rows[3] = {vh2.index(DofFamily::Vh2FaceNT, f, 0), vh2.index(DofFamily::Vh2FaceNT, f, 1),
                         vh2.index(DofFamily::Vh2FaceTT, f, 0)};
    for (const auto& [col, p] : jumps) {
      if (p.is_zero()) continue;
      const auto c = decompose_face(f, p, "curl");
      for (int r = 0; r < 3; ++r) d.add(rows[r], col, c[at(r)]);
    }
  }
  return d;
}

SparseMat Assembler::build_vh_div() {
  const DofSpace vh2 = space("vh2"), vh3 = space("vh3");
  SparseMat d(vh3.dim(), vh2.dim());
  for (int col = 0; col < vh2.dim(); ++col) {
    const DofKind& dof = vh2.dofs()[at(col)];
    const int f = dof.id;
    const Vec3& n = fr_.face_n[at(f)];
    const Mat3 b = std::get<Mat3>(payload(dof, mesh_, fr_).tensor);
    for (int e : mesh_.face_edges(f)) {
      if (!mesh_.interior(1, e)) continue;
      const Vec3 v = Rational(-mesh_.edge_face_sign(e, f) / dot(n, n)) * (b * cross(fr_.edge_t[at(e)], n));
      const auto c = decompose_edge_normal(e, v, "div");
      for (int i = 0; i < 2; ++i) d.add(vh3.index(DofFamily::Vh3EdgeN, e, i), col, c[at(i)]);
    }
  }
  return d;
}

SparseMat Assembler::build_wh_grad() {
  const int F0 = mesh_.count_interior(2);
  SparseMat d(3 * F0, 3 * mesh_.num_tets());
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int k : mesh_.face_tets(f))
      for (int i = 0; i < 3; ++i) d.add(3 * fi + i, 3 * k + i, -mesh_.face_tet_sign(f, k));
  }
  return d;
}

SparseMat Assembler::build_wh_curl() {
  const int E0 = mesh_.count_interior(1), F0 = mesh_.count_interior(2);
  SparseMat d(3 * E0, 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int e : mesh_.face_edges(f)) {
      const int ei = mesh_.interior_index(1, e);
      if (ei < 0) continue;
      for (int i = 0; i < 3; ++i) d.add(3 * ei + i, 3 * fi + i, mesh_.edge_face_sign(e, f));
    }
  }
  return d;
}

SparseMat Assembler::build_wh_div() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(3 * mesh_.count_interior(0), 3 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const auto& ev = mesh_.edge(mesh_.interior_list(1)[at(ei)]);
    for (int a = 0; a < 2; ++a) {
      const int xi = mesh_.interior_index(0, ev[at(a)]);
      if (xi < 0) continue;
      for (int i = 0; i < 3; ++i) d.add(3 * xi + i, 3 * ei + i, a == 0 ? 1 : -1);
    }
  }
  return d;
}

SparseMat Assembler::build_s0() {
  const DofSpace vh1 = space("vh1");
  SparseMat d(vh1.dim(), 3 * mesh_.num_tets());
  for (int k = 0; k < mesh_.num_tets(); ++k)
    for (int i = 0; i < 3; ++i) d.add(vh1.index(DofFamily::CellSkw, k, i), 3 * k + i, -1);
  return d;
}

SparseMat Assembler::build_s1() {
  const DofSpace vh2 = space("vh2");
  const int F0 = mesh_.count_interior(2);
  SparseMat d(vh2.dim(), 3 * F0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    const Vec3& n = fr_.face_n[at(f)];
    const int rows[3] = {vh2.index(DofFamily::Vh2FaceNT, f, 0), vh2.index(DofFamily::Vh2FaceNT, f, 1),
                         vh2.index(DofFamily::Vh2FaceTT, f, 0)};
    for (int i = 0; i < 3; ++i) {
      const auto c = decompose_face(f, S_op(Mat3::outer(Vec3::unit(i), n)), "S");
      for (int r = 0; r < 3; ++r) d.add(rows[r], 3 * fi + i, c[at(r)]);
    }
  }
  return d;
}

SparseMat Assembler::build_s2() {
  const int E0 = mesh_.count_interior(1);
  SparseMat d(2 * E0, 3 * E0);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    for (int i = 0; i < 3; ++i) {
      // 2 vskw(e_i ⊗ t) = t × e_i
      const auto c = decompose_edge_normal(e, cross(fr_.edge_t[at(e)], Vec3::unit(i)), "2vskw");
      for (int r = 0; r < 2; ++r) d.add(2 * ei + r, 3 * ei + i, c[at(r)]);
    }
  }
  return d;
}

SparseMat Assembler::build_t1() {
  const DofSpace vh1 = space("vh1");
  SparseMat d(3 * mesh_.num_tets(), vh1.dim());
  for (int k = 0; k < mesh_.num_tets(); ++k) {
    const auto reg = regge_cell_basis(mesh_, fr_, k);
    for (int l = 0; l < 6; ++l) {
      const Vec3 w = -vskw(reg[at(l)]);
      for (int i = 0; i < 3; ++i) d.add(3 * k + i, vh1.index(DofFamily::RegEdge, mesh_.tet_edges(k)[at(l)], 0), w[i]);
    }
    for (int c = 0; c < 3; ++c) {
      const Vec3 w = -vskw(mskw(Vec3::unit(c)));
      for (int i = 0; i < 3; ++i) d.add(3 * k + i, vh1.index(DofFamily::CellSkw, k, c), w[i]);
    }
  }
  return d;
}

SparseMat Assembler::build_t2() {
  const DofSpace vh2 = space("vh2");
  const int F0 = mesh_.count_interior(2);
  SparseMat d(3 * F0, vh2.dim());
  for (int col = 0; col < vh2.dim(); ++col) {
    const DofKind& dof = vh2.dofs()[at(col)];
    const int f = dof.id;
    const int fi = mesh_.interior_index(2, f);
    const Vec3& n = fr_.face_n[at(f)];
    const Mat3 m = S_inv_op(std::get<Mat3>(payload(dof, mesh_, fr_).tensor));
    const Vec3 c = Rational(1 / dot(n, n)) * (m * n);
    ++decompositions_;
    if (!(Mat3::outer(c, n) == m))
      throw Error(ErrorKind::DecompositionResidual,
                  std::string("S^-1 of ") + dof_family_name(dof.family) + " on face " + std::to_string(f) +
                      " is not of the form c n^T");
    for (int i = 0; i < 3; ++i) d.add(3 * fi + i, col, c[i]);
  }
  return d;
}

const T3Report& Assembler::t3() {
  if (t3_) return *t3_;
  auto rep = std::make_unique<T3Report>();
  const DofSpace vh3 = space("vh3");
  const int E0 = mesh_.count_interior(1);
  rep->map = SparseMat(3 * E0, vh3.dim());
  for (int col = 0; col < vh3.dim(); ++col) {
    const DofKind& dof = vh3.dofs()[at(col)];
    const int e = dof.id;
    const int ei = mesh_.interior_index(1, e);
    const Vec3& t = fr_.edge_t[at(e)];
    const Vec3 n = std::get<Vec3>(payload(dof, mesh_, fr_).tensor);
    const Mat3 m = from_fraction(1, 2) * mskw(n);
    const Vec3 c = Rational(1 / dot(t, t)) * (m * t);
    ++decompositions_;
    ++rep->columns;
    const Mat3 residual = m - Mat3::outer(c, t);
    if (!residual.is_zero()) {
      ++rep->columns_with_residual;
      if (rep->example.empty())
        rep->example = "1/2 mskw(n_" + std::to_string(dof.local + 1) + ") on edge " + std::to_string(e) +
                       " leaves residual " + mat_text(residual);
    }
    for (int i = 0; i < 3; ++i) rep->map.add(3 * ei + i, col, c[i]);
  }
  t3_ = std::move(rep);
  return *t3_;
}

}  // namespace regge
