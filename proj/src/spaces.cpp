#include "regge/spaces.hpp"

#include <sstream>

#include "regge/dense.hpp"

namespace regge {

namespace {

constexpr int kTetEdgeLocal[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct Block {
  DofFamily family;
  int dim;
  bool interior_only;
  int size;
};

// Single-family spaces; composite spaces list several blocks.
const std::map<std::string, std::vector<Block>>& space_table() {
  using F = DofFamily;
  static const std::map<std::string, std::vector<Block>> table{
      {"lag", {{F::LagNode, 0, false, 3}}},
      {"scalar_lag", {{F::ScalarLagNode, 0, false, 1}}},
      {"reg", {{F::RegEdge, 1, false, 1}}},
      {"reg0_dual", {{F::RegDualEdge, 1, true, 1}}},
      {"lag0_dual", {{F::LagDualVertex, 0, true, 3}}},
      {"ned", {{F::NedEdge, 1, false, 1}}},
      {"nedc", {{F::NedCEdge, 1, false, 2}}},
      {"cellskw", {{F::CellSkw, 3, false, 3}}},
      {"vh1", {{F::RegEdge, 1, false, 1}, {F::CellSkw, 3, false, 3}}},
      {"vh2", {{F::Vh2FaceNT, 2, true, 2}, {F::Vh2FaceTT, 2, true, 1}}},
      {"vh3", {{F::Vh3EdgeN, 1, true, 2}}},
      {"wh0", {{F::Wh0Cell, 3, false, 3}}},
      {"wh1", {{F::Wh1Face, 2, true, 3}}},
      {"wh2", {{F::Wh2Edge, 1, true, 3}}},
      {"wh3", {{F::Wh3Vertex, 0, true, 3}}},
      {"x0", {{F::Xcell, 3, false, 6}}},
      {"x1", {{F::Phi1Face, 2, true, 6}}},
      {"x2", {{F::Phi2Edge, 1, true, 6}}},
      {"x3", {{F::Phi3Vertex, 0, true, 6}}},
      {"phi", {{F::PhiNormal, 2, true, 3}}},
      {"xhat2", {{F::XHat2, 1, true, 5}}},
      {"rm_f", {{F::RMFace, 2, true, 3}}},
      {"rm_e", {{F::RMEdge, 1, true, 1}}},
      {"p1n_f", {{F::P1nFace, 2, true, 3}}},
      {"p1n_e", {{F::P1nEdge, 1, true, 4}}},
      {"p1n_v", {{F::P1nVertex, 0, true, 3}}},
      {"p0n_f", {{F::P0nFace, 2, true, 1}}},
      {"p0n_e", {{F::P0nEdge, 1, true, 2}}},
      {"p0n_v", {{F::P0nVertex, 0, true, 3}}},
      {"hess_v1", {{F::HessV1, 2, true, 1}}},
      {"hess_v2", {{F::HessV2, 1, true, 2}}},
      {"hess_v3", {{F::HessV3, 0, true, 3}}},
      {"whitney0", {{F::Whitney, 0, false, 1}}},
      {"whitney1", {{F::Whitney, 1, false, 1}}},
      {"whitney2", {{F::Whitney, 2, false, 1}}},
      {"whitney3", {{F::Whitney, 3, false, 1}}},
      {"zero", {}},
  };
  return table;
}

std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, '+')) out.push_back(cur);
  return out;
}

RigidMotion rm_from(const DenseVec& c) { return {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}}; }

DenseVec unit_vec(std::size_t n, std::size_t i) {
  DenseVec v(n);
  v[i] = 1;
  return v;
}

std::string vec_text(const Vec3& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

}  // namespace

const char* dof_family_name(DofFamily f) {
  switch (f) {
    case DofFamily::LagNode: return "LagNode";
    case DofFamily::ScalarLagNode: return "ScalarLagNode";
    case DofFamily::RegEdge: return "RegEdge";
    case DofFamily::CellSkw: return "CellSkw";
    case DofFamily::NedEdge: return "NedEdge";
    case DofFamily::NedCEdge: return "NedCEdge";
    case DofFamily::Vh2FaceNT: return "Vh2FaceNT";
    case DofFamily::Vh2FaceTT: return "Vh2FaceTT";
    case DofFamily::Vh3EdgeN: return "Vh3EdgeN";
    case DofFamily::Wh0Cell: return "Wh0Cell";
    case DofFamily::Wh1Face: return "Wh1Face";
    case DofFamily::Wh2Edge: return "Wh2Edge";
    case DofFamily::Wh3Vertex: return "Wh3Vertex";
    case DofFamily::Xcell: return "Xcell";
    case DofFamily::Phi1Face: return "Phi1Face";
    case DofFamily::Phi2Edge: return "Phi2Edge";
    case DofFamily::Phi3Vertex: return "Phi3Vertex";
    case DofFamily::PhiNormal: return "PhiNormal";
    case DofFamily::XHat2: return "XHat2";
    case DofFamily::RMFace: return "RMFace";
    case DofFamily::RMEdge: return "RMEdge";
    case DofFamily::P1nFace: return "P1nFace";
    case DofFamily::P1nEdge: return "P1nEdge";
    case DofFamily::P1nVertex: return "P1nVertex";
    case DofFamily::P0nFace: return "P0nFace";
    case DofFamily::P0nEdge: return "P0nEdge";
    case DofFamily::P0nVertex: return "P0nVertex";
    case DofFamily::HessV1: return "HessV1";
    case DofFamily::HessV2: return "HessV2";
    case DofFamily::HessV3: return "HessV3";
    case DofFamily::RegDualEdge: return "RegDualEdge";
    case DofFamily::LagDualVertex: return "LagDualVertex";
    case DofFamily::Whitney: return "Whitney";
  }
  return "?";
}

DofSpace::DofSpace(std::string id, std::vector<DofKind> dofs) : id_(std::move(id)), dofs_(std::move(dofs)) {
  for (std::size_t i = 0; i < dofs_.size(); ++i) {
    const auto& d = dofs_[i];
    index_.emplace(std::make_tuple(static_cast<int>(d.family), d.id, d.local), static_cast<int>(i));
  }
}

int DofSpace::index(DofFamily family, int id, int local) const {
  const auto it = index_.find(std::make_tuple(static_cast<int>(family), id, local));
  if (it == index_.end())
    throw Error(ErrorKind::UnknownSpace, std::string(dof_family_name(family)) + "(" + std::to_string(id) + "," +
                                             std::to_string(local) + ") is not a basis functional of " + id_);
  return it->second;
}

bool DofSpace::contains(DofFamily family, int id, int local) const {
  return index_.count(std::make_tuple(static_cast<int>(family), id, local)) != 0;
}

const std::vector<std::string>& space_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : space_table()) out.push_back(k);
    return out;
  }();
  return ids;
}

DofSpace enumerate_space(const std::string& space_id, const SimplicialComplex3& mesh) {
  std::vector<DofKind> dofs;
  for (const std::string& part : split_plus(space_id)) {
    const auto it = space_table().find(part);
    if (it == space_table().end()) throw Error(ErrorKind::UnknownSpace, "'" + part + "'");
    for (const Block& b : it->second) {
      std::vector<int> ids;
      if (b.interior_only) {
        ids = mesh.interior_list(b.dim);
      } else {
        for (int i = 0; i < mesh.count(b.dim); ++i) ids.push_back(i);
      }
      for (int id : ids)
        for (int l = 0; l < b.size; ++l) dofs.push_back({b.family, b.dim, id, l});
    }
  }
  return DofSpace(space_id, std::move(dofs));
}

FieldVector zero_field(const DofSpace& space) {
  return {space.id(), std::vector<Rational>(static_cast<std::size_t>(space.dim()))};
}

Vec3 edge_midpoint(const SimplicialComplex3& mesh, int e) {
  const auto& ev = mesh.edge(e);
  return from_fraction(1, 2) * (mesh.point(ev[0]) + mesh.point(ev[1]));
}

RigidMotion phi_normal_rm(const SimplicialComplex3& mesh, const FrameSet& fr, int f, int j) {
  const Vec3& n = fr.face_n[static_cast<std::size_t>(f)];
  const auto basis = rm_basis();
  DenseMat a;
  DenseVec rhs;
  for (int v = 0; v < 3; ++v) {
    const Vec3& x = mesh.point(mesh.face(f)[static_cast<std::size_t>(v)]);
    for (int c = 0; c < 3; ++c) {
      DenseVec row(6);
      for (std::size_t i = 0; i < 6; ++i) row[i] = basis[i](x)[c];
      a.push_back(row);
      rhs.push_back(v == j ? n[c] : Rational(0));
    }
  }
  const auto sol = dense_solve(a, rhs);
  if (!sol) throw Error(ErrorKind::DecompositionResidual, "no rigid motion with normal trace on face " + std::to_string(f));
  return rm_from(*sol);
}

std::array<RigidMotion, 5> xhat2_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int e) {
  const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
  const Vec3 x0c = cross(mesh.point(mesh.edge(e)[0]), t);
  // (a + b × x₀)·t = a·t + b·(x₀ × t)
  const DenseMat constraint{{t[0], t[1], t[2], x0c[0], x0c[1], x0c[2]}};
  const auto ns = dense_nullspace(constraint, 6);
  std::array<RigidMotion, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = rm_from(ns[i]);
  return out;
}

std::array<Rational, 5> xhat2_coords(const SimplicialComplex3& mesh, const FrameSet& fr, int e,
                                     const RigidMotion& p) {
  const auto basis = xhat2_basis(mesh, fr, e);
  DenseMat a(6, DenseVec(5));
  for (std::size_t j = 0; j < 5; ++j) {
    const auto c = basis[j].coords();
    for (std::size_t i = 0; i < 6; ++i) a[i][j] = c[i];
  }
  const auto pc = p.coords();
  const auto sol = dense_solve(a, DenseVec(pc.begin(), pc.end()));
  if (!sol)
    throw Error(ErrorKind::DecompositionResidual,
                "rigid motion has a tangential component on edge " + std::to_string(e));
  std::array<Rational, 5> out;
  for (std::size_t j = 0; j < 5; ++j) out[j] = (*sol)[j];
  return out;
}

RigidMotion regdual_rm(const SimplicialComplex3& mesh, const FrameSet& fr, int e) {
  const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
  return {cross(mesh.point(mesh.edge(e)[0]), t), t};
}

std::array<Mat3, 6> regge_cell_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int k) {
  // Unknowns (s00, s11, s22, s01, s02, s12).
  DenseMat a;
  for (int e : mesh.tet_edges(k)) {
    const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
    a.push_back({t[0] * t[0], t[1] * t[1], t[2] * t[2], 2 * t[0] * t[1], 2 * t[0] * t[2], 2 * t[1] * t[2]});
  }
  std::array<Mat3, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto s = dense_solve(a, unit_vec(6, i));
    if (!s) throw Error(ErrorKind::DegenerateTet, "Regge moments are singular on cell " + std::to_string(k));
    Mat3 m;
    const auto& v = *s;
    m(0, 0) = v[0];
    m(1, 1) = v[1];
    m(2, 2) = v[2];
    m(0, 1) = m(1, 0) = v[3];
    m(0, 2) = m(2, 0) = v[4];
    m(1, 2) = m(2, 1) = v[5];
    out[i] = m;
  }
  return out;
}

std::array<RigidMotion, 6> ned_cell_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int k) {
  const auto basis = rm_basis();
  DenseMat a;
  for (int e : mesh.tet_edges(k)) {
    const Vec3 mid = edge_midpoint(mesh, e);
    const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
    DenseVec row(6);
    for (std::size_t c = 0; c < 6; ++c) row[c] = dot(basis[c](mid), t);
    a.push_back(row);
  }
  std::array<RigidMotion, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto s = dense_solve(a, unit_vec(6, i));
    if (!s) throw Error(ErrorKind::DegenerateTet, "Nedelec moments are singular on cell " + std::to_string(k));
    out[i] = rm_from(*s);
  }
  return out;
}

std::array<Vec3, 4> nedc_cell_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int k, int i, int m) {
  // Tangential values u(v₀)·t = D1 − D2/2 and u(v₁)·t = D1 + D2/2.
  const Rational at0 = m == 0 ? Rational(1) : from_fraction(-1, 2);
  const Rational at1 = m == 0 ? Rational(1) : from_fraction(1, 2);
  const auto& edges = mesh.tet_edges(k);
  std::array<Vec3, 4> out;
  for (int a = 0; a < 4; ++a) {
    DenseMat rows;
    DenseVec rhs;
    for (int l = 0; l < 6; ++l) {
      const int p = kTetEdgeLocal[l][0], q = kTetEdgeLocal[l][1];
      if (p != a && q != a) continue;
      const Vec3& t = fr.edge_t[static_cast<std::size_t>(edges[static_cast<std::size_t>(l)])];
      rows.push_back({t[0], t[1], t[2]});
      rhs.push_back(l != i ? Rational(0) : (p == a ? at0 : at1));
    }
    const auto s = dense_solve(rows, rhs);
    if (!s) throw Error(ErrorKind::DegenerateTet, "vertex frame is singular on cell " + std::to_string(k));
    out[static_cast<std::size_t>(a)] = {(*s)[0], (*s)[1], (*s)[2]};
  }
  return out;
}

Payload payload(const DofKind& d, const SimplicialComplex3& mesh, const FrameSet& fr) {
  using F = DofFamily;
  Payload p;
  p.simplex = mesh.simplex(d.dim, d.id);
  const auto idx = static_cast<std::size_t>(d.id);
  const auto ei = [&] { return Vec3::unit(d.local); };
  switch (d.family) {
    case F::LagNode:
    case F::LagDualVertex:
    case F::Wh3Vertex:
    case F::HessV3:
    case F::P1nVertex:
    case F::P0nVertex:
    case F::Wh0Cell:
      p.tensor = ei();
      p.description = std::string(dof_family_name(d.family)) + " component " + std::to_string(d.local);
      break;
    case F::ScalarLagNode:
    case F::Whitney:
    case F::NedEdge:
    case F::NedCEdge:
      p.tensor = Rational(1);
      p.description = d.family == F::NedCEdge ? (d.local == 0 ? "value moment" : "derivative moment")
                                               : dof_family_name(d.family);
      break;
    case F::RegEdge:
    case F::RegDualEdge:
      p.tensor = Mat3::outer(fr.edge_t[idx], fr.edge_t[idx]);
      p.description = "t_e t_e^T";
      break;
    case F::CellSkw:
      p.tensor = mskw(ei());
      p.description = "mskw(e_" + std::to_string(d.local) + ")";
      break;
    case F::Vh2FaceNT:
      p.tensor = Mat3::outer(fr.face_n[idx], d.local == 0 ? fr.face_t1[idx] : fr.face_t2[idx]);
      p.description = "n_f (x) t_" + std::to_string(d.local + 1);
      break;
    case F::Vh2FaceTT: {
      const Vec3& n = fr.face_n[idx];
      p.tensor = dot(n, n) * Mat3::identity() - Mat3::outer(n, n);
      p.description = "(n.n) I - n n^T";
      break;
    }
    case F::Vh3EdgeN:
    case F::P0nEdge:
      p.tensor = d.local == 0 ? fr.edge_n1[idx] : fr.edge_n2[idx];
      p.description = "n_" + std::to_string(d.local + 1) + "^e";
      break;
    case F::P1nEdge:
      p.tensor = (d.local % 2 == 0) ? fr.edge_n1[idx] : fr.edge_n2[idx];
      p.description = "n_" + std::to_string(d.local % 2 + 1) + "^e at endpoint " + std::to_string(d.local / 2);
      break;
    case F::HessV2:
      p.tensor = Mat3::outer(d.local == 0 ? fr.edge_n1[idx] : fr.edge_n2[idx], fr.edge_t[idx]);
      p.description = "n_" + std::to_string(d.local + 1) + "^e (x) t_e";
      break;
    case F::Wh1Face:
      p.tensor = Mat3::outer(ei(), fr.face_n[idx]);
      p.description = "e_" + std::to_string(d.local) + " (x) n_f";
      break;
    case F::Wh2Edge:
      p.tensor = Mat3::outer(ei(), fr.edge_t[idx]);
      p.description = "e_" + std::to_string(d.local) + " (x) t_e";
      break;
    case F::HessV1:
      p.tensor = Mat3::outer(fr.face_n[idx], fr.face_n[idx]);
      p.description = "n_f n_f^T";
      break;
    case F::P0nFace:
      p.tensor = fr.face_n[idx];
      p.description = "n_f";
      break;
    case F::P1nFace:
      p.tensor = fr.face_n[idx];
      p.description = "lambda_" + std::to_string(d.local) + " n_f";
      break;
    case F::Xcell:
    case F::Phi1Face:
    case F::Phi2Edge:
    case F::Phi3Vertex:
      p.tensor = rm_basis()[static_cast<std::size_t>(d.local)];
      p.description = std::string(dof_family_name(d.family)) + " rigid motion " + std::to_string(d.local);
      break;
    case F::PhiNormal:
      p.tensor = phi_normal_rm(mesh, fr, d.id, d.local);
      p.description = "phi1 of lambda_" + std::to_string(d.local) + " n_f";
      break;
    case F::XHat2:
      p.tensor = xhat2_basis(mesh, fr, d.id)[static_cast<std::size_t>(d.local)];
      p.description = "phi2 of a rigid motion normal to e";
      break;
    case F::RMFace: {
      const int e = mesh.face_edges(d.id)[static_cast<std::size_t>(d.local)];
      p.tensor = fr.edge_t[static_cast<std::size_t>(e)];
      p.description = "tangential moment at the midpoint of edge " + std::to_string(e);
      break;
    }
    case F::RMEdge:
      p.tensor = fr.edge_t[idx];
      p.description = "p . t_e";
      break;
  }
  if (const auto* v = std::get_if<Vec3>(&p.tensor); v && p.description.empty()) p.description = vec_text(*v);
  return p;
}

}  // namespace regge
