#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "regge/mesh.hpp"

namespace regge {

/// One tag per family of basis functionals.
enum class DofFamily {
  LagNode,        // u ↦ u_i(x), all vertices
  ScalarLagNode,  // u ↦ u(x), all vertices
  RegEdge,        // σ ↦ t_eᵀ σ t_e, all edges
  CellSkw,        // coefficient of mskw(e_i) on a cell
  NedEdge,        // u ↦ ∫_e u·t_e
  NedCEdge,       // local 0: ∫_e u·t_e, local 1: ∫_e ∂_t(u·t_e)
  Vh2FaceNT,      // δ_f[n_f ⊗ t_iᶠ]
  Vh2FaceTT,      // δ_f[(n·n)I − n nᵀ], the scaled tangential identity
  Vh3EdgeN,       // δ_e[n_iᵉ]
  Wh0Cell,        // piecewise constant e_i on a cell
  Wh1Face,        // δ_f[e_i ⊗ n_f]
  Wh2Edge,        // δ_e[e_i ⊗ t_e]
  Wh3Vertex,      // δ_x[e_i]
  Xcell,          // rigid motion on a cell (sign-adjusted by the cell orientation)
  Phi1Face,       // φ¹_f[p]
  Phi2Edge,       // −φ²_e[p]
  Phi3Vertex,     // φ³_x[p]
  PhiNormal,      // φ¹_f[p_j], p_j|_f = λ_j n_f
  XHat2,          // −φ²_e[p] for the j-th basis vector of {p : p·t_e = 0 on e}
  RMFace,         // edge moment (Π_f p)(mid)·t for the j-th edge of f
  RMEdge,         // p·t_e
  P1nFace,        // coefficient of λ_j n_f
  P1nEdge,        // local 2a+i: coefficient of n_iᵉ at endpoint a
  P1nVertex,      // component i at a vertex
  P0nFace,        // coefficient of n_f
  P0nEdge,        // coefficient of n_iᵉ
  P0nVertex,      // component i
  HessV1,         // δ_f[n_f n_fᵀ]
  HessV2,         // δ_e[n_iᵉ ⊗ t_e]
  HessV3,         // δ_x[e_i]
  RegDualEdge,    // ∫_e t_eᵀ σ t_e on interior edges
  LagDualVertex,  // δ_x[e_i] on interior vertices
  Whitney,        // lowest-order Whitney form of any simplex
};

const char* dof_family_name(DofFamily f);

struct DofKind {
  DofFamily family;
  int dim;    // dimension of the carrying simplex
  int id;     // global simplex id
  int local;  // index within the simplex block
  friend bool operator==(const DofKind& a, const DofKind& b) {
    return a.family == b.family && a.dim == b.dim && a.id == b.id && a.local == b.local;
  }
};

/// Ordered basis of a space. Composite ids like "reg+phi" concatenate.
class DofSpace {
 public:
  DofSpace() = default;
  DofSpace(std::string id, std::vector<DofKind> dofs);

  const std::string& id() const { return id_; }
  int dim() const { return static_cast<int>(dofs_.size()); }
  const std::vector<DofKind>& dofs() const { return dofs_; }
  const DofKind& operator[](int i) const { return dofs_[static_cast<std::size_t>(i)]; }
  /// Position of a basis functional; throws UnknownSpace if absent.
  int index(DofFamily family, int id, int local = 0) const;
  bool contains(DofFamily family, int id, int local = 0) const;

 private:
  std::string id_;
  std::vector<DofKind> dofs_;
  std::map<std::tuple<int, int, int>, int> index_;
};

/// Known space ids, in a stable order.
const std::vector<std::string>& space_ids();

/// Throws UnknownSpace for anything not in space_ids() (or a '+'-join of them).
DofSpace enumerate_space(const std::string& space_id, const SimplicialComplex3& mesh);

struct FieldVector {
  std::string space;
  std::vector<Rational> coefficients;
};

/// Zero field of the right length.
FieldVector zero_field(const DofSpace& space);

/// Explicit description of one basis functional.
struct Payload {
  Simplex simplex;
  std::variant<std::monostate, Rational, Vec3, Mat3, RigidMotion> tensor;
  std::string description;
};

Payload payload(const DofKind& dof, const SimplicialComplex3& mesh, const FrameSet& fr);

// Per-simplex constructions shared by assembly and tests.

/// Rigid motion p with p|_f = λ_j n_f, j indexing the sorted vertices of f.
RigidMotion phi_normal_rm(const SimplicialComplex3& mesh, const FrameSet& fr, int f, int j);

/// Basis of {p ∈ RM : p·t_e = 0 on e}, by exact nullspace.
std::array<RigidMotion, 5> xhat2_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int e);

/// Coordinates of p (which must satisfy p·t_e = 0 on e) in xhat2_basis;
/// throws DecompositionResidual otherwise.
std::array<Rational, 5> xhat2_coords(const SimplicialComplex3& mesh, const FrameSet& fr, int e,
                                     const RigidMotion& p);

/// t_e × (y − v₀): vanishes on e, curl 2t_e.
RigidMotion regdual_rm(const SimplicialComplex3& mesh, const FrameSet& fr, int e);

/// Symmetric constant matrices σ_i on cell K with t_jᵀ σ_i t_j = δ_ij over
/// the six cell edges (tet_edges order).
std::array<Mat3, 6> regge_cell_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int k);

/// Rigid motions w_i on cell K with w_i(mid_j)·t_j = δ_ij.
std::array<RigidMotion, 6> ned_cell_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int k);

/// Values at the sorted vertices of cell K of the Ned^c
/// basis function for local edge i and moment m on cell K.
std::array<Vec3, 4> nedc_cell_basis(const SimplicialComplex3& mesh, const FrameSet& fr, int k, int i, int m);

/// Midpoint of an edge.
Vec3 edge_midpoint(const SimplicialComplex3& mesh, int e);

}  // namespace regge
