#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "regge/smallalg.hpp"

namespace regge {

using Point3 = Vec3;

/// A simplex by its sorted global vertex tuple. `interior` is false iff the
/// simplex lies in the boundary of the triangulation.
struct Simplex {
  int dim = 0;
  std::vector<int> vertices;
  bool interior = false;
};

/// Oriented tetrahedral mesh. Simplices are stored with sorted vertex tuples
/// (the canonical orientation); each tet additionally records the sign of its
/// volume in sorted order. Immutable once built.
class SimplicialComplex3 {
 public:
  static SimplicialComplex3 build(std::vector<Point3> vertices, const std::vector<std::array<int, 4>>& tets);

  int num_vertices() const { return static_cast<int>(points_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_tets() const { return static_cast<int>(tets_.size()); }
  int count(int dim) const;
  int count_interior(int dim) const;

  const Point3& point(int v) const { return points_[static_cast<std::size_t>(v)]; }
  const std::array<int, 2>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::array<int, 3>& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
  const std::array<int, 4>& tet(int k) const { return tets_[static_cast<std::size_t>(k)]; }
  /// Sign of det[v1−v0, v2−v0, v3−v0] in sorted order.
  int orientation(int k) const { return orient_[static_cast<std::size_t>(k)]; }
  /// Vertex order with positive signed volume.
  std::array<int, 4> oriented_tet(int k) const;
  Rational signed_volume6(int k) const;  // 6 × volume in sorted order

  /// Sorted vertex tuple of the simplex (dim, id).
  std::vector<int> vertices_of(int dim, int id) const;
  Simplex simplex(int dim, int id) const;
  bool interior(int dim, int id) const;
  /// Position among the interior simplices of that dimension, or −1.
  int interior_index(int dim, int id) const;
  const std::vector<int>& interior_list(int dim) const { return interior_ids_[static_cast<std::size_t>(dim)]; }

  // Local sub-simplices: entry j deletes local vertex j, except tet_edges,
  // which lists (01, 02, 03, 12, 13, 23).
  const std::array<int, 4>& tet_faces(int k) const { return tet_faces_[static_cast<std::size_t>(k)]; }
  const std::array<int, 6>& tet_edges(int k) const { return tet_edges_[static_cast<std::size_t>(k)]; }
  const std::array<int, 3>& face_edges(int f) const { return face_edges_[static_cast<std::size_t>(f)]; }

  const std::vector<int>& face_tets(int f) const { return face_tets_[static_cast<std::size_t>(f)]; }
  const std::vector<int>& edge_faces(int e) const { return edge_faces_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& edge_tets(int e) const { return edge_tets_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& vertex_tets(int v) const { return vertex_tets_[static_cast<std::size_t>(v)]; }

  int find_edge(int a, int b) const;          // −1 if absent
  int find_face(int a, int b, int c) const;   // −1 if absent
  /// Id of a simplex given by any vertex tuple; throws UnknownSimplex.
  int lookup(const std::vector<int>& vertices) const;

  /// All tets containing σ; throws UnknownSimplex.
  std::vector<int> star(const Simplex& sigma) const;
  /// Connected components of the vertex-edge graph.
  int num_components() const;

  // Geometric orientation signs (computed from coordinates, not from O).
  /// +1 when n_f points out of K.
  int face_tet_sign(int f, int k) const;
  /// +1 when t_e runs counter-clockwise around n_f.
  int edge_face_sign(int e, int f) const;

 private:
  std::vector<Point3> points_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<int> orient_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> faces_;
  std::map<std::array<int, 2>, int> edge_index_;
  std::map<std::array<int, 3>, int> face_index_;
  std::map<std::array<int, 4>, int> tet_index_;
  std::vector<std::array<int, 4>> tet_faces_;
  std::vector<std::array<int, 6>> tet_edges_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<std::vector<int>> face_tets_, edge_faces_, edge_tets_, vertex_edges_, vertex_tets_;
  std::array<std::vector<bool>, 4> interior_;
  std::array<std::vector<int>, 4> interior_pos_;
  std::array<std::vector<int>, 4> interior_ids_;
};

/// O(τ,σ) = (−1)^{j+1} when τ is σ with its j-th sorted vertex deleted, 0 if τ
/// is not a facet of σ. Throws DimMismatch unless dim τ = dim σ − 1.
int incidence(const Simplex& tau, const Simplex& sigma);
int incidence(const std::vector<int>& tau, const std::vector<int>& sigma);

/// Scaled (never normalized) local frames.
struct FrameSet {
  std::vector<Vec3> edge_t, edge_n1, edge_n2;
  std::vector<Vec3> face_n, face_t1, face_t2;
};

FrameSet frames(const SimplicialComplex3& mesh);

enum class MeshKind { Tet, TwoTet, Box, Tunnel, Cavity };

struct MeshSpec {
  MeshKind kind = MeshKind::Tet;
  int nx = 1, ny = 1, nz = 1;  // box only
};

SimplicialComplex3 generate_mesh(const MeshSpec& spec);
/// "tet", "twotet", "tunnel", "cavity", "box:NX,NY,NZ"; throws InvalidParams.
MeshSpec parse_mesh_spec(const std::string& text);
bool is_mesh_spec(const std::string& text);
std::string mesh_spec_name(const MeshSpec& spec);

/// Mesh text format v1.
SimplicialComplex3 read_mesh(std::istream& in);
SimplicialComplex3 read_mesh_file(const std::string& path);
void write_mesh(std::ostream& out, const SimplicialComplex3& mesh);
/// A generator spec if it parses as one, otherwise a file path.
SimplicialComplex3 load_mesh(const std::string& source);

}  // namespace regge
