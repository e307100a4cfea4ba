#include "regge/mesh.hpp"

#include <algorithm>
#include <numeric>

namespace regge {

namespace {

constexpr std::array<std::array<int, 2>, 6> kTetEdgeLocal{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::string tuple_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

template <std::size_t N>
std::vector<int> as_vector(const std::array<int, N>& a) {
  return {a.begin(), a.end()};
}

}  // namespace

SimplicialComplex3 SimplicialComplex3::build(std::vector<Point3> vertices, const std::vector<std::array<int, 4>>& tets) {
  if (tets.empty()) throw Error(ErrorKind::InvalidParams, "mesh needs at least one tetrahedron");
  SimplicialComplex3 m;
  m.points_ = std::move(vertices);
  const int nv = m.num_vertices();
  std::vector<bool> used(static_cast<std::size_t>(nv), false);

  for (std::size_t t = 0; t < tets.size(); ++t) {
    std::array<int, 4> s = tets[t];
    for (int v : s) {
      if (v < 0 || v >= nv)
        throw Error(ErrorKind::IndexOutOfRange,
                    "tet " + std::to_string(t) + " references vertex " + std::to_string(v));
      used[static_cast<std::size_t>(v)] = true;
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::DegenerateTet, "tet " + std::to_string(t) + " repeats a vertex");
    if (!m.tet_index_.emplace(s, static_cast<int>(t)).second)
      throw Error(ErrorKind::DuplicateTet, "tet " + std::to_string(t) + " " + tuple_text(as_vector(s)));
    m.tets_.push_back(s);
    const Rational vol = m.signed_volume6(static_cast<int>(t));
    if (sgn(vol) == 0) throw Error(ErrorKind::DegenerateTet, "tet " + std::to_string(t) + " has zero volume");
    m.orient_.push_back(sgn(vol));
  }
  for (int v = 0; v < nv; ++v)
    if (!used[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidParams, "vertex " + std::to_string(v) + " is not used by any tetrahedron");

  const auto edge_id = [&m](int a, int b) {
    const std::array<int, 2> key{a, b};
    const auto [it, inserted] = m.edge_index_.emplace(key, m.num_edges());
    if (inserted) m.edges_.push_back(key);
    return it->second;
  };
  const auto face_id = [&m](int a, int b, int c) {
    const std::array<int, 3> key{a, b, c};
    const auto [it, inserted] = m.face_index_.emplace(key, m.num_faces());
    if (inserted) m.faces_.push_back(key);
    return it->second;
  };

  for (int k = 0; k < m.num_tets(); ++k) {
    const auto& s = m.tet(k);
    std::array<int, 6> te{};
    for (std::size_t i = 0; i < 6; ++i)
      te[i] = edge_id(s[static_cast<std::size_t>(kTetEdgeLocal[i][0])], s[static_cast<std::size_t>(kTetEdgeLocal[i][1])]);
    std::array<int, 4> tf{};
    for (std::size_t j = 0; j < 4; ++j) {
      std::array<int, 3> f{};
      std::size_t n = 0;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != j) f[n++] = s[i];
      tf[j] = face_id(f[0], f[1], f[2]);
    }
    m.tet_edges_.push_back(te);
    m.tet_faces_.push_back(tf);
  }

  m.face_tets_.assign(static_cast<std::size_t>(m.num_faces()), {});
  m.edge_faces_.assign(static_cast<std::size_t>(m.num_edges()), {});
  m.edge_tets_.assign(static_cast<std::size_t>(m.num_edges()), {});
  m.vertex_edges_.assign(static_cast<std::size_t>(nv), {});
  m.vertex_tets_.assign(static_cast<std::size_t>(nv), {});
  for (int k = 0; k < m.num_tets(); ++k) {
    for (int f : m.tet_faces(k)) m.face_tets_[static_cast<std::size_t>(f)].push_back(k);
    for (int e : m.tet_edges(k)) m.edge_tets_[static_cast<std::size_t>(e)].push_back(k);
    for (int v : m.tet(k)) m.vertex_tets_[static_cast<std::size_t>(v)].push_back(k);
  }
  for (int f = 0; f < m.num_faces(); ++f) {
    const auto& s = m.face(f);
    const std::size_t mult = m.face_tets(f).size();
    if (mult > 2)
      throw Error(ErrorKind::NonManifoldFace,
                  "face " + tuple_text(as_vector(s)) + " lies in " + std::to_string(mult) + " tetrahedra");
    const std::array<int, 3> fe{m.find_edge(s[1], s[2]), m.find_edge(s[0], s[2]), m.find_edge(s[0], s[1])};
    m.face_edges_.push_back(fe);
    for (int e : fe) m.edge_faces_[static_cast<std::size_t>(e)].push_back(f);
  }
  for (int e = 0; e < m.num_edges(); ++e)
    for (int v : m.edge(e)) m.vertex_edges_[static_cast<std::size_t>(v)].push_back(e);

  m.interior_[0].assign(static_cast<std::size_t>(nv), true);
  m.interior_[1].assign(static_cast<std::size_t>(m.num_edges()), true);
  m.interior_[2].assign(static_cast<std::size_t>(m.num_faces()), true);
  m.interior_[3].assign(static_cast<std::size_t>(m.num_tets()), true);
  for (int f = 0; f < m.num_faces(); ++f) {
    if (m.face_tets(f).size() != 1) continue;
    m.interior_[2][static_cast<std::size_t>(f)] = false;
    for (int e : m.face_edges(f)) m.interior_[1][static_cast<std::size_t>(e)] = false;
    for (int v : m.face(f)) m.interior_[0][static_cast<std::size_t>(v)] = false;
  }
  for (std::size_t d = 0; d < 4; ++d) {
    m.interior_pos_[d].assign(m.interior_[d].size(), -1);
    for (std::size_t i = 0; i < m.interior_[d].size(); ++i)
      if (m.interior_[d][i]) {
        m.interior_pos_[d][i] = static_cast<int>(m.interior_ids_[d].size());
        m.interior_ids_[d].push_back(static_cast<int>(i));
      }
  }
  return m;
}

int SimplicialComplex3::count(int dim) const {
  switch (dim) {
    case 0: return num_vertices();
    case 1: return num_edges();
    case 2: return num_faces();
    case 3: return num_tets();
    default: throw Error(ErrorKind::DimMismatch, "dimension " + std::to_string(dim));
  }
}

int SimplicialComplex3::count_interior(int dim) const {
  if (dim < 0 || dim > 3) throw Error(ErrorKind::DimMismatch, "dimension " + std::to_string(dim));
  return static_cast<int>(interior_ids_[static_cast<std::size_t>(dim)].size());
}

Rational SimplicialComplex3::signed_volume6(int k) const {
  const auto& s = tet(k);
  const Point3& p0 = point(s[0]);
  return dot(point(s[1]) - p0, cross(point(s[2]) - p0, point(s[3]) - p0));
}

std::array<int, 4> SimplicialComplex3::oriented_tet(int k) const {
  std::array<int, 4> s = tet(k);
  if (orientation(k) < 0) std::swap(s[0], s[1]);
  return s;
}

std::vector<int> SimplicialComplex3::vertices_of(int dim, int id) const {
  if (id < 0 || id >= count(dim))
    throw Error(ErrorKind::UnknownSimplex, "no simplex " + std::to_string(id) + " of dimension " + std::to_string(dim));
  switch (dim) {
    case 0: return {id};
    case 1: return as_vector(edge(id));
    case 2: return as_vector(face(id));
    default: return as_vector(tet(id));
  }
}

Simplex SimplicialComplex3::simplex(int dim, int id) const { return {dim, vertices_of(dim, id), interior(dim, id)}; }

bool SimplicialComplex3::interior(int dim, int id) const {
  if (dim < 0 || dim > 3 || id < 0 || id >= count(dim))
    throw Error(ErrorKind::UnknownSimplex, "no simplex " + std::to_string(id) + " of dimension " + std::to_string(dim));
  return interior_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(id)];
}

int SimplicialComplex3::interior_index(int dim, int id) const {
  interior(dim, id);
  return interior_pos_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(id)];
}

int SimplicialComplex3::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = edge_index_.find({a, b});
  return it == edge_index_.end() ? -1 : it->second;
}

int SimplicialComplex3::find_face(int a, int b, int c) const {
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  const auto it = face_index_.find(key);
  return it == face_index_.end() ? -1 : it->second;
}

int SimplicialComplex3::lookup(const std::vector<int>& vertices) const {
  std::vector<int> s = vertices;
  std::sort(s.begin(), s.end());
  int id = -1;
  switch (s.size()) {
    case 1: id = (s[0] >= 0 && s[0] < num_vertices()) ? s[0] : -1; break;
    case 2: id = find_edge(s[0], s[1]); break;
    case 3: id = find_face(s[0], s[1], s[2]); break;
    case 4: {
      const auto it = tet_index_.find({s[0], s[1], s[2], s[3]});
      id = it == tet_index_.end() ? -1 : it->second;
      break;
    }
    default: break;
  }
  if (id < 0) throw Error(ErrorKind::UnknownSimplex, "simplex " + tuple_text(s) + " is not in the mesh");
  return id;
}

std::vector<int> SimplicialComplex3::star(const Simplex& sigma) const {
  const int id = lookup(sigma.vertices);
  switch (sigma.vertices.size()) {
    case 1: return vertex_tets(id);
    case 2: return edge_tets(id);
    case 3: return face_tets(id);
    default: return {id};
  }
}

int SimplicialComplex3::num_components() const {
  std::vector<int> parent(static_cast<std::size_t>(num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto root = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  int comps = num_vertices();
  for (const auto& e : edges_) {
    const int a = root(e[0]);
    const int b = root(e[1]);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

int SimplicialComplex3::face_tet_sign(int f, int k) const {
  const auto& s = face(f);
  int opposite = -1;
  for (int v : tet(k))
    if (v != s[0] && v != s[1] && v != s[2]) opposite = v;
  if (opposite < 0) throw Error(ErrorKind::UnknownSimplex, "face is not part of the tetrahedron");
  const Vec3 n = cross(point(s[1]) - point(s[0]), point(s[2]) - point(s[0]));
  return sgn(dot(n, point(opposite) - point(s[0]))) < 0 ? 1 : -1;
}

int SimplicialComplex3::edge_face_sign(int e, int f) const {
  const auto& s = face(f);
  const auto& ev = edge(e);
  int opposite = -1;
  for (int v : s)
    if (v != ev[0] && v != ev[1]) opposite = v;
  if (opposite < 0) throw Error(ErrorKind::UnknownSimplex, "edge is not part of the face");
  const Vec3 n = cross(point(s[1]) - point(s[0]), point(s[2]) - point(s[0]));
  const Vec3 t = point(ev[1]) - point(ev[0]);
  return sgn(dot(cross(t, point(opposite) - point(ev[0])), n)) > 0 ? 1 : -1;
}

int incidence(const std::vector<int>& tau, const std::vector<int>& sigma) {
  if (tau.size() + 1 != sigma.size())
    throw Error(ErrorKind::DimMismatch, "incidence needs dim tau = dim sigma - 1, got " + tuple_text(tau) + " and " +
                                            tuple_text(sigma));
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    bool match = true;
    std::size_t n = 0;
    for (std::size_t i = 0; i < sigma.size() && match; ++i) {
      if (i == j) continue;
      match = tau[n++] == sigma[i];
    }
    if (match) return (j % 2 == 0) ? -1 : 1;
  }
  return 0;
}

int incidence(const Simplex& tau, const Simplex& sigma) {
  if (tau.dim + 1 != sigma.dim) throw Error(ErrorKind::DimMismatch, "incidence needs dim tau = dim sigma - 1");
  return incidence(tau.vertices, sigma.vertices);
}

FrameSet frames(const SimplicialComplex3& mesh) {
  FrameSet fr;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Vec3 t = mesh.point(mesh.edge(e)[1]) - mesh.point(mesh.edge(e)[0]);
    std::vector<Vec3> normals;
    for (int axis = 0; axis < 3 && normals.size() < 2; ++axis) {
      const Vec3 a = Vec3::unit(axis);
      if (cross(a, t).is_zero()) continue;
      Vec3 n = a - (dot(a, t) / dot(t, t)) * t;
      if (!normals.empty()) n -= (dot(n, normals[0]) / dot(normals[0], normals[0])) * normals[0];
      // An axis in span(t, n1) contributes nothing; move on to the next one.
      if (!n.is_zero()) normals.push_back(n);
    }
    fr.edge_t.push_back(t);
    fr.edge_n1.push_back(normals[0]);
    fr.edge_n2.push_back(normals[1]);
  }
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& s = mesh.face(f);
    const Vec3 t1 = mesh.point(s[1]) - mesh.point(s[0]);
    const Vec3 n = cross(t1, mesh.point(s[2]) - mesh.point(s[0]));
    fr.face_n.push_back(n);
    fr.face_t1.push_back(t1);
    fr.face_t2.push_back(cross(n, t1));
  }
  return fr;
}

}  // namespace regge
