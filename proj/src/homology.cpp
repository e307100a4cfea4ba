#include "regge/homology.hpp"

namespace regge {

SparseMat relative_boundary(const SimplicialComplex3& mesh, int k) {
  if (k < 1 || k > 3) throw Error(ErrorKind::DimMismatch, "relative boundary degree " + std::to_string(k));
  const auto& rows = mesh.interior_list(k - 1);
  const auto& cols = mesh.interior_list(k);
  SparseMat d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::vector<int> sigma = mesh.vertices_of(k, cols[j]);
    for (std::size_t del = 0; del < sigma.size(); ++del) {
      std::vector<int> tau = sigma;
      tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(del));
      const int r = mesh.interior_index(k - 1, mesh.lookup(tau));
      if (r >= 0) d.add(r, static_cast<int>(j), incidence(tau, sigma));
    }
  }
  return d;
}

std::array<int, 4> relative_homology_dims(const SimplicialComplex3& mesh, int coeff_dim) {
  if (coeff_dim < 1) throw Error(ErrorKind::InvalidParams, "coefficient dimension must be positive");
  std::array<int, 5> rank{};  // rank[k] = rank ∂_k, with ∂_0 = ∂_4 = 0
  for (int k = 1; k <= 3; ++k) {
    const SparseMat d = relative_boundary(mesh, k);
    rank[static_cast<std::size_t>(k)] = rank_exact(coeff_dim == 1 ? d : d.kron_identity(coeff_dim));
  }
  std::array<int, 4> h{};
  for (std::size_t k = 0; k < 4; ++k)
    h[k] = coeff_dim * mesh.count_interior(static_cast<int>(k)) - rank[k] - rank[k + 1];
  return h;
}

std::array<int, 4> de_rham_betti(const SimplicialComplex3& mesh) {
  const auto h = relative_homology_dims(mesh);
  return {h[3], h[2], h[1], h[0]};
}

bool coefficient_tensor_check(const SimplicialComplex3& mesh, int coeff_dim) {
  const auto plain = relative_homology_dims(mesh, 1);
  const auto lifted = relative_homology_dims(mesh, coeff_dim);
  for (std::size_t k = 0; k < 4; ++k)
    if (lifted[k] != coeff_dim * plain[k]) return false;
  return true;
}

SparseMat absolute_coboundary(const SimplicialComplex3& mesh, int k) {
  if (k < 0 || k > 2) throw Error(ErrorKind::DimMismatch, "coboundary degree " + std::to_string(k));
  SparseMat d(mesh.count(k + 1), mesh.count(k));
  for (int s = 0; s < mesh.count(k + 1); ++s) {
    const std::vector<int> sigma = mesh.vertices_of(k + 1, s);
    for (std::size_t del = 0; del < sigma.size(); ++del) {
      std::vector<int> tau = sigma;
      tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(del));
      d.add(s, mesh.lookup(tau), incidence(tau, sigma));
    }
  }
  return d;
}

void CochainComplex::validate_shapes() const {
  if (space_ids.size() != dims.size() || maps.size() + 1 != dims.size())
    throw Error(ErrorKind::ShapeMismatch, label + ": space and map counts disagree");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1])
      throw Error(ErrorKind::ShapeMismatch, label + ": map " + std::to_string(i) + " is " +
                                                std::to_string(maps[i].rows()) + "x" + std::to_string(maps[i].cols()) +
                                                ", expected " + std::to_string(dims[i + 1]) + "x" +
                                                std::to_string(dims[i]));
}

std::vector<std::size_t> CochainComplex::composition_nonzeros() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) out.push_back((maps[i + 1] * maps[i]).nnz());
  return out;
}

bool CochainComplex::complex_property_holds() const {
  for (std::size_t n : composition_nonzeros())
    if (n != 0) return false;
  return true;
}

std::vector<int> CohomologyReport::dims() const {
  std::vector<int> out;
  for (const auto& d : degrees) out.push_back(d.cohomology);
  return out;
}

long CohomologyReport::euler_spaces() const {
  long s = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * degrees[i].dim;
  return s;
}

long CohomologyReport::euler_cohomology() const {
  long s = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * degrees[i].cohomology;
  return s;
}

CohomologyReport cohomology_dims(const CochainComplex& c) {
  c.validate_shapes();
  const auto nz = c.composition_nonzeros();
  for (std::size_t i = 0; i < nz.size(); ++i)
    if (nz[i] != 0)
      throw Error(ErrorKind::ComplexPropertyViolated, c.label + ": A" + std::to_string(i + 1) + " A" +
                                                          std::to_string(i) + " has " + std::to_string(nz[i]) +
                                                          " nonzero entries");
  CohomologyReport r{c.label, {}};
  int incoming = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    DegreeReport d;
    d.dim = c.dims[i];
    d.rank = i < c.maps.size() ? rank_exact(c.maps[i]) : 0;
    d.kernel = d.dim - d.rank;
    d.cohomology = d.kernel - incoming;
    incoming = d.rank;
    r.degrees.push_back(d);
  }
  return r;
}

}  // namespace regge
