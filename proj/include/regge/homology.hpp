#pragma once

#include <array>
#include <string>
#include <vector>

#include "regge/mesh.hpp"
#include "regge/sparse.hpp"

namespace regge {

/// ∂_k on chains of interior simplices: rows are interior (k−1)-simplices,
/// columns interior k-simplices, entries O(τ,σ). k = 1..3.
SparseMat relative_boundary(const SimplicialComplex3& mesh, int k);

/// dim H_k(Δ, V; ∂Δ) for k = 0..3 with V = Q^coeff_dim, using ∂ ⊗ I.
std::array<int, 4> relative_homology_dims(const SimplicialComplex3& mesh, int coeff_dim = 1);

/// b^k = dim H_{3−k}(Δ; ∂Δ), the de Rham Betti numbers of the domain.
std::array<int, 4> de_rham_betti(const SimplicialComplex3& mesh);

/// dim H_k(Δ, V; ∂Δ) = dim V · dim H_k(Δ; ∂Δ) for every k.
bool coefficient_tensor_check(const SimplicialComplex3& mesh, int coeff_dim);

/// Coboundary d^k: C^k → C^{k+1} on all simplices (transpose of the full ∂).
SparseMat absolute_coboundary(const SimplicialComplex3& mesh, int k);

/// Sequence D⁰ → D¹ → … joined by exact matrices.
struct CochainComplex {
  std::string label;
  std::vector<std::string> space_ids;
  std::vector<int> dims;
  std::vector<SparseMat> maps;  // maps[i]: D^i → D^{i+1}

  /// Checks matrix extents against dims; throws ShapeMismatch.
  void validate_shapes() const;
  /// Number of nonzero entries in each product A^{i+1} A^i.
  std::vector<std::size_t> composition_nonzeros() const;
  bool complex_property_holds() const;
};

struct DegreeReport {
  int dim = 0;
  int rank = 0;        // rank of the outgoing map
  int kernel = 0;      // dim ker of the outgoing map
  int cohomology = 0;  // kernel − rank of the incoming map
};

struct CohomologyReport {
  std::string label;
  std::vector<DegreeReport> degrees;
  std::vector<int> dims() const;
  /// Σ (−1)^i dim D^i, which must equal Σ (−1)^i dim H^i.
  long euler_spaces() const;
  long euler_cohomology() const;
};

/// Ranks every map exactly; throws ComplexPropertyViolated if AA ≠ 0.
CohomologyReport cohomology_dims(const CochainComplex& c);

}  // namespace regge
