#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "regge/homology.hpp"
#include "regge/spaces.hpp"

namespace regge {

enum class ComplexId { Regge, Twisted, VhRow, WhRow, XRm, RmAux, Ned, Nedc, P1n, P0n, Hessian, Whitney };

const std::vector<ComplexId>& all_complex_ids();
std::string complex_name(ComplexId id);
/// Throws UnknownComplex.
ComplexId parse_complex_id(const std::string& name);

/// Vertical maps between two complexes, one matrix per degree.
struct ChainMap {
  std::string name;
  std::string source;
  std::string target;
  std::vector<SparseMat> maps;
};

/// Projection of ½ mskw(n_i) onto span{c ⊗ t_e}, with what was left over.
struct T3Report {
  SparseMat map;                 // V_h³ → W_h², the projected part
  int columns = 0;
  int columns_with_residual = 0;
  std::string example;           // one residual payload, if any
  bool member() const { return columns_with_residual == 0; }
};

/// Assembles every operator of one mesh. Results are cached per instance;
/// an instance is not meant to be shared across threads.
class Assembler {
 public:
  explicit Assembler(const SimplicialComplex3& mesh);

  const SimplicialComplex3& mesh() const { return mesh_; }
  const FrameSet& frames() const { return fr_; }
  DofSpace space(const std::string& id) const { return enumerate_space(id, mesh_); }

  // Regge complex: lag → reg → reg0_dual → lag0_dual.
  const SparseMat& lag_def();
  const SparseMat& regge_inc();
  const SparseMat& regge_div();
  /// L: reg → nedc (value moments 0, derivative moments σ_e).
  const SparseMat& lift_L();
  /// K = Def∘L − id: reg → phi.
  const SparseMat& correction_K();

  // X row: x0 → x1 → x2 → x3.
  const SparseMat& x_def();
  const SparseMat& x_inc();
  const SparseMat& x_div();

  // Nedelec rows.
  const SparseMat& ned_def();     // ned → phi
  const SparseMat& phi_inc();     // phi → xhat2
  const SparseMat& xhat2_div();   // xhat2 → x3
  const SparseMat& nedc_def();    // nedc → reg+phi
  const SparseMat& nedc_inc();    // reg+phi → xhat2
  const SparseMat& regdual_in_xhat2();  // reg0_dual → xhat2

  // Embeddings into the X row (used to cross-check the Nedelec rows).
  const SparseMat& ned_in_x0();
  const SparseMat& phi_in_x1();
  const SparseMat& xhat2_in_x2();
  const SparseMat& lagdual_in_x3();

  // BGG rows.
  const SparseMat& vh_grad();   // lag → vh1
  const SparseMat& vh_curl();   // vh1 → vh2
  const SparseMat& vh_div();    // vh2 → vh3
  const SparseMat& wh_grad();   // wh0 → wh1
  const SparseMat& wh_curl();   // wh1 → wh2
  const SparseMat& wh_div();    // wh2 → wh3
  // Diagram arrows: S⁰ = −mskw, S¹ = S, S² = 2vskw.
  const SparseMat& s0();
  const SparseMat& s1();
  const SparseMat& s2();
  // T¹ = −vskw, T² = S⁻¹; T³ is reported separately.
  const SparseMat& t1();
  const SparseMat& t2();
  const T3Report& t3();

  // Auxiliary rows.
  const SparseMat& rm_aux0();   // x0 → rm_f
  const SparseMat& rm_aux1();   // rm_f → rm_e
  const SparseMat& p1n1();      // p1n_f → p1n_e
  const SparseMat& p1n2();      // p1n_e → p1n_v
  const SparseMat& p0n0();      // scalar_lag → p0n_f
  const SparseMat& p0n1();      // p0n_f → p0n_e
  const SparseMat& p0n2();      // p0n_e → p0n_v
  const SparseMat& hess0();     // scalar_lag → hess_v1
  const SparseMat& hess_curl(); // hess_v1 → hess_v2
  const SparseMat& hess_div();  // hess_v2 → hess_v3

  CochainComplex complex(ComplexId id);
  /// The complex ⊕RM over (K, F₀, E₀, V₀) with ∂ ⊗ I₆, built from the
  /// relative boundary matrices; target of κ.
  CochainComplex rm_chains();

  ChainMap kappa();      // x_rm → rm_chains
  ChainMap g();          // x_rm → rm_aux
  ChainMap j();          // nedc → p1n
  ChainMap hess_geom();  // hessian → p0n
  ChainMap ned_in_x();   // ned → x_rm

  /// Number of payload decompositions performed so far (rules 5, 7, 8, S, T).
  long decompositions() const { return decompositions_; }

 private:
  using Builder = SparseMat (Assembler::*)();
  const SparseMat& cached(const std::string& key, Builder build);

  SparseMat build_lag_def();
  SparseMat build_regge_inc();
  SparseMat build_regge_div();
  SparseMat build_lift_L();
  SparseMat build_correction_K();
  SparseMat build_x_def();
  SparseMat build_x_inc();
  SparseMat build_x_div();
  SparseMat build_ned_def();
  SparseMat build_phi_inc();
  SparseMat build_xhat2_div();
  SparseMat build_nedc_def();
  SparseMat build_nedc_inc();
  SparseMat build_regdual_in_xhat2();
  SparseMat build_ned_in_x0();
  SparseMat build_phi_in_x1();
  SparseMat build_xhat2_in_x2();
  SparseMat build_lagdual_in_x3();
  SparseMat build_vh_grad();
  SparseMat build_vh_curl();
  SparseMat build_vh_div();
  SparseMat build_wh_grad();
  SparseMat build_wh_curl();
  SparseMat build_wh_div();
  SparseMat build_s0();
  SparseMat build_s1();
  SparseMat build_s2();
  SparseMat build_t1();
  SparseMat build_t2();
  SparseMat build_rm_aux0();
  SparseMat build_rm_aux1();
  SparseMat build_p1n1();
  SparseMat build_p1n2();
  SparseMat build_p0n0();
  SparseMat build_p0n1();
  SparseMat build_p0n2();
  SparseMat build_hess0();
  SparseMat build_hess_curl();
  SparseMat build_hess_div();

  // Coefficients of P in {n⊗t₁, n⊗t₂, (n·n)I − nnᵀ}; DecompositionResidual
  // if P is outside that span.
  std::array<Rational, 3> decompose_face(int f, const Mat3& p, const char* what);
  // Coefficients of v in {n₁ᵉ, n₂ᵉ}; DecompositionResidual if v·t_e ≠ 0.
  std::array<Rational, 2> decompose_edge_normal(int e, const Vec3& v, const char* what);
  // Scalar α with ⟦grad u⟧ = α n_f, per scalar_lag column.
  std::map<int, Rational> normal_jump_scalar(int f);

  const SimplicialComplex3& mesh_;
  FrameSet fr_;
  std::map<std::string, SparseMat> cache_;
  std::unique_ptr<T3Report> t3_;
  long decompositions_ = 0;
};

/// MatrixMarket-style coordinate text, 1-based, entries as p/q.
void write_matrix(std::ostream& out, const SparseMat& m);

}  // namespace regge
