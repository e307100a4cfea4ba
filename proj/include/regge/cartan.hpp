#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "regge/assembly.hpp"

namespace regge {

/// Linearized Riemann–Cartan quantities on one mesh, read off the twisted
/// complex: θ ∈ V_h¹ (coframe), Γ ∈ W_h¹ (connection), T ∈ V_h², R ∈ W_h².
class Cartan {
 public:
  explicit Cartan(Assembler& a) : a_(a) {}

  struct Fields {
    FieldVector first;   // θ or T
    FieldVector second;  // Γ or R
  };

  /// T = curl θ − S Γ, R = curl Γ, i.e. (T, R) = A¹(θ, Γ). Throws DimensionMismatch.
  Fields torsion_curvature(const FieldVector& theta, const FieldVector& gamma);

  /// (A²)(T, R); zero for every output of torsion_curvature.
  Fields bianchi(const FieldVector& torsion, const FieldVector& curvature);

  /// inc σ for the Regge field with the given edge values.
  FieldVector regge_metric_curvature(const std::vector<Rational>& edge_data);

  struct Potential {
    bool solved = false;
    Fields solution;                 // (θ, Γ) when solved
    std::string reason;              // "closedness" or "cohomology" when not
    std::vector<Rational> witness;   // A²(T,R), or y with yᵀA¹ = 0 and y·(T,R) ≠ 0
  };

  /// Any (θ, Γ) with A¹(θ, Γ) = (T, R), or a certificate that none exists.
  Potential potential_solve(const FieldVector& torsion, const FieldVector& curvature);

  DofSpace theta_space() const { return a_.space("vh1"); }
  DofSpace gamma_space() const { return a_.space("wh1"); }
  DofSpace torsion_space() const { return a_.space("vh2"); }
  DofSpace curvature_space() const { return a_.space("wh2"); }

 private:
  const SparseMat& a1();
  const SparseMat& a2();

  Assembler& a_;
  std::optional<CochainComplex> twisted_;
};

/// {"space": id, "coefficients": ["p/q", ...]}
nlohmann::json field_to_json(const FieldVector& f);
/// Throws Parse on malformed input.
FieldVector field_from_json(const nlohmann::json& j);

/// Throws DimensionMismatch naming the space and its expected dimension.
void require_field(const FieldVector& f, const DofSpace& space);

}  // namespace regge
