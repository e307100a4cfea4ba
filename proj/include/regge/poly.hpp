#pragma once

#include <array>
#include <map>

#include "regge/smallalg.hpp"

namespace regge {

/// Polynomial in three variables with exact coefficients. Used both for fields
/// in (x, y, z) and, after affine substitution, in reference-simplex
/// coordinates (s₀, s₁, s₂).
class Poly {
 public:
  using Exponent = std::array<int, 3>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor): constants promote
  static Poly monomial(const Exponent& e, const Rational& c = 1);
  static Poly variable(int i) { return monomial(unit_exponent(i)); }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly derivative(int var) const;
  Rational eval(const Vec3& x) const;
  /// p(origin + Σ_k s_k dirs[k]) as a polynomial in s.
  Poly substitute(const Vec3& origin, const std::array<Vec3, 3>& dirs) const;
  /// ∫ over the reference k-simplex {s ≥ 0, Σ s ≤ 1} in the first k variables
  /// (k = 0 evaluates at the origin). Terms in unused variables must be absent.
  Rational integrate_reference(int k) const;

 private:
  static Exponent unit_exponent(int i) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return e;
  }
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

using VecPoly = std::array<Poly, 3>;

/// Row-major 3x3 matrix of polynomials.
struct MatPoly {
  std::array<Poly, 9> m{};
  Poly& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
  const Poly& operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }
  static MatPoly constant(const Mat3& a);
  Mat3 eval(const Vec3& x) const;
  MatPoly transposed() const;
  bool is_zero() const;
  friend bool operator==(const MatPoly& a, const MatPoly& b) { return a.m == b.m; }
};

MatPoly operator+(const MatPoly& a, const MatPoly& b);
MatPoly operator-(const MatPoly& a, const MatPoly& b);
MatPoly operator*(const Rational& s, const MatPoly& a);

VecPoly vec_constant(const Vec3& v);
VecPoly rm_field(const RigidMotion& p);
Vec3 eval(const VecPoly& v, const Vec3& x);
VecPoly add(const VecPoly& a, const VecPoly& b);
VecPoly scale(const Rational& s, const VecPoly& a);
Poly dot(const VecPoly& a, const VecPoly& b);
Poly dot(const VecPoly& a, const Vec3& b);

// Differential operators. Matrix operators act row-wise unless noted.
MatPoly grad(const VecPoly& u);          // (grad u)_ij = ∂_j u_i
VecPoly curl(const VecPoly& u);
Poly div(const VecPoly& u);
MatPoly curl_rows(const MatPoly& a);     // A × ∇
MatPoly curl_cols(const MatPoly& a);     // ∇ × A
VecPoly div_rows(const MatPoly& a);
MatPoly def(const VecPoly& u);           // sym grad
MatPoly inc(const MatPoly& a);           // ∇ × A × ∇
MatPoly sym(const MatPoly& a);
Poly trace(const MatPoly& a);
Poly frobenius(const MatPoly& a, const MatPoly& b);
Poly frobenius(const MatPoly& a, const Mat3& b);
VecPoly left_mul(const VecPoly& p, const MatPoly& a);  // (p·A)_j = p_l A_lj
VecPoly apply(const MatPoly& a, const Vec3& n);         // A n
Poly bilinear(const Vec3& l, const MatPoly& a, const VecPoly& r);  // lᵀ A r

/// Random polynomial of total degree ≤ degree with small rational coefficients.
Poly random_poly(RationalSampler& rng, int degree);
VecPoly random_vec_poly(RationalSampler& rng, int degree);
MatPoly random_mat_poly(RationalSampler& rng, int degree);
MatPoly random_sym_poly(RationalSampler& rng, int degree);
/// Traceless: the (2,2) entry is set to −(A₀₀ + A₁₁).
MatPoly random_traceless_poly(RationalSampler& rng, int degree);

}  // namespace regge
