#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "regge/error.hpp"
#include "regge/rational.hpp"

namespace regge {

struct Vec3 {
  std::array<Rational, 3> v{};

  Vec3() = default;
  Vec3(Rational x, Rational y, Rational z) : v{std::move(x), std::move(y), std::move(z)} {}
  static Vec3 unit(int i) {
    Vec3 e;
    e[i] = 1;
    return e;
  }

  Rational& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  Vec3& operator+=(const Vec3& o);
  Vec3& operator-=(const Vec3& o);
  Vec3& operator*=(const Rational& s);
  bool is_zero() const;
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

Vec3 operator+(Vec3 a, const Vec3& b);
Vec3 operator-(Vec3 a, const Vec3& b);
Vec3 operator-(Vec3 a);
Vec3 operator*(const Rational& s, Vec3 a);
Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<Rational, 9> m{};

  static Mat3 identity();
  static Mat3 outer(const Vec3& a, const Vec3& b);  // a ⊗ b = a bᵀ

  Rational& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
  const Rational& operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }
  Vec3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }
  Vec3 col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(const Rational& s);
  bool is_zero() const;
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

Mat3 operator+(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a);
Mat3 operator*(const Rational& s, Mat3 a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& x);
Vec3 operator*(const Vec3& x, const Mat3& a);  // xᵀ A
Mat3 transpose(const Mat3& a);
Rational trace(const Mat3& a);
Rational frobenius(const Mat3& a, const Mat3& b);  // A : B
Rational det(const Mat3& a);
Mat3 inverse(const Mat3& a);  // throws ShapeMismatch when singular
/// Row-wise cross product: row i of the result is (row i of A) × n.
Mat3 row_cross(const Mat3& a, const Vec3& n);

// Pointwise algebra on matrix proxies.
Mat3 sym(const Mat3& a);
Mat3 skw(const Mat3& a);
Mat3 dev(const Mat3& a);
Mat3 iota(const Rational& s);
Mat3 mskw(const Vec3& v);  // mskw(v) w = v × w
Vec3 vskw(const Mat3& a);  // mskw⁻¹ ∘ skw
Mat3 S_op(const Mat3& u);     // uᵀ − tr(u) I
Mat3 S_inv_op(const Mat3& v); // vᵀ − ½ tr(v) I

enum class AlgebraicKind { Sym, Skw, Tr, Dev, Iota, Mskw, Vskw, S, Sinv };

using AlgebraicValue = std::variant<Rational, Vec3, Mat3>;

/// Dispatching front end for the pointwise maps; throws ShapeMismatch when the
/// argument shape does not match the map.
AlgebraicValue algebraic_map(AlgebraicKind kind, const AlgebraicValue& arg);
AlgebraicKind parse_algebraic_kind(const std::string& name);

/// Infinitesimal rigid motion x ↦ a + b × x. (a, b) is the canonical 6-vector.
struct RigidMotion {
  Vec3 a;
  Vec3 b;

  Vec3 operator()(const Vec3& x) const { return a + cross(b, x); }
  Vec3 curl() const { return Rational(2) * b; }
  std::array<Rational, 6> coords() const { return {a[0], a[1], a[2], b[0], b[1], b[2]}; }
  static RigidMotion from_coords(const std::array<Rational, 6>& c) {
    return {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}};
  }
  RigidMotion& operator+=(const RigidMotion& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const RigidMotion& p, const RigidMotion& q) { return p.a == q.a && p.b == q.b; }
};

RigidMotion operator*(const Rational& s, RigidMotion p);

/// {(e_i, 0)} followed by {(0, e_i)}.
std::array<RigidMotion, 6> rm_basis();
inline Vec3 rm_eval(const RigidMotion& p, const Vec3& x) { return p(x); }
inline Vec3 rm_curl(const RigidMotion& p) { return p.curl(); }

/// Deterministic small rationals for property tests and identity checks.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rational next(int max_num = 9, int max_den = 5);
  Vec3 vec();
  Mat3 mat();
  RigidMotion rm();

 private:
  std::mt19937_64 rng_;
};

}  // namespace regge
