#include "regge/smallalg.hpp"

namespace regge {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateTet: return "DegenerateTet";
    case ErrorKind::NonManifoldFace: return "NonManifoldFace";
    case ErrorKind::DuplicateTet: return "DuplicateTet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::UnknownSimplex: return "UnknownSimplex";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::ComplexPropertyViolated: return "ComplexPropertyViolated";
    case ErrorKind::UnknownSpace: return "UnknownSpace";
    case ErrorKind::UnknownComplex: return "UnknownComplex";
    case ErrorKind::DecompositionResidual: return "DecompositionResidual";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

Vec3& Vec3::operator+=(const Vec3& o) {
  for (int i = 0; i < 3; ++i) (*this)[i] += o[i];
  return *this;
}
Vec3& Vec3::operator-=(const Vec3& o) {
  for (int i = 0; i < 3; ++i) (*this)[i] -= o[i];
  return *this;
}
Vec3& Vec3::operator*=(const Rational& s) {
  for (auto& x : v) x *= s;
  return *this;
}
bool Vec3::is_zero() const {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
Vec3 operator-(Vec3 a) { return a *= Rational(-1); }
Vec3 operator*(const Rational& s, Vec3 a) { return a *= s; }
Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r(i, i) = 1;
  return r;
}
Mat3 Mat3::outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}
Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) m[i] += o.m[i];
  return *this;
}
Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) m[i] -= o.m[i];
  return *this;
}
Mat3& Mat3::operator*=(const Rational& s) {
  for (auto& x : m) x *= s;
  return *this;
}
bool Mat3::is_zero() const {
  for (const auto& x : m)
    if (sgn(x) != 0) return false;
  return true;
}

Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
Mat3 operator-(Mat3 a) { return a *= Rational(-1); }
Mat3 operator*(const Rational& s, Mat3 a) { return a *= s; }
Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}
Vec3 operator*(const Mat3& a, const Vec3& x) { return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)}; }
Vec3 operator*(const Vec3& x, const Mat3& a) { return {dot(x, a.col(0)), dot(x, a.col(1)), dot(x, a.col(2))}; }
Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}
Rational trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }
Rational frobenius(const Mat3& a, const Mat3& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}
Rational det(const Mat3& a) { return dot(a.row(0), cross(a.row(1), a.row(2))); }
Mat3 inverse(const Mat3& a) {
  const Rational d = det(a);
  if (sgn(d) == 0) throw Error(ErrorKind::ShapeMismatch, "singular 3x3 matrix");
  // Rows of the inverse transpose are cross products of rows.
  Mat3 cof;
  const Vec3 c0 = cross(a.row(1), a.row(2));
  const Vec3 c1 = cross(a.row(2), a.row(0));
  const Vec3 c2 = cross(a.row(0), a.row(1));
  for (int i = 0; i < 3; ++i) {
    cof(i, 0) = c0[i] / d;
    cof(i, 1) = c1[i] / d;
    cof(i, 2) = c2[i] / d;
  }
  return cof;
}
Mat3 row_cross(const Mat3& a, const Vec3& n) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    const Vec3 c = cross(a.row(i), n);
    for (int j = 0; j < 3; ++j) r(i, j) = c[j];
  }
  return r;
}

Mat3 sym(const Mat3& a) { return Rational(1, 2) * (a + transpose(a)); }
Mat3 skw(const Mat3& a) { return Rational(1, 2) * (a - transpose(a)); }
Mat3 dev(const Mat3& a) { return a - (trace(a) / 3) * Mat3::identity(); }
Mat3 iota(const Rational& s) { return s * Mat3::identity(); }
Mat3 mskw(const Vec3& v) {
  Mat3 r;
  r(0, 1) = -v[2];
  r(0, 2) = v[1];
  r(1, 0) = v[2];
  r(1, 2) = -v[0];
  r(2, 0) = -v[1];
  r(2, 1) = v[0];
  return r;
}
Vec3 vskw(const Mat3& a) {
  const Mat3 s = skw(a);
  return {s(2, 1), s(0, 2), s(1, 0)};
}
Mat3 S_op(const Mat3& u) { return transpose(u) - trace(u) * Mat3::identity(); }
Mat3 S_inv_op(const Mat3& v) { return transpose(v) - (trace(v) / 2) * Mat3::identity(); }

AlgebraicValue algebraic_map(AlgebraicKind kind, const AlgebraicValue& arg) {
  const auto need_mat = [&]() -> const Mat3& {
    if (const auto* m = std::get_if<Mat3>(&arg)) return *m;
    throw Error(ErrorKind::ShapeMismatch, "matrix argument expected");
  };
  switch (kind) {
    case AlgebraicKind::Sym: return sym(need_mat());
    case AlgebraicKind::Skw: return skw(need_mat());
    case AlgebraicKind::Tr: return trace(need_mat());
    case AlgebraicKind::Dev: return dev(need_mat());
    case AlgebraicKind::Vskw: return vskw(need_mat());
    case AlgebraicKind::S: return S_op(need_mat());
    case AlgebraicKind::Sinv: return S_inv_op(need_mat());
    case AlgebraicKind::Iota:
      if (const auto* s = std::get_if<Rational>(&arg)) return iota(*s);
      throw Error(ErrorKind::ShapeMismatch, "iota expects a scalar");
    case AlgebraicKind::Mskw:
      if (const auto* v = std::get_if<Vec3>(&arg)) return mskw(*v);
      throw Error(ErrorKind::ShapeMismatch, "mskw expects a vector");
  }
  throw Error(ErrorKind::ShapeMismatch, "unknown algebraic map");
}

AlgebraicKind parse_algebraic_kind(const std::string& name) {
  if (name == "sym") return AlgebraicKind::Sym;
  if (name == "skw") return AlgebraicKind::Skw;
  if (name == "tr") return AlgebraicKind::Tr;
  if (name == "dev") return AlgebraicKind::Dev;
  if (name == "iota") return AlgebraicKind::Iota;
  if (name == "mskw") return AlgebraicKind::Mskw;
  if (name == "vskw") return AlgebraicKind::Vskw;
  if (name == "S") return AlgebraicKind::S;
  if (name == "Sinv") return AlgebraicKind::Sinv;
  throw Error(ErrorKind::ShapeMismatch, "unknown algebraic map '" + name + "'");
}

RigidMotion operator*(const Rational& s, RigidMotion p) {
  p.a *= s;
  p.b *= s;
  return p;
}

std::array<RigidMotion, 6> rm_basis() {
  std::array<RigidMotion, 6> basis;
  for (int i = 0; i < 3; ++i) {
    basis[static_cast<std::size_t>(i)].a = Vec3::unit(i);
    basis[static_cast<std::size_t>(i + 3)].b = Vec3::unit(i);
  }
  return basis;
}

Rational RationalSampler::next(int max_num, int max_den) {
  const long span = 2L * max_num + 1;
  const long num = static_cast<long>(rng_() % static_cast<std::uint64_t>(span)) - max_num;
  const long den = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(max_den));
  return from_fraction(num, den);
}
Vec3 RationalSampler::vec() {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = next();
  return v;
}
Mat3 RationalSampler::mat() {
  Mat3 m;
  for (auto& x : m.m) x = next();
  return m;
}
RigidMotion RationalSampler::rm() { return {vec(), vec()}; }

}  // namespace regge
