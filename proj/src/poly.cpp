#include "regge/poly.hpp"

namespace regge {

namespace {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Poly power(const Poly& p, int k) {
  Poly r(Rational(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_[{0, 0, 0}] = c;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}
Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}
Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    f[v] -= 1;
    r.add_term(f, c * e[v]);
  }
  return r;
}

Rational Poly::eval(const Vec3& x) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::substitute(const Vec3& origin, const std::array<Vec3, 3>& dirs) const {
  std::array<Poly, 3> coord;
  for (int i = 0; i < 3; ++i) {
    Poly ci(origin[i]);
    for (int k = 0; k < 3; ++k) ci += Poly::monomial(unit_exponent(k), dirs[static_cast<std::size_t>(k)][i]);
    coord[static_cast<std::size_t>(i)] = ci;
  }
  Poly r;
  for (const auto& [e, c] : terms_) {
    Poly t(c);
    for (std::size_t i = 0; i < 3; ++i) t = t * power(coord[i], e[i]);
    r += t;
  }
  return r;
}

Rational Poly::integrate_reference(int k) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    Integer num = 1;
    for (int i = 0; i < 3; ++i) {
      const int ei = e[static_cast<std::size_t>(i)];
      if (i >= k && ei != 0)
        throw Error(ErrorKind::DimMismatch, "polynomial depends on a variable outside the simplex");
      num *= factorial(ei);
      total += ei;
    }
    Rational term(num, factorial(total + k));
    term.canonicalize();
    s += c * term;
  }
  return s;
}

MatPoly MatPoly::constant(const Mat3& a) {
  MatPoly r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = Poly(a.m[i]);
  return r;
}
Mat3 MatPoly::eval(const Vec3& x) const {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i].eval(x);
  return r;
}
MatPoly MatPoly::transposed() const {
  MatPoly r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}
bool MatPoly::is_zero() const {
  for (const auto& p : m)
    if (!p.is_zero()) return false;
  return true;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
  MatPoly r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}
MatPoly operator-(const MatPoly& a, const MatPoly& b) {
  MatPoly r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}
MatPoly operator*(const Rational& s, const MatPoly& a) {
  MatPoly r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}

VecPoly vec_constant(const Vec3& v) { return {Poly(v[0]), Poly(v[1]), Poly(v[2])}; }
VecPoly rm_field(const RigidMotion& p) {
  VecPoly r = vec_constant(p.a);
  // b × x
  const auto& b = p.b;
  r[0] += b[1] * Poly::variable(2) - b[2] * Poly::variable(1);
  r[1] += b[2] * Poly::variable(0) - b[0] * Poly::variable(2);
  r[2] += b[0] * Poly::variable(1) - b[1] * Poly::variable(0);
  return r;
}
Vec3 eval(const VecPoly& v, const Vec3& x) { return {v[0].eval(x), v[1].eval(x), v[2].eval(x)}; }
VecPoly add(const VecPoly& a, const VecPoly& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
VecPoly scale(const Rational& s, const VecPoly& a) { return {s * a[0], s * a[1], s * a[2]}; }
Poly dot(const VecPoly& a, const VecPoly& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Poly dot(const VecPoly& a, const Vec3& b) { return b[0] * a[0] + b[1] * a[1] + b[2] * a[2]; }

MatPoly grad(const VecPoly& u) {
  MatPoly r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = u[static_cast<std::size_t>(i)].derivative(j);
  return r;
}
VecPoly curl(const VecPoly& u) {
  return {u[2].derivative(1) - u[1].derivative(2), u[0].derivative(2) - u[2].derivative(0),
          u[1].derivative(0) - u[0].derivative(1)};
}
Poly div(const VecPoly& u) { return u[0].derivative(0) + u[1].derivative(1) + u[2].derivative(2); }

MatPoly curl_rows(const MatPoly& a) {
  MatPoly r;
  for (int i = 0; i < 3; ++i) {
    const VecPoly row{a(i, 0), a(i, 1), a(i, 2)};
    const VecPoly c = curl(row);
    for (int j = 0; j < 3; ++j) r(i, j) = c[static_cast<std::size_t>(j)];
  }
  return r;
}
MatPoly curl_cols(const MatPoly& a) { return curl_rows(a.transposed()).transposed(); }
VecPoly div_rows(const MatPoly& a) {
  VecPoly r;
  for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] = div(VecPoly{a(i, 0), a(i, 1), a(i, 2)});
  return r;
}
MatPoly sym(const MatPoly& a) { return Rational(1, 2) * (a + a.transposed()); }
MatPoly def(const VecPoly& u) { return sym(grad(u)); }
MatPoly inc(const MatPoly& a) { return curl_rows(curl_cols(a)); }
Poly trace(const MatPoly& a) { return a(0, 0) + a(1, 1) + a(2, 2); }
Poly frobenius(const MatPoly& a, const MatPoly& b) {
  Poly s;
  for (std::size_t i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}
Poly frobenius(const MatPoly& a, const Mat3& b) {
  Poly s;
  for (std::size_t i = 0; i < 9; ++i) s += b.m[i] * a.m[i];
  return s;
}
VecPoly left_mul(const VecPoly& p, const MatPoly& a) {
  VecPoly r;
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) r[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(l)] * a(l, j);
  return r;
}
VecPoly apply(const MatPoly& a, const Vec3& n) {
  VecPoly r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i)] += n[j] * a(i, j);
  return r;
}
Poly bilinear(const Vec3& l, const MatPoly& a, const VecPoly& r) {
  Poly s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += l[i] * (a(i, j) * r[static_cast<std::size_t>(j)]);
  return s;
}

Poly random_poly(RationalSampler& rng, int degree) {
  Poly p;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) p += Poly::monomial({a, b, c}, rng.next());
  return p;
}
VecPoly random_vec_poly(RationalSampler& rng, int degree) {
  return {random_poly(rng, degree), random_poly(rng, degree), random_poly(rng, degree)};
}
MatPoly random_mat_poly(RationalSampler& rng, int degree) {
  MatPoly a;
  for (auto& p : a.m) p = random_poly(rng, degree);
  return a;
}
MatPoly random_sym_poly(RationalSampler& rng, int degree) {
  MatPoly a;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      a(i, j) = random_poly(rng, degree);
      a(j, i) = a(i, j);
    }
  return a;
}
MatPoly random_traceless_poly(RationalSampler& rng, int degree) {
  MatPoly a = random_mat_poly(rng, degree);
  a(2, 2) = -(a(0, 0) + a(1, 1));
  return a;
}

}  // namespace regge
