#include <catch_amalgamated.hpp>

#include "regge/identities.hpp"
#include "regge/poly.hpp"

using namespace regge;

TEST_CASE("rational parse and print round trip") {
  CHECK(parse_rational("3/6") == from_fraction(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-8/2")) == "-4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("mskw of the first axis") {
  Mat3 expected;
  expected(1, 2) = -1;
  expected(2, 1) = 1;
  CHECK(mskw(Vec3::unit(0)) == expected);
}

TEST_CASE("S of the identity and its inverse") {
  const Mat3 i = Mat3::identity();
  CHECK(S_op(i) == Rational(-2) * i);
  CHECK(S_inv_op(Rational(-2) * i) == i);
}

TEST_CASE("fixed points and kernels of the algebraic maps") {
  RationalSampler rng(2);
  const Mat3 m = rng.mat();
  const Mat3 s = sym(m);
  CHECK(sym(s) == s);
  CHECK(vskw(s).is_zero());
  CHECK(trace(dev(m)) == 0);
  CHECK(std::get<Rational>(algebraic_map(AlgebraicKind::Tr, m)) == trace(m));
  CHECK_THROWS_AS(algebraic_map(AlgebraicKind::Mskw, m), Error);
  CHECK_THROWS_AS(algebraic_map(AlgebraicKind::Sym, Vec3{}), Error);
  CHECK_THROWS_AS(parse_algebraic_kind("curl"), Error);
}

TEST_CASE("mskw acts as a cross product and S scales the trace") {
  RationalSampler rng(17);
  for (int k = 0; k < 20; ++k) {
    const Vec3 v = rng.vec();
    const Vec3 w = rng.vec();
    CHECK(mskw(v) * w == cross(v, w));
    const Mat3 u = rng.mat();
    CHECK(trace(S_op(u)) == -2 * trace(u));
  }
}

TEST_CASE("rigid motions") {
  const auto basis = rm_basis();
  CHECK(basis[3](Vec3{0, 0, 1}) == Vec3{0, -1, 0});
  RationalSampler rng(9);
  for (int k = 0; k < 10; ++k) {
    const RigidMotion p = rng.rm();
    CHECK(rm_curl(p) == Rational(2) * p.b);
    const RigidMotion t{p.a, {}};
    CHECK(rm_eval(t, rng.vec()) == p.a);
    // The polynomial field agrees with evaluation and has curl 2b.
    const VecPoly f = rm_field(p);
    const Vec3 x = rng.vec();
    CHECK(eval(f, x) == p(x));
    CHECK(eval(curl(f), x) == rm_curl(p));
    CHECK(def(f).is_zero());
    CHECK(RigidMotion::from_coords(p.coords()) == p);
  }
}

TEST_CASE("polynomial calculus basics") {
  const Poly x = Poly::variable(0);
  const Poly y = Poly::variable(1);
  const Poly p = x * x * y + Rational(3) * y;
  CHECK(p.degree() == 3);
  CHECK(p.derivative(0) == Rational(2) * x * y);
  CHECK(p.eval({2, 5, 7}) == 35);
  CHECK((p - p).is_zero());
  // ∫ over the unit triangle of 1, s, s·t: 1/2, 1/6, 1/24.
  CHECK(Poly(Rational(1)).integrate_reference(2) == from_fraction(1, 2));
  CHECK(x.integrate_reference(2) == from_fraction(1, 6));
  CHECK((x * y).integrate_reference(2) == from_fraction(1, 24));
  CHECK(x.integrate_reference(1) == from_fraction(1, 2));
  CHECK(Poly(Rational(1)).integrate_reference(3) == from_fraction(1, 6));
  CHECK_THROWS_AS(y.integrate_reference(1), Error);
  // Substitution x = 1 + 2s, y = t.
  const Poly q = (x * y).substitute({1, 0, 0}, {Vec3{2, 0, 0}, Vec3{0, 1, 0}, Vec3{}});
  CHECK(q == y + Rational(2) * x * y);
}

TEST_CASE("vector calculus identities on random polynomials") {
  RationalSampler rng(12);
  for (int k = 0; k < 10; ++k) {
    const VecPoly u = random_vec_poly(rng, 3);
    CHECK(div(curl(u)).is_zero());
    const Poly s = random_poly(rng, 3);
    const VecPoly g{s.derivative(0), s.derivative(1), s.derivative(2)};
    CHECK(curl(g) == VecPoly{});
    CHECK(inc(def(u)).is_zero());
    const MatPoly a = random_sym_poly(rng, 3);
    CHECK(div_rows(inc(a)) == VecPoly{});
    CHECK(trace(random_traceless_poly(rng, 2)).is_zero());
  }
}

TEST_CASE("pointwise identity suite passes") {
  const auto results = verify_pointwise_identities(7);
  REQUIRE(results.size() == 6);
  for (const auto& r : results) {
    INFO(r.id << " " << r.counterexample);
    CHECK(r.passed);
    CHECK(r.instances == 20);
  }
  CHECK_NOTHROW(require_pointwise_identities(1));
}

TEST_CASE("mskw cross identity at c = n = e1") {
  const Vec3 e1 = Vec3::unit(0);
  const Mat3 lhs = row_cross(mskw(e1), e1);
  Mat3 expected;
  expected(1, 1) = -1;
  expected(2, 2) = -1;
  CHECK(lhs == expected);
  CHECK(lhs == -Mat3::identity() + Mat3::outer(e1, e1));
}

TEST_CASE("traceless identity with constant data is trivial") {
  const RigidMotion p{{1, 2, 3}, {}};
  const MatPoly a = MatPoly::constant(Mat3::outer({1, 0, 0}, {0, 1, 0}));
  const VecPoly pf = rm_field(p);
  const Vec3 n{0, 0, 1};
  CHECK(dot(left_mul(pf, curl_rows(a)), n).is_zero());
  CHECK(dot(curl(left_mul(pf, a)), n).is_zero());
}
