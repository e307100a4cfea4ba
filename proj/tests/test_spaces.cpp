#include <catch_amalgamated.hpp>

#include <algorithm>

#include "regge/homology.hpp"
#include "regge/poly.hpp"
#include "regge/spaces.hpp"

using namespace regge;

namespace {

std::vector<SimplicialComplex3> test_meshes() {
  return {generate_mesh({MeshKind::Tet}), generate_mesh({MeshKind::TwoTet}), generate_mesh({MeshKind::Tunnel}),
          generate_mesh({MeshKind::Cavity}), generate_mesh({MeshKind::Box, 2, 2, 2})};
}

// ∫ over the simplex spanned by origin + dirs, in reference measure.
Rational ref_integral(const Poly& p, const Vec3& origin, std::array<Vec3, 3> dirs, int k) {
  for (int i = k; i < 3; ++i) dirs[static_cast<std::size_t>(i)] = Vec3{};
  return p.substitute(origin, dirs).integrate_reference(k);
}

Vec3 pt(const SimplicialComplex3& m, int v) { return m.point(v); }

// φ¹_f[p](σ) = −∫_f sym σ : (p ⊗ n_f), face measure scaled by |n_f|.
Rational phi1(const SimplicialComplex3& m, const FrameSet& fr, int f, const RigidMotion& p, const MatPoly& s) {
  const auto& fv = m.face(f);
  const Vec3 o = pt(m, fv[0]);
  const Poly integrand = bilinear(fr.face_n[static_cast<std::size_t>(f)], sym(s), rm_field(p));
  return -ref_integral(integrand, o, {pt(m, fv[1]) - o, pt(m, fv[2]) - o, Vec3{}}, 2);
}

Rational phi2(const SimplicialComplex3& m, const FrameSet& fr, int e, const RigidMotion& p, const MatPoly& s) {
  const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
  const MatPoly ss = sym(s);
  const Poly first = bilinear(t, ss.transposed(), vec_constant(from_fraction(1, 2) * p.curl()));
  const Poly second = bilinear(t, curl_cols(ss).transposed(), rm_field(p));
  return -ref_integral(first + second, pt(m, m.edge(e)[0]), {t, Vec3{}, Vec3{}}, 1);
}

Rational phi3(const SimplicialComplex3& m, int x, const RigidMotion& p, const VecPoly& v) {
  const Vec3 y = pt(m, x);
  const Rational half = from_fraction(1, 2);
  return half * dot(eval(curl(v), y), p(y)) + half * dot(eval(v, y), p.curl());
}

// Basis functionals of the X row.
Rational b1(const SimplicialComplex3& m, const FrameSet& fr, int f, const RigidMotion& p, const MatPoly& s) {
  return phi1(m, fr, f, p, s);
}
Rational b2(const SimplicialComplex3& m, const FrameSet& fr, int e, const RigidMotion& p, const MatPoly& s) {
  return -phi2(m, fr, e, p, s);
}

}  // namespace

TEST_CASE("space dimension formulas on every test mesh") {
  for (const auto& m : test_meshes()) {
    const int V = m.num_vertices(), E = m.num_edges(), F = m.num_faces(), K = m.num_tets();
    const int V0 = m.count_interior(0), E0 = m.count_interior(1), F0 = m.count_interior(2);
    const auto dim = [&m](const std::string& id) { return enumerate_space(id, m).dim(); };
    CHECK(dim("lag") == 3 * V);
    CHECK(dim("reg") == E);
    CHECK(dim("reg0_dual") == E0);
    CHECK(dim("lag0_dual") == 3 * V0);
    CHECK(dim("ned") == E);
    CHECK(dim("nedc") == 2 * E);
    CHECK(dim("vh1") == E + 3 * K);
    CHECK(dim("vh2") == 3 * F0);
    CHECK(dim("vh3") == 2 * E0);
    CHECK(dim("wh0") == 3 * K);
    CHECK(dim("wh1") == 3 * F0);
    CHECK(dim("wh2") == 3 * E0);
    CHECK(dim("wh3") == 3 * V0);
    CHECK(dim("x0") == 6 * K);
    CHECK(dim("x1") == 6 * F0);
    CHECK(dim("x2") == 6 * E0);
    CHECK(dim("x3") == 6 * V0);
    CHECK(dim("phi") == 3 * F0);
    CHECK(dim("xhat2") == 5 * E0);
    CHECK(dim("rm_f") == 3 * F0);
    CHECK(dim("rm_e") == E0);
    CHECK(dim("p1n_f") == 3 * F0);
    CHECK(dim("p1n_e") == 4 * E0);
    CHECK(dim("p1n_v") == 3 * V0);
    CHECK(dim("p0n_f") == F0);
    CHECK(dim("p0n_e") == 2 * E0);
    CHECK(dim("p0n_v") == 3 * V0);
    CHECK(dim("hess_v1") == F0);
    CHECK(dim("hess_v2") == 2 * E0);
    CHECK(dim("hess_v3") == 3 * V0);
    CHECK(dim("whitney2") == F);
    CHECK(dim("reg+phi") == E + 3 * F0);
  }
}

TEST_CASE("single tet examples") {
  const auto m = generate_mesh({MeshKind::Tet});
  CHECK(enumerate_space("vh1", m).dim() == 9);
  CHECK(enumerate_space("lag", m).dim() == 12);
  CHECK(enumerate_space("reg", m).dim() == 6);
  CHECK(enumerate_space("reg0_dual", m).dim() == 0);
  CHECK(enumerate_space("lag0_dual", m).dim() == 0);
  CHECK_THROWS_MATCHES(enumerate_space("bogus", m), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::UnknownSpace;
                       }));
  const auto s = enumerate_space("vh1", m);
  CHECK(s.index(DofFamily::CellSkw, 0, 2) == 8);
  CHECK_THROWS_AS(s.index(DofFamily::Wh0Cell, 0, 0), Error);
}

TEST_CASE("payloads") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  const auto fr = frames(m);
  const int f = m.interior_list(2)[0];
  const auto p = payload({DofFamily::Vh2FaceNT, 2, f, 0}, m, fr);
  CHECK(std::get<Mat3>(p.tensor) ==
        Mat3::outer(fr.face_n[static_cast<std::size_t>(f)], fr.face_t1[static_cast<std::size_t>(f)]));
  const int e = m.find_edge(0, 1);
  const auto w = payload({DofFamily::Wh2Edge, 1, e, 1}, m, fr);
  CHECK(std::get<Mat3>(w.tensor) == Mat3::outer(Vec3::unit(1), fr.edge_t[static_cast<std::size_t>(e)]));
  const auto x = payload({DofFamily::Phi2Edge, 1, e, 3}, m, fr);
  CHECK(std::get<RigidMotion>(x.tensor).curl() == Vec3{2, 0, 0});
}

TEST_CASE("per-simplex constructions") {
  const auto m = generate_mesh({MeshKind::Box, 2, 1, 1});
  const auto fr = frames(m);
  for (int f = 0; f < m.num_faces(); ++f)
    for (int j = 0; j < 3; ++j) {
      const RigidMotion p = phi_normal_rm(m, fr, f, j);
      for (int v = 0; v < 3; ++v) {
        const Vec3 expect = v == j ? fr.face_n[static_cast<std::size_t>(f)] : Vec3{};
        CHECK(p(m.point(m.face(f)[static_cast<std::size_t>(v)])) == expect);
      }
    }
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto basis = xhat2_basis(m, fr, e);
    const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
    DenseMat rows;
    for (const auto& p : basis) {
      // p·t vanishes at both endpoints, hence along the edge.
      CHECK(dot(p(m.point(m.edge(e)[0])), t) == 0);
      CHECK(dot(p(m.point(m.edge(e)[1])), t) == 0);
      const auto c = p.coords();
      rows.emplace_back(c.begin(), c.end());
    }
    CHECK(dense_rank(rows) == 5);
    const RigidMotion rd = regdual_rm(m, fr, e);
    CHECK(rd(m.point(m.edge(e)[0])).is_zero());
    CHECK(rd(m.point(m.edge(e)[1])).is_zero());
    const auto c = xhat2_coords(m, fr, e, rd);
    RigidMotion back;
    for (std::size_t i = 0; i < 5; ++i) back += c[i] * basis[i];
    CHECK(back == rd);
    CHECK_THROWS_AS(xhat2_coords(m, fr, e, RigidMotion{t, Vec3{}}), Error);
  }
  for (int k = 0; k < m.num_tets(); ++k) {
    const auto reg = regge_cell_basis(m, fr, k);
    const auto ned = ned_cell_basis(m, fr, k);
    const auto& edges = m.tet_edges(k);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const Vec3& t = fr.edge_t[static_cast<std::size_t>(edges[j])];
        const Rational delta = i == j ? 1 : 0;
        CHECK(dot(t, reg[i] * t) == delta);
        CHECK(dot(ned[i](edge_midpoint(m, edges[j])), t) == delta);
      }
    const auto tv = m.tet(k);
    for (int i = 0; i < 6; ++i)
      for (int mom = 0; mom < 2; ++mom) {
        const auto vals = nedc_cell_basis(m, fr, k, i, mom);
        for (int j = 0; j < 6; ++j) {
          const auto& ev = m.edge(edges[static_cast<std::size_t>(j)]);
          const Vec3& t = fr.edge_t[static_cast<std::size_t>(edges[static_cast<std::size_t>(j)])];
          const auto local = [&tv](int g) { return static_cast<std::size_t>(std::find(tv.begin(), tv.end(), g) - tv.begin()); };
          const Rational u0 = dot(vals[local(ev[0])], t), u1 = dot(vals[local(ev[1])], t);
          CHECK(from_fraction(1, 2) * (u0 + u1) == (i == j && mom == 0 ? 1 : 0));
          CHECK(u1 - u0 == (i == j && mom == 1 ? 1 : 0));
        }
      }
  }
}

TEST_CASE("X row functionals pair with polynomials as the incidence matrices predict") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  const auto fr = frames(m);
  RationalSampler rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const RigidMotion p = rng.rm();
    const MatPoly s = random_sym_poly(rng, 3);
    const VecPoly v = random_vec_poly(rng, 2);
    for (int k = 0; k < m.num_tets(); ++k) {
      // −orient(K)·⟨Def(p on K), σ⟩ = Σ_f O(f,K) b¹(f,p)(σ)
      const auto& tv = m.tet(k);
      const Vec3 o = m.point(tv[0]);
      const Rational vol = abs(m.signed_volume6(k));
      const Rational lhs = -m.orientation(k) * (-vol * ref_integral(dot(rm_field(p), div_rows(s)), o,
                                                                    {m.point(tv[1]) - o, m.point(tv[2]) - o,
                                                                     m.point(tv[3]) - o},
                                                                    3));
      Rational rhs = 0;
      for (int f : m.tet_faces(k)) rhs += incidence(m.vertices_of(2, f), m.vertices_of(3, k)) * b1(m, fr, f, p, s);
      CHECK(lhs == rhs);
    }
    for (int f = 0; f < m.num_faces(); ++f) {
      // b¹(f,p)(inc σ) = Σ_e O(e,f) b²(e,p)(σ)
      Rational rhs = 0;
      for (int e : m.face_edges(f)) rhs += incidence(m.vertices_of(1, e), m.vertices_of(2, f)) * b2(m, fr, e, p, s);
      CHECK(b1(m, fr, f, p, inc(s)) == rhs);
    }
    for (int e = 0; e < m.num_edges(); ++e) {
      // ⟨div b²(e,p), v⟩ = φ²_e[p](Def v) = Σ_x O(x,e) φ³_x[p](v)
      const auto& ev = m.edge(e);
      CHECK(phi2(m, fr, e, p, def(v)) == phi3(m, ev[0], p, v) - phi3(m, ev[1], p, v));
    }
  }
}

TEST_CASE("dual Regge and Lagrange functionals inside the X row") {
  const auto m = generate_mesh({MeshKind::Tet});
  const auto fr = frames(m);
  RationalSampler rng(5);
  const MatPoly s = random_sym_poly(rng, 2);
  const VecPoly v = random_vec_poly(rng, 2);
  for (int e = 0; e < m.num_edges(); ++e) {
    const Vec3& t = fr.edge_t[static_cast<std::size_t>(e)];
    const Rational tt = ref_integral(bilinear(t, s, vec_constant(t)), m.point(m.edge(e)[0]), {t, Vec3{}, Vec3{}}, 1);
    CHECK(b2(m, fr, e, regdual_rm(m, fr, e), s) == tt);
  }
  for (int x = 0; x < m.num_vertices(); ++x)
    for (int i = 0; i < 3; ++i) {
      const Vec3 y = m.point(x);
      const RigidMotion p{-1 * cross(Vec3::unit(i), y), Vec3::unit(i)};  // e_i × (· − y)
      CHECK(phi3(m, x, p, v) == eval(v, y)[i]);
    }
}

TEST_CASE("phi families are injective on each simplex") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  const auto fr = frames(m);
  RationalSampler rng(3);
  std::vector<MatPoly> tests;
  std::vector<VecPoly> vtests;
  for (int i = 0; i < 12; ++i) {
    tests.push_back(random_sym_poly(rng, 2));
    vtests.push_back(random_vec_poly(rng, 2));
  }
  const auto basis = rm_basis();
  for (int f = 0; f < m.num_faces(); ++f) {
    DenseMat pairing;
    for (const auto& p : basis) {
      DenseVec row;
      for (const auto& s : tests) row.push_back(phi1(m, fr, f, p, s));
      pairing.push_back(row);
    }
    CHECK(dense_rank(pairing) == 6);
  }
  for (int e = 0; e < m.num_edges(); ++e) {
    DenseMat pairing;
    for (const auto& p : basis) {
      DenseVec row;
      for (const auto& s : tests) row.push_back(phi2(m, fr, e, p, s));
      pairing.push_back(row);
    }
    CHECK(dense_rank(pairing) == 6);
  }
  for (int x = 0; x < m.num_vertices(); ++x) {
    DenseMat pairing;
    for (const auto& p : basis) {
      DenseVec row;
      for (const auto& v : vtests) row.push_back(phi3(m, x, p, v));
      pairing.push_back(row);
    }
    CHECK(dense_rank(pairing) == 6);
  }
}
