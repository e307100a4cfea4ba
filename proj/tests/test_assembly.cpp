#include <catch_amalgamated.hpp>

#include <sstream>

#include "regge/assembly.hpp"

using namespace regge;

namespace {

std::array<int, 4> scaled(std::array<int, 4> b, int s) {
  for (int& x : b) x *= s;
  return b;
}

std::array<int, 4> dims4(const CohomologyReport& r) {
  const auto d = r.dims();
  return {d[0], d[1], d[2], d[3]};
}

bool commutes(const ChainMap& m, const CochainComplex& src, const CochainComplex& dst) {
  for (std::size_t k = 0; k < 3; ++k)
    if (!(m.maps[k + 1] * src.maps[k] == dst.maps[k] * m.maps[k])) return false;
  return true;
}

}  // namespace

TEST_CASE("Regge complex shapes on a single tet") {
  const auto tet = generate_mesh({MeshKind::Tet});
  Assembler a(tet);
  const auto c = a.complex(ComplexId::Regge);
  CHECK(c.maps[0].rows() == 6);
  CHECK(c.maps[0].cols() == 12);
  CHECK(c.maps[1].rows() == 0);
  CHECK(c.maps[1].cols() == 6);
  CHECK(c.maps[2].rows() == 0);
  CHECK(c.maps[2].cols() == 0);
  CHECK(rank_exact(c.maps[0]) == 6);
}

TEST_CASE("twisted complex on a single tet has an empty W part past degree 0") {
  const auto tet = generate_mesh({MeshKind::Tet});
  Assembler a(tet);
  const auto c = a.complex(ComplexId::Twisted);
  CHECK(c.dims == std::vector<int>{12 + 3, 9, 0, 0});
  CHECK((c.maps[1] * c.maps[0]).is_zero());
}

TEST_CASE("X row equals the relative boundary tensored with RM") {
  for (const char* s : {"twotet", "tunnel"}) {
    const auto m = generate_mesh(parse_mesh_spec(s));
    Assembler a(m);
    const auto x = a.complex(ComplexId::XRm);
    CHECK(x.maps[0] == relative_boundary(m, 3).kron_identity(6));
    CHECK(x.maps[1] == relative_boundary(m, 2).kron_identity(6));
    CHECK(x.maps[2] == relative_boundary(m, 1).kron_identity(6));
  }
}

TEST_CASE("every complex composes to zero and has the expected cohomology") {
  for (const char* s : {"twotet", "box:2,2,2", "tunnel"}) {
    const auto m = generate_mesh(parse_mesh_spec(s));
    const auto b = de_rham_betti(m);
    Assembler a(m);
    for (ComplexId id : all_complex_ids()) {
      INFO(s << " " << complex_name(id));
      const auto c = a.complex(id);
      for (std::size_t nz : c.composition_nonzeros()) CHECK(nz == 0);
      std::array<int, 4> expected{};
      switch (id) {
        case ComplexId::WhRow:
        case ComplexId::VhRow: expected = scaled(b, 3); break;
        case ComplexId::P0n:
        case ComplexId::Hessian: expected = scaled(b, 4); break;
        case ComplexId::RmAux: expected = {m.num_edges(), 0, 0, 0}; break;
        case ComplexId::P1n: expected = {3 * m.num_vertices(), 0, 0, 0}; break;
        case ComplexId::Whitney: expected = b; break;
        default: expected = scaled(b, 6); break;
      }
      CHECK(dims4(cohomology_dims(c)) == expected);
    }
  }
}

TEST_CASE("Regge sequence: inc Def = 0 and div inc = 0") {
  const auto m = generate_mesh({MeshKind::Box, 2, 2, 2});
  Assembler a(m);
  CHECK((a.regge_inc() * a.lag_def()).is_zero());
  CHECK((a.regge_div() * a.regge_inc()).is_zero());
}

TEST_CASE("inc of the correction equals minus inc") {
  for (const char* s : {"twotet", "box:2,2,2", "cavity"}) {
    const auto m = generate_mesh(parse_mesh_spec(s));
    Assembler a(m);
    const SparseMat lhs = a.phi_inc() * a.correction_K();
    const SparseMat rhs = Rational(-1) * (a.regdual_in_xhat2() * a.regge_inc());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("L reproduces the Regge degrees of freedom") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  Assembler a(m);
  const int E = m.num_edges();
  SparseMat reg_rows(E, E + 3 * m.count_interior(2));
  for (int e = 0; e < E; ++e) reg_rows.add(e, e, 1);
  CHECK(reg_rows * a.nedc_def() * a.lift_L() == SparseMat::identity(E));
  CHECK(a.lift_L().apply(DenseVec(static_cast<std::size_t>(E))) == DenseVec(static_cast<std::size_t>(2 * E)));
}

TEST_CASE("chain maps commute with the differentials") {
  for (const char* s : {"twotet", "tunnel"}) {
    const auto m = generate_mesh(parse_mesh_spec(s));
    Assembler a(m);
    CHECK(commutes(a.kappa(), a.complex(ComplexId::XRm), a.rm_chains()));
    CHECK(commutes(a.g(), a.complex(ComplexId::XRm), a.complex(ComplexId::RmAux)));
    CHECK(commutes(a.j(), a.complex(ComplexId::Nedc), a.complex(ComplexId::P1n)));
    CHECK(commutes(a.hess_geom(), a.complex(ComplexId::Hessian), a.complex(ComplexId::P0n)));
    CHECK(commutes(a.ned_in_x(), a.complex(ComplexId::Ned), a.complex(ComplexId::XRm)));
  }
}

TEST_CASE("S applied to n_f (x) n_f is minus the tangential payload") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  Assembler a(m);
  const auto vh2 = a.space("vh2");
  const int f = m.interior_list(2)[0];
  const Vec3& n = a.frames().face_n[static_cast<std::size_t>(f)];
  // Wh1Face (f, i) carries e_i ⊗ n, so c = n is the combination Σ n_i (f, i).
  DenseVec w(3);
  for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i)] = n[i];
  const DenseVec out = a.s1().apply(w);
  CHECK(out[static_cast<std::size_t>(vh2.index(DofFamily::Vh2FaceTT, f, 0))] == -1);
  CHECK(out[static_cast<std::size_t>(vh2.index(DofFamily::Vh2FaceNT, f, 0))] == 0);
  CHECK(out[static_cast<std::size_t>(vh2.index(DofFamily::Vh2FaceNT, f, 1))] == 0);
}

TEST_CASE("T1 kills Regge fields and T2 sends n (x) t to t (x) n") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  Assembler a(m);
  const auto vh1 = a.space("vh1");
  for (int e = 0; e < m.num_edges(); ++e)
    CHECK(a.t1().column(vh1.index(DofFamily::RegEdge, e, 0)) == DenseVec(a.t1().rows()));
  const auto vh2 = a.space("vh2");
  const auto& fr = a.frames();
  for (int fi = 0; fi < m.count_interior(2); ++fi) {
    const int f = m.interior_list(2)[static_cast<std::size_t>(fi)];
    for (int i = 0; i < 2; ++i) {
      const DenseVec col = a.t2().column(vh2.index(DofFamily::Vh2FaceNT, f, i));
      const Vec3& t = i == 0 ? fr.face_t1[static_cast<std::size_t>(f)] : fr.face_t2[static_cast<std::size_t>(f)];
      for (int c = 0; c < 3; ++c) CHECK(col[static_cast<std::size_t>(3 * fi + c)] == t[c]);
    }
  }
}

TEST_CASE("curl of a cell rotation matches the face expansion") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  Assembler a(m);
  const auto vh1 = a.space("vh1"), vh2 = a.space("vh2");
  const auto& fr = a.frames();
  const Vec3 c = Vec3::unit(0);
  for (int f : m.interior_list(2)) {
    const auto sf = static_cast<std::size_t>(f);
    const Vec3 &n = fr.face_n[sf], &t1 = fr.face_t1[sf], &t2 = fr.face_t2[sf];
    for (int k : m.face_tets(f)) {
      const Rational eps = m.face_tet_sign(f, k);
      const DenseVec col = a.vh_curl().column(vh1.index(DofFamily::CellSkw, k, 0));
      const auto at = [&](DofFamily fam, int l) { return col[static_cast<std::size_t>(vh2.index(fam, f, l))]; };
      CHECK(at(DofFamily::Vh2FaceNT, 0) == eps * dot(c, t1) / dot(t1, t1));
      CHECK(at(DofFamily::Vh2FaceNT, 1) == eps * dot(c, t2) / dot(t2, t2));
      CHECK(at(DofFamily::Vh2FaceTT, 0) == -eps * dot(c, n) / dot(n, n));
    }
  }
}

TEST_CASE("T3 residual is quantified, not thrown") {
  const auto m = generate_mesh({MeshKind::Box, 2, 2, 2});
  Assembler a(m);
  const auto& r = a.t3();
  CHECK(r.columns == 2 * m.count_interior(1));
  CHECK(r.columns_with_residual <= r.columns);
  CHECK(r.member() == (r.columns_with_residual == 0));
  if (!r.member()) CHECK_FALSE(r.example.empty());
}

TEST_CASE("matrix export format") {
  SparseMat m(2, 3);
  m.add(0, 2, from_fraction(3, 7));
  m.add(1, 0, -2);
  std::ostringstream out;
  write_matrix(out, m);
  CHECK(out.str() == "%%MatrixMarket matrix coordinate rational general\n2 3 2\n1 3 3/7\n2 1 -2\n");
}

TEST_CASE("unknown complex names are rejected") {
  CHECK(parse_complex_id("nedc") == ComplexId::Nedc);
  CHECK_THROWS_AS(parse_complex_id("bogus"), Error);
}
