#include <catch_amalgamated.hpp>

#include "regge/cartan.hpp"

using namespace regge;

namespace {

FieldVector random_field(const DofSpace& s, RationalSampler& rng) {
  FieldVector f = zero_field(s);
  for (auto& c : f.coefficients) c = rng.next();
  return f;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("zero coframe and connection give zero torsion and curvature") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  Assembler a(m);
  Cartan c(a);
  const auto out = c.torsion_curvature(zero_field(c.theta_space()), zero_field(c.gamma_space()));
  CHECK(all_zero(out.first.coefficients));
  CHECK(all_zero(out.second.coefficients));
  CHECK(out.first.space == "vh2");
  CHECK(out.second.space == "wh2");
}

TEST_CASE("gauge fields have no torsion or curvature") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  Assembler a(m);
  Cartan c(a);
  const auto tw = a.complex(ComplexId::Twisted);
  RationalSampler rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    DenseVec uw(static_cast<std::size_t>(tw.dims[0]));
    for (auto& x : uw) x = rng.next();
    const DenseVec tg = tw.maps[0].apply(uw);
    const int n1 = c.theta_space().dim();
    const FieldVector theta{"vh1", DenseVec(tg.begin(), tg.begin() + n1)};
    const FieldVector gamma{"wh1", DenseVec(tg.begin() + n1, tg.end())};
    const auto out = c.torsion_curvature(theta, gamma);
    CHECK(all_zero(out.first.coefficients));
    CHECK(all_zero(out.second.coefficients));
  }
}

TEST_CASE("single connection delta gives the A1 column") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  Assembler a(m);
  Cartan c(a);
  for (int i = 0; i < 3; ++i) {
    FieldVector gamma = zero_field(c.gamma_space());
    gamma.coefficients[static_cast<std::size_t>(i)] = 1;
    const auto out = c.torsion_curvature(zero_field(c.theta_space()), gamma);
    const DenseVec s = a.s1().column(i);
    for (std::size_t r = 0; r < s.size(); ++r) CHECK(out.first.coefficients[r] == -s[r]);
    CHECK(out.second.coefficients == a.wh_curl().column(i));
  }
}

TEST_CASE("torsion and curvature are linear and satisfy the discrete Bianchi identity") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  Assembler a(m);
  Cartan c(a);
  RationalSampler rng(5);
  const auto t1 = random_field(c.theta_space(), rng), g1 = random_field(c.gamma_space(), rng);
  const auto t2 = random_field(c.theta_space(), rng), g2 = random_field(c.gamma_space(), rng);
  const Rational s = rng.next();
  FieldVector ts = t1, gs = g1;
  for (std::size_t i = 0; i < ts.coefficients.size(); ++i) ts.coefficients[i] = t1.coefficients[i] + s * t2.coefficients[i];
  for (std::size_t i = 0; i < gs.coefficients.size(); ++i) gs.coefficients[i] = g1.coefficients[i] + s * g2.coefficients[i];
  const auto o1 = c.torsion_curvature(t1, g1), o2 = c.torsion_curvature(t2, g2), os = c.torsion_curvature(ts, gs);
  for (std::size_t i = 0; i < os.first.coefficients.size(); ++i)
    CHECK(os.first.coefficients[i] == o1.first.coefficients[i] + s * o2.first.coefficients[i]);
  for (std::size_t i = 0; i < os.second.coefficients.size(); ++i)
    CHECK(os.second.coefficients[i] == o1.second.coefficients[i] + s * o2.second.coefficients[i]);
  const auto b = c.bianchi(os.first, os.second);
  CHECK(all_zero(b.first.coefficients));
  CHECK(all_zero(b.second.coefficients));
}

TEST_CASE("Regge metric curvature") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  Assembler a(m);
  Cartan c(a);
  RationalSampler rng(3);
  DenseVec u(static_cast<std::size_t>(3 * m.num_vertices()));
  for (auto& x : u) x = rng.next();
  CHECK(all_zero(c.regge_metric_curvature(a.lag_def().apply(u)).coefficients));
  DenseVec unit(static_cast<std::size_t>(m.num_edges()));
  unit[0] = 1;
  CHECK(c.regge_metric_curvature(unit).coefficients == a.regge_inc().column(0));
  CHECK_THROWS_AS(c.regge_metric_curvature(DenseVec(2)), Error);
}

TEST_CASE("potential solve round trip and obstructions") {
  const auto m = generate_mesh({MeshKind::Box, 1, 1, 1});
  Assembler a(m);
  Cartan c(a);
  RationalSampler rng(9);
  for (int trial = 0; trial < 2; ++trial) {
    const auto tr = c.torsion_curvature(random_field(c.theta_space(), rng), random_field(c.gamma_space(), rng));
    const auto p = c.potential_solve(tr.first, tr.second);
    REQUIRE(p.solved);
    const auto back = c.torsion_curvature(p.solution.first, p.solution.second);
    CHECK(back.first.coefficients == tr.first.coefficients);
    CHECK(back.second.coefficients == tr.second.coefficients);
  }
  FieldVector t = zero_field(c.torsion_space());
  for (auto& x : t.coefficients) x = rng.next();
  const auto bad = c.potential_solve(t, zero_field(c.curvature_space()));
  if (!all_zero(c.bianchi(t, zero_field(c.curvature_space())).first.coefficients)) {
    CHECK_FALSE(bad.solved);
    CHECK(bad.reason == "closedness");
    CHECK_FALSE(all_zero(bad.witness));
  }
}

TEST_CASE("closed but inexact data on the cavity yields a certificate") {
  const auto m = generate_mesh({MeshKind::Cavity});
  Assembler a(m);
  Cartan c(a);
  const auto tw = a.complex(ComplexId::Twisted);
  const int nt = c.torsion_space().dim();
  bool found = false;
  for (const DenseVec& z : nullspace_exact(tw.maps[2])) {
    const auto p = c.potential_solve({"vh2", DenseVec(z.begin(), z.begin() + nt)}, {"wh2", DenseVec(z.begin() + nt, z.end())});
    if (p.solved) continue;
    found = true;
    CHECK(p.reason == "cohomology");
    REQUIRE(p.witness.size() == z.size());
    Rational pairing = 0;
    for (std::size_t i = 0; i < z.size(); ++i) pairing += p.witness[i] * z[i];
    CHECK(pairing != 0);
    CHECK(all_zero(tw.maps[1].transpose().apply(p.witness)));
    break;
  }
  CHECK(found);
}

TEST_CASE("field JSON round trip and validation") {
  const FieldVector f{"wh1", {from_fraction(3, 7), from_fraction(-2), from_fraction(0)}};
  const auto j = field_to_json(f);
  CHECK(j["coefficients"][0] == "3/7");
  const auto g = field_from_json(j);
  CHECK(g.space == f.space);
  CHECK(g.coefficients == f.coefficients);
  CHECK_THROWS_AS(field_from_json(nlohmann::json{{"space", "wh1"}}), Error);
  // Two-tet wh1 has exactly three coefficients; the box has more.
  const auto two = generate_mesh({MeshKind::TwoTet});
  const auto box = generate_mesh({MeshKind::Box, 1, 1, 1});
  CHECK_NOTHROW(require_field(f, enumerate_space("wh1", two)));
  CHECK_THROWS_AS(require_field(f, enumerate_space("wh1", box)), Error);
  CHECK_THROWS_AS(require_field(f, enumerate_space("wh2", two)), Error);
}
