#include <catch_amalgamated.hpp>

#include <sstream>

#include "regge/verify.hpp"

using namespace regge;

TEST_CASE("expected cohomology table") {
  const auto tet = generate_mesh({MeshKind::Tet});
  const auto cavity = generate_mesh({MeshKind::Cavity});
  const auto box = generate_mesh({MeshKind::Box, 2, 2, 2});
  CHECK(expected_cohomology(ComplexId::Regge, tet) == std::array<int, 4>{6, 0, 0, 0});
  CHECK(expected_cohomology(ComplexId::P1n, tet) == std::array<int, 4>{12, 0, 0, 0});
  CHECK(expected_cohomology(ComplexId::P0n, cavity) == std::array<int, 4>{4, 0, 4, 0});
  CHECK(expected_cohomology(ComplexId::Twisted, cavity) == std::array<int, 4>{6, 0, 6, 0});
  CHECK(expected_cohomology(ComplexId::RmAux, box) == std::array<int, 4>{box.num_edges(), 0, 0, 0});
  CHECK(expected_cohomology(ComplexId::Whitney, cavity) == std::array<int, 4>{1, 0, 1, 0});
}

TEST_CASE("full suite passes on the two-tet mesh") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  const auto r = run_all(m, "twotet", 7);
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.computed.dump());
    if (!c.informational) CHECK(c.pass);
  }
  CHECK(r.pass());
  CHECK(r.checks.size() == check_names().size());
}

TEST_CASE("JSON report is reproducible and carries no timings") {
  const auto m = generate_mesh({MeshKind::Tunnel});
  const std::string a = run_all(m, "tunnel", 3).to_json().dump(2);
  const std::string b = run_all(m, "tunnel", 3).to_json().dump(2);
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
  const auto j = nlohmann::json::parse(a);
  for (const auto& c : j["checks"])
    if (c["name"] == "cohomology_regge") CHECK(c["computed"] == nlohmann::json::array({6, 6, 0, 0}));
}

TEST_CASE("check filtering by name and by group") {
  const auto m = generate_mesh({MeshKind::TwoTet});
  CHECK(run_checks(m, "twotet", 0, {"inc_of_correction"}).checks.size() == 1);
  CHECK(run_checks(m, "twotet", 0, {"cohomology"}).checks.size() == all_complex_ids().size());
  CHECK(run_checks(m, "twotet", 0, {"commutes"}).checks.size() == 5);
  CHECK_THROWS_AS(run_checks(m, "twotet", 0, {"no_such_check"}), Error);
}

TEST_CASE("T3 membership is informational") {
  const auto m = generate_mesh({MeshKind::Box, 2, 2, 2});
  const auto r = run_checks(m, "box", 0, {"t3_membership"});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].informational);
  CHECK(r.pass());
  std::ostringstream text;
  r.write_text(text);
  CHECK(text.str().find("t3_membership") != std::string::npos);
}
