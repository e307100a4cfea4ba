#include "regge/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include "regge/identities.hpp"

namespace regge {

namespace {

using nlohmann::json;

struct Context {
  const SimplicialComplex3& mesh;
  std::uint64_t seed;
  Assembler a;
  std::map<ComplexId, CochainComplex> complexes;

  Context(const SimplicialComplex3& m, std::uint64_t s) : mesh(m), seed(s), a(m) {}

  const CochainComplex& cx(ComplexId id) {
    auto it = complexes.find(id);
    if (it == complexes.end()) it = complexes.emplace(id, a.complex(id)).first;
    return it->second;
  }
  std::array<int, 4> cohomology(ComplexId id) {
    const auto d = cohomology_dims(cx(id)).dims();
    return {d[0], d[1], d[2], d[3]};
  }
};

using CheckFn = std::function<void(Context&, CheckResult&)>;

struct Entry {
  std::string name;
  std::string anchor;
  CheckFn run;
};

int nullity(const SparseMat& m) { return m.cols() - rank_exact(m); }

bool commutes(const ChainMap& m, const CochainComplex& src, const CochainComplex& dst, json& squares) {
  bool ok = true;
  squares = json::array();
  for (std::size_t k = 0; k + 1 < m.maps.size(); ++k) {
    const bool sq = m.maps[k + 1] * src.maps[k] == dst.maps[k] * m.maps[k];
    squares.push_back(sq);
    ok = ok && sq;
  }
  return ok;
}

std::string cohomology_anchor(ComplexId id) {
  switch (id) {
    case ComplexId::Regge: return "Regge cohomology is de Rham cohomology with RM coefficients";
    case ComplexId::Twisted: return "twisted cohomology is de Rham cohomology with RM coefficients";
    case ComplexId::VhRow: return "V row is vector-valued distributional de Rham";
    case ComplexId::WhRow: return "W row is three copies of distributional de Rham";
    case ComplexId::XRm: return "X row is relative chains with RM coefficients";
    case ComplexId::RmAux: return "rigid-motion restriction complex is exact past degree 0";
    case ComplexId::Ned: return "Nedelec row cohomology is de Rham with RM coefficients";
    case ComplexId::Nedc: return "enriched Nedelec row cohomology is de Rham with RM coefficients";
    case ComplexId::P1n: return "normal P1 restriction complex is exact past degree 0";
    case ComplexId::P0n: return "normal P0 complex cohomology is de Rham with P1 coefficients";
    case ComplexId::Hessian: return "distributional Hessian cohomology is de Rham with P1 coefficients";
    case ComplexId::Whitney: return "Whitney cohomology is de Rham cohomology";
  }
  return "";
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  for (ComplexId id : all_complex_ids()) {
    const std::string n = complex_name(id);
    r.push_back({"complex_" + n, "A A = 0 for " + n, [id](Context& c, CheckResult& out) {
                   const auto nz = c.cx(id).composition_nonzeros();
                   out.expected = json::array({0, 0});
                   out.computed = nz;
                   out.pass = nz[0] == 0 && nz[1] == 0;
                 }});
  }
  for (ComplexId id : all_complex_ids()) {
    r.push_back({"cohomology_" + complex_name(id), cohomology_anchor(id), [id](Context& c, CheckResult& out) {
                   const auto exp = expected_cohomology(id, c.mesh);
                   const auto got = c.cohomology(id);
                   out.expected = exp;
                   out.computed = got;
                   out.pass = exp == got;
                 }});
  }
  r.push_back({"twisted_equals_regge", "twisted and Regge cohomology agree", [](Context& c, CheckResult& out) {
                 out.expected = c.cohomology(ComplexId::Regge);
                 out.computed = c.cohomology(ComplexId::Twisted);
                 out.pass = out.expected == out.computed;
               }});
  r.push_back({"ned_def_kernel", "ker Def on Ned is constant-in-components RM", [](Context& c, CheckResult& out) {
                 out.expected = 6 * de_rham_betti(c.mesh)[0];
                 out.computed = nullity(c.a.ned_def());
                 out.pass = out.expected == out.computed;
               }});
  r.push_back({"coefficient_tensor", "relative homology with R^6 coefficients is 6 copies",
               [](Context& c, CheckResult& out) {
                 out.expected = true;
                 out.computed = coefficient_tensor_check(c.mesh, 6);
                 out.pass = out.computed.get<bool>();
               }});
  r.push_back({"inc_def_zero", "inc Def = 0 and div inc = 0", [](Context& c, CheckResult& out) {
                 const bool a = (c.a.regge_inc() * c.a.lag_def()).is_zero();
                 const bool b = (c.a.regge_div() * c.a.regge_inc()).is_zero();
                 out.expected = json::array({true, true});
                 out.computed = json::array({a, b});
                 out.pass = a && b;
               }});
  r.push_back({"lift_reproduces", "Def L sigma has the edge moments of sigma", [](Context& c, CheckResult& out) {
                 const int E = c.mesh.num_edges();
                 SparseMat reg_rows(E, E + 3 * c.mesh.count_interior(2));
                 for (int e = 0; e < E; ++e) reg_rows.add(e, e, 1);
                 out.expected = true;
                 out.computed = reg_rows * c.a.nedc_def() * c.a.lift_L() == SparseMat::identity(E);
                 out.pass = out.computed.get<bool>();
               }});
  r.push_back({"inc_of_correction", "inc K sigma = -inc sigma as matrices", [](Context& c, CheckResult& out) {
                 const SparseMat lhs = c.a.phi_inc() * c.a.correction_K();
                 const SparseMat rhs = Rational(-1) * (c.a.regdual_in_xhat2() * c.a.regge_inc());
                 const SparseMat diff = lhs - rhs;
                 out.expected = 0;
                 out.computed = diff.nnz();
                 out.pass = diff.is_zero();
               }});
  const auto commute_entry = [](const std::string& name, std::function<ChainMap(Assembler&)> map, ComplexId src,
                                std::function<CochainComplex(Context&)> dst) {
    return Entry{"commutes_" + name, name + " is a chain map", [=](Context& c, CheckResult& out) {
                   json squares;
                   const ChainMap m = map(c.a);
                   out.pass = commutes(m, c.cx(src), dst(c), squares);
                   out.expected = json::array({true, true, true});
                   out.computed = squares;
                 }};
  };
  r.push_back(commute_entry("kappa", [](Assembler& a) { return a.kappa(); }, ComplexId::XRm,
                            [](Context& c) { return c.a.rm_chains(); }));
  r.push_back(commute_entry("g", [](Assembler& a) { return a.g(); }, ComplexId::XRm,
                            [](Context& c) { return c.cx(ComplexId::RmAux); }));
  r.push_back(commute_entry("j", [](Assembler& a) { return a.j(); }, ComplexId::Nedc,
                            [](Context& c) { return c.cx(ComplexId::P1n); }));
  r.push_back(commute_entry("hess_geom", [](Assembler& a) { return a.hess_geom(); }, ComplexId::Hessian,
                            [](Context& c) { return c.cx(ComplexId::P0n); }));
  r.push_back(commute_entry("ned_in_x", [](Assembler& a) { return a.ned_in_x(); }, ComplexId::Ned,
                            [](Context& c) { return c.cx(ComplexId::XRm); }));
  r.push_back({"kappa_isomorphism", "every kappa^k is invertible", [](Context& c, CheckResult& out) {
                 const ChainMap m = c.a.kappa();
                 json got = json::array(), exp = json::array();
                 bool ok = true;
                 for (const auto& k : m.maps) {
                   const int rk = rank_exact(k);
                   got.push_back(rk);
                   exp.push_back(k.cols());
                   ok = ok && rk == k.rows() && rk == k.cols();
                 }
                 out.expected = exp;
                 out.computed = got;
                 out.pass = ok;
               }});
  r.push_back({"surjective_g", "g^1 and g^2 have full row rank", [](Context& c, CheckResult& out) {
                 const ChainMap m = c.a.g();
                 out.expected = json::array({m.maps[1].rows(), m.maps[2].rows()});
                 out.computed = json::array({rank_exact(m.maps[1]), rank_exact(m.maps[2])});
                 out.pass = out.expected == out.computed;
               }});
  r.push_back({"surjective_j", "j^1, j^2, j^3 have full row rank", [](Context& c, CheckResult& out) {
                 const ChainMap m = c.a.j();
                 out.expected = json::array({m.maps[1].rows(), m.maps[2].rows(), m.maps[3].rows()});
                 out.computed =
                     json::array({rank_exact(m.maps[1]), rank_exact(m.maps[2]), rank_exact(m.maps[3])});
                 out.pass = out.expected == out.computed;
               }});
  r.push_back({"kernel_g", "ker g^1 = Phi and ker g^2 = X-hat^2", [](Context& c, CheckResult& out) {
                 const ChainMap m = c.a.g();
                 const bool in1 = (m.maps[1] * c.a.phi_in_x1()).is_zero();
                 const bool in2 = (m.maps[2] * c.a.xhat2_in_x2()).is_zero();
                 const int F0 = c.mesh.count_interior(2), E0 = c.mesh.count_interior(1);
                 out.expected = json{{"nullity", {3 * F0, 5 * E0}}, {"contains", {true, true}},
                                     {"embedding_rank", {3 * F0, 5 * E0}}};
                 out.computed = json{{"nullity", {nullity(m.maps[1]), nullity(m.maps[2])}},
                                     {"contains", {in1, in2}},
                                     {"embedding_rank", {rank_exact(c.a.phi_in_x1()), rank_exact(c.a.xhat2_in_x2())}}};
                 out.pass = out.expected == out.computed;
               }});
  r.push_back({"kernel_j", "ker j is the Regge tail (0, Reg, Reg0', Lag0')", [](Context& c, CheckResult& out) {
                 const ChainMap m = c.a.j();
                 const int E = c.mesh.num_edges(), E0 = c.mesh.count_interior(1), V0 = c.mesh.count_interior(0);
                 SparseMat reg_cols(E + 3 * c.mesh.count_interior(2), E);
                 for (int e = 0; e < E; ++e) reg_cols.add(e, e, 1);
                 const bool c1 = (m.maps[1] * reg_cols).is_zero();
                 const bool c2 = (m.maps[2] * c.a.regdual_in_xhat2()).is_zero();
                 const bool c3 = (m.maps[3] * c.a.lagdual_in_x3()).is_zero();
                 const auto& regge = c.cx(ComplexId::Regge);
                 out.expected = json{{"nullity", {0, regge.dims[1], regge.dims[2], regge.dims[3]}},
                                     {"contains", {true, true, true}},
                                     {"embedding_rank", {E, E0, 3 * V0}}};
                 out.computed = json{{"nullity", {nullity(m.maps[0]), nullity(m.maps[1]), nullity(m.maps[2]),
                                                  nullity(m.maps[3])}},
                                     {"contains", {c1, c2, c3}},
                                     {"embedding_rank", {rank_exact(reg_cols), rank_exact(c.a.regdual_in_xhat2()),
                                                         rank_exact(c.a.lagdual_in_x3())}}};
                 out.pass = out.expected == out.computed;
               }});
  r.push_back({"payload_decompositions", "every face, edge and S/T payload decomposes exactly",
               [](Context& c, CheckResult& out) {
                 // A fresh assembler so the count does not depend on which checks ran first.
                 Assembler fresh(c.mesh);
                 for (ComplexId id : {ComplexId::Regge, ComplexId::Twisted, ComplexId::Ned, ComplexId::Nedc,
                                      ComplexId::P1n, ComplexId::P0n, ComplexId::Hessian})
                   fresh.complex(id);
                 fresh.t1();
                 fresh.t2();
                 fresh.j();
                 out.expected = "no residual";
                 out.computed = json{{"decompositions", fresh.decompositions()}};
                 out.pass = true;
               }});
  r.push_back({"twisted_blocks", "curl S0 = S1 grad and div S1 = S2 curl", [](Context& c, CheckResult& out) {
                 auto& a = c.a;
                 const bool b1 = a.vh_curl() * a.s0() == a.s1() * a.wh_grad();
                 const bool b2 = a.vh_div() * a.s1() == a.s2() * a.wh_curl();
                 out.expected = json::array({true, true});
                 out.computed = json::array({b1, b2});
                 out.pass = b1 && b2;
               }});
  r.push_back({"s_t_s", "S T S = S in degrees 0 and 1", [](Context& c, CheckResult& out) {
                 auto& a = c.a;
                 const bool d0 = a.s0() * a.t1() * a.s0() == a.s0();
                 const bool d1 = a.s1() * a.t2() * a.s1() == a.s1();
                 out.expected = json::array({true, true});
                 out.computed = json::array({d0, d1});
                 out.pass = d0 && d1;
               }});
  r.push_back({"t3_membership", "1/2 mskw of V3 payloads lies in W2", [](Context& c, CheckResult& out) {
                 const T3Report& t = c.a.t3();
                 out.informational = true;
                 out.expected = json{{"columns_with_residual", 0}};
                 out.computed = json{{"columns", t.columns},
                                     {"columns_with_residual", t.columns_with_residual},
                                     {"example", t.example}};
                 out.pass = t.member();
               }});
  r.push_back({"pointwise", "pointwise tensor identities on seeded rational inputs",
               [](Context& c, CheckResult& out) {
                 const auto res = verify_pointwise_identities(c.seed, 20);
                 json got = json::object(), exp = json::object();
                 bool ok = true;
                 for (const auto& ir : res) {
                   got[ir.id] = json{{"instances", ir.instances}, {"pass", ir.passed}};
                   if (!ir.passed) got[ir.id]["counterexample"] = ir.counterexample;
                   exp[ir.id] = json{{"instances", 20}, {"pass", true}};
                   ok = ok && ir.passed && ir.instances == 20;
                 }
                 out.expected = exp;
                 out.computed = got;
                 out.pass = ok;
               }});
  r.push_back({"connected", "mesh has one component", [](Context& c, CheckResult& out) {
                 out.informational = true;
                 out.expected = 1;
                 out.computed = c.mesh.num_components();
                 out.pass = out.computed.get<int>() == 1;
               }});
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = build_registry();
  return r;
}

bool selected(const std::string& name, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  for (const auto& f : filter)
    if (name == f || (name.rfind(f + "_", 0) == 0)) return true;
  return false;
}

}  // namespace

std::array<int, 4> expected_cohomology(ComplexId id, const SimplicialComplex3& mesh) {
  const auto b = de_rham_betti(mesh);
  const auto times = [&](int s) { return std::array<int, 4>{s * b[0], s * b[1], s * b[2], s * b[3]}; };
  switch (id) {
    case ComplexId::Regge:
    case ComplexId::Twisted:
    case ComplexId::XRm:
    case ComplexId::Ned:
    case ComplexId::Nedc: return times(6);
    case ComplexId::VhRow:
    case ComplexId::WhRow: return times(3);
    case ComplexId::P0n:
    case ComplexId::Hessian: return times(4);
    case ComplexId::RmAux: return {mesh.num_edges(), 0, 0, 0};
    case ComplexId::P1n: return {3 * mesh.num_vertices(), 0, 0, 0};
    case ComplexId::Whitney: return b;
  }
  throw Error(ErrorKind::UnknownComplex, "no expected cohomology");
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

VerdictReport run_checks(const SimplicialComplex3& mesh, const std::string& mesh_name, std::uint64_t seed,
                         const std::vector<std::string>& names) {
  for (const auto& n : names) {
    bool any = false;
    for (const auto& e : registry()) any = any || selected(e.name, {n});
    if (!any) throw Error(ErrorKind::InvalidParams, "unknown check '" + n + "'");
  }
  VerdictReport report;
  report.mesh = mesh_name;
  report.seed = seed;
  Context ctx(mesh, seed);
  for (const auto& e : registry()) {
    if (!selected(e.name, names)) continue;
    CheckResult res;
    res.name = e.name;
    res.anchor = e.anchor;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(ctx, res);
    } catch (const std::exception& ex) {
      res.pass = false;
      res.computed = json{{"error", ex.what()}};
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(res));
  }
  return report;
}

bool VerdictReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass && !c.informational) return false;
  return true;
}

nlohmann::json VerdictReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks)
    checks_json.push_back(json{{"name", c.name},
                               {"anchor", c.anchor},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"pass", c.pass},
                               {"informational", c.informational}});
  return json{{"mesh", mesh}, {"seed", seed}, {"checks", checks_json}, {"pass", pass()}};
}

void VerdictReport::write_text(std::ostream& out) const {
  out << "mesh " << mesh << ", seed " << seed << "\n";
  for (const auto& c : checks) {
    const char* tag = c.pass ? "PASS" : (c.informational ? "INFO" : "FAIL");
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3fs", c.seconds);
    out << tag << "  " << c.name << "  (" << secs << ")  " << c.anchor << "\n";
    if (!c.pass) out << "      expected " << c.expected.dump() << "\n      computed " << c.computed.dump() << "\n";
  }
  out << (pass() ? "ALL PASS" : "FAILURES") << "\n";
}

}  // namespace regge
