#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "regge/cartan.hpp"
#include "regge/verify.hpp"

using namespace regge;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

json dims_json(const std::array<int, 4>& d) { return json(d); }

int cmd_mesh_gen(const std::string& kind, const std::vector<int>& n, const std::string& out) {
  std::string spec = kind;
  if (kind == "box") {
    if (n.size() != 3) throw UsageError("--kind box needs --n NX NY NZ");
    spec = "box:" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]);
  }
  if (!is_mesh_spec(spec)) throw UsageError("unknown mesh kind '" + kind + "'");
  const auto mesh = generate_mesh(parse_mesh_spec(spec));
  std::ostringstream text;
  write_mesh(text, mesh);
  emit(text.str(), out);
  std::ostream& info = out.empty() ? std::cerr : std::cout;
  info << "vertices " << mesh.num_vertices() << " edges " << mesh.num_edges() << " faces " << mesh.num_faces()
       << " tets " << mesh.num_tets() << "\n";
  info << "interior vertices " << mesh.count_interior(0) << " edges " << mesh.count_interior(1) << " faces "
       << mesh.count_interior(2) << "\n";
  return kPass;
}

int cmd_cohomology(const std::string& mesh_src, const std::string& complex_id, const std::string& format) {
  const ComplexId id = parse_complex_id(complex_id);
  const auto mesh = load_mesh(mesh_src);
  Assembler a(mesh);
  const auto report = cohomology_dims(a.complex(id));
  const auto d = report.dims();
  const std::array<int, 4> dims{d[0], d[1], d[2], d[3]};
  const auto expected = expected_cohomology(id, mesh);
  const bool pass = dims == expected;
  if (format == "json") {
    std::cout << json{{"complex", complex_id}, {"dims", dims_json(dims)}, {"expected", dims_json(expected)},
                      {"pass", pass}}
                     .dump()
              << "\n";
  } else {
    std::cout << complex_id << " on " << mesh_src << "\n";
    for (std::size_t k = 0; k < report.degrees.size(); ++k) {
      const auto& g = report.degrees[k];
      std::cout << "  degree " << k << ": dim " << g.dim << ", rank " << g.rank << ", H " << g.cohomology
                << " (expected " << expected[k] << ")\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kFail;
}

int cmd_verify(const std::string& mesh_src, bool all, const std::vector<std::string>& checks, std::uint64_t seed,
               const std::string& format, const std::string& out) {
  if (!all && checks.empty()) throw UsageError("give --all or at least one --check");
  const auto mesh = load_mesh(mesh_src);
  const auto report = run_checks(mesh, mesh_src, seed, all ? std::vector<std::string>{} : checks);
  if (format == "json") {
    emit(report.to_json().dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    report.write_text(text);
    emit(text.str(), out);
  }
  return report.pass() ? kPass : kFail;
}

int cmd_cartan(const std::string& mesh_src, const std::string& first, const std::string& second, bool solve,
               const std::string& out) {
  const auto mesh = load_mesh(mesh_src);
  Assembler a(mesh);
  Cartan c(a);
  const FieldVector f1 = field_from_json(read_json_file(first));
  const FieldVector f2 = field_from_json(read_json_file(second));
  if (!solve) {
    const auto tr = c.torsion_curvature(f1, f2);
    emit(json{{"torsion", field_to_json(tr.first)}, {"curvature", field_to_json(tr.second)}}.dump(2) + "\n", out);
    return kPass;
  }
  const auto p = c.potential_solve(f1, f2);
  json result{{"solved", p.solved}};
  if (p.solved) {
    const auto back = c.torsion_curvature(p.solution.first, p.solution.second);
    result["theta"] = field_to_json(p.solution.first);
    result["gamma"] = field_to_json(p.solution.second);
    result["roundtrip"] = back.first.coefficients == f1.coefficients && back.second.coefficients == f2.coefficients;
  } else {
    result["reason"] = p.reason;
    json w = json::array();
    for (const auto& x : p.witness) w.push_back(to_string(x));
    result["witness"] = w;
  }
  emit(result.dump(2) + "\n", out);
  return p.solved ? kPass : kFail;
}

int cmd_export(const std::string& mesh_src, const std::string& complex_id, int degree, const std::string& out) {
  const ComplexId id = parse_complex_id(complex_id);
  if (degree < 0 || degree > 2) throw UsageError("--degree must be 0, 1 or 2");
  const auto mesh = load_mesh(mesh_src);
  Assembler a(mesh);
  std::ostringstream text;
  write_matrix(text, a.complex(id).maps[static_cast<std::size_t>(degree)]);
  emit(text.str(), out);
  return kPass;
}

bool is_usage_kind(ErrorKind k) {
  return k == ErrorKind::Parse || k == ErrorKind::InvalidParams || k == ErrorKind::UnknownComplex ||
         k == ErrorKind::UnknownSpace || k == ErrorKind::DimensionMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact discrete Regge, twisted and auxiliary complexes on tetrahedral meshes"};
  app.require_subcommand(1);

  auto* mesh = app.add_subcommand("mesh", "mesh utilities");
  mesh->require_subcommand(1);
  auto* gen = mesh->add_subcommand("gen", "generate a test mesh");
  std::string kind, out;
  std::vector<int> n;
  gen->add_option("--kind", kind, "tet | twotet | box | tunnel | cavity")->required();
  gen->add_option("--n", n, "box subdivisions NX NY NZ")->expected(3);
  gen->add_option("--out", out, "output mesh file (stdout when omitted)");

  std::string mesh_src = "tet", complex_id, format = "json";
  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions of one complex");
  coh->add_option("--complex", complex_id, "complex id")->required();
  coh->add_option("--mesh", mesh_src, "mesh file or generator spec (tet, box:2,2,2, ...)");
  coh->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  bool all = false;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_flag("--all", all, "run every check");
  ver->add_option("--check", checks, "check name or group prefix (repeatable)");
  ver->add_option("--mesh", mesh_src, "mesh file or generator spec");
  ver->add_option("--seed", seed, "seed for randomized checks");
  ver->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--out", out, "report file (stdout when omitted)");

  std::string first, second;
  bool solve = false;
  auto* car = app.add_subcommand("cartan", "torsion and curvature of (theta, gamma), or --solve for a potential");
  car->add_option("--mesh", mesh_src, "mesh file or generator spec");
  car->add_option("--theta,--torsion", first, "field JSON on vh1 (or vh2 with --solve)")->required();
  car->add_option("--gamma,--curvature", second, "field JSON on wh1 (or wh2 with --solve)")->required();
  car->add_flag("--solve", solve, "find (theta, gamma) with A1(theta, gamma) = (T, R)");
  car->add_option("--out", out, "output file (stdout when omitted)");

  int degree = 0;
  auto* exp = app.add_subcommand("export-matrix", "write one differential as rational coordinate text");
  exp->add_option("--mesh", mesh_src, "mesh file or generator spec");
  exp->add_option("--complex", complex_id, "complex id")->required();
  exp->add_option("--degree", degree, "0, 1 or 2")->required();
  exp->add_option("--out", out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_mesh_gen(kind, n, out);
    if (coh->parsed()) return cmd_cohomology(mesh_src, complex_id, format);
    if (ver->parsed()) return cmd_verify(mesh_src, all, checks, seed, format, out);
    if (car->parsed()) return cmd_cartan(mesh_src, first, second, solve, out);
    if (exp->parsed()) return cmd_export(mesh_src, complex_id, degree, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_usage_kind(e.kind()) ? kUsage : kFail;
  }
  return kUsage;
}
