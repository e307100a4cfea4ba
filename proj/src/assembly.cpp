#include "regge/assembly.hpp"

#include <ostream>

#include "assembly_internal.hpp"

namespace regge {

using detail::at;

namespace {

const std::vector<std::pair<ComplexId, std::string>>& complex_names() {
  static const std::vector<std::pair<ComplexId, std::string>> names{
      {ComplexId::Regge, "regge"}, {ComplexId::Twisted, "twisted"}, {ComplexId::VhRow, "vh_row"},
      {ComplexId::WhRow, "wh_row"}, {ComplexId::XRm, "x_rm"},       {ComplexId::RmAux, "rm_aux"},
      {ComplexId::Ned, "ned"},     {ComplexId::Nedc, "nedc"},       {ComplexId::P1n, "p1n"},
      {ComplexId::P0n, "p0n"},     {ComplexId::Hessian, "hessian"}, {ComplexId::Whitney, "whitney"},
  };
  return names;
}

SparseMat identity_map(int n) { return SparseMat::identity(n); }

}  // namespace

const std::vector<ComplexId>& all_complex_ids() {
  static const std::vector<ComplexId> ids = [] {
    std::vector<ComplexId> out;
    for (const auto& [id, name] : complex_names()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::string complex_name(ComplexId id) {
  for (const auto& [cid, name] : complex_names())
    if (cid == id) return name;
  return "?";
}

ComplexId parse_complex_id(const std::string& name) {
  for (const auto& [cid, n] : complex_names())
    if (n == name) return cid;
  throw Error(ErrorKind::UnknownComplex, "'" + name + "'");
}

CochainComplex Assembler::complex(ComplexId id) {
  CochainComplex c;
  c.label = complex_name(id);
  const int V = mesh_.num_vertices(), K = mesh_.num_tets(), E = mesh_.num_edges();
  const int E0 = mesh_.count_interior(1), F0 = mesh_.count_interior(2);
  switch (id) {
    case ComplexId::Regge:
      c.space_ids = {"lag", "reg", "reg0_dual", "lag0_dual"};
      c.maps = {lag_def(), regge_inc(), regge_div()};
      break;
    case ComplexId::Twisted: {
      c.space_ids = {"lag+wh0", "vh1+wh1", "vh2+wh2", "vh3+wh3"};
      const int vh1 = space("vh1").dim(), vh2 = space("vh2").dim(), vh3 = space("vh3").dim();
      const SparseMat minus_s1 = Rational(-1) * s1();
      c.maps = {block_matrix({{&vh_grad(), &s0()}, {nullptr, &wh_grad()}}, {vh1, 3 * F0}, {3 * V, 3 * K}),
                block_matrix({{&vh_curl(), &minus_s1}, {nullptr, &wh_curl()}}, {vh2, 3 * E0}, {vh1, 3 * F0}),
                block_matrix({{&vh_div(), &s2()}, {nullptr, &wh_div()}}, {vh3, 3 * mesh_.count_interior(0)},
                             {vh2, 3 * E0})};
      break;
    }
    case ComplexId::VhRow:
      c.space_ids = {"lag", "vh1", "vh2", "vh3"};
      c.maps = {vh_grad(), vh_curl(), vh_div()};
      break;
    case ComplexId::WhRow:
      c.space_ids = {"wh0", "wh1", "wh2", "wh3"};
      c.maps = {wh_grad(), wh_curl(), wh_div()};
      break;
    case ComplexId::XRm:
      c.space_ids = {"x0", "x1", "x2", "x3"};
      c.maps = {x_def(), x_inc(), x_div()};
      break;
    case ComplexId::RmAux:
      c.space_ids = {"x0", "rm_f", "rm_e", "zero"};
      c.maps = {rm_aux0(), rm_aux1(), SparseMat(0, E0)};
      break;
    case ComplexId::Ned:
      c.space_ids = {"ned", "phi", "xhat2", "x3"};
      c.maps = {ned_def(), phi_inc(), xhat2_div()};
      break;
    case ComplexId::Nedc:
      c.space_ids = {"nedc", "reg+phi", "xhat2", "x3"};
      c.maps = {nedc_def(), nedc_inc(), xhat2_div()};
      break;
    case ComplexId::P1n: {
      c.space_ids = {"nedc", "p1n_f", "p1n_e", "p1n_v"};
      SparseMat select(3 * F0, E + 3 * F0);
      for (int i = 0; i < 3 * F0; ++i) select.add(i, E + i, 1);
      c.maps = {select * nedc_def(), p1n1(), p1n2()};
      break;
    }
    case ComplexId::P0n:
      c.space_ids = {"scalar_lag", "p0n_f", "p0n_e", "p0n_v"};
      c.maps = {p0n0(), p0n1(), p0n2()};
      break;
    case ComplexId::Hessian:
      c.space_ids = {"scalar_lag", "hess_v1", "hess_v2", "hess_v3"};
      c.maps = {hess0(), hess_curl(), hess_div()};
      break;
    case ComplexId::Whitney:
      c.space_ids = {"whitney0", "whitney1", "whitney2", "whitney3"};
      c.maps = {absolute_coboundary(mesh_, 0), absolute_coboundary(mesh_, 1), absolute_coboundary(mesh_, 2)};
      break;
  }
  for (const auto& s : c.space_ids) c.dims.push_back(space(s).dim());
  c.validate_shapes();
  return c;
}

CochainComplex Assembler::rm_chains() {
  CochainComplex c;
  c.label = "rm_chains";
  c.space_ids = {"x0", "x1", "x2", "x3"};
  c.dims = {6 * mesh_.num_tets(), 6 * mesh_.count_interior(2), 6 * mesh_.count_interior(1),
            6 * mesh_.count_interior(0)};
  for (int k = 3; k >= 1; --k) c.maps.push_back(relative_boundary(mesh_, k).kron_identity(6));
  c.validate_shapes();
  return c;
}

ChainMap Assembler::kappa() {
  ChainMap m{"kappa", "x_rm", "rm_chains", {}};
  for (int d : rm_chains().dims) m.maps.push_back(identity_map(d));
  return m;
}

ChainMap Assembler::g() {
  const auto basis = rm_basis();
  const int F0 = mesh_.count_interior(2), E0 = mesh_.count_interior(1);
  SparseMat g1(3 * F0, 6 * F0), g2(E0, 6 * E0);
  for (int fi = 0; fi < F0; ++fi) {
    const int f = mesh_.interior_list(2)[at(fi)];
    for (int j = 0; j < 3; ++j) {
      const int e = mesh_.face_edges(f)[at(j)];
      const Vec3 mid = edge_midpoint(mesh_, e);
      for (int i = 0; i < 6; ++i) g1.add(3 * fi + j, 6 * fi + i, dot(basis[at(i)](mid), fr_.edge_t[at(e)]));
    }
  }
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const Vec3 mid = edge_midpoint(mesh_, e);
    for (int i = 0; i < 6; ++i) g2.add(ei, 6 * ei + i, dot(basis[at(i)](mid), fr_.edge_t[at(e)]));
  }
  return {"g", "x_rm", "rm_aux",
          {identity_map(6 * mesh_.num_tets()), g1, g2, SparseMat(0, 6 * mesh_.count_interior(0))}};
}

ChainMap Assembler::j() {
  const int E = mesh_.num_edges(), E0 = mesh_.count_interior(1), F0 = mesh_.count_interior(2);
  const int V0 = mesh_.count_interior(0);
  SparseMat j1(3 * F0, E + 3 * F0), j2(4 * E0, 5 * E0), j3(3 * V0, 6 * V0);
  for (int i = 0; i < 3 * F0; ++i) j1.add(i, E + i, 1);
  for (int ei = 0; ei < E0; ++ei) {
    const int e = mesh_.interior_list(1)[at(ei)];
    const auto basis = xhat2_basis(mesh_, fr_, e);
    for (int l = 0; l < 5; ++l)
      for (int a = 0; a < 2; ++a) {
        const auto c = decompose_edge_normal(e, basis[at(l)](mesh_.point(mesh_.edge(e)[at(a)])), "j2");
        for (int i = 0; i < 2; ++i) j2.add(4 * ei + 2 * a + i, 5 * ei + l, c[at(i)]);
      }
  }
  const auto rm = rm_basis();
  for (int xi = 0; xi < V0; ++xi) {
    const Vec3& x = mesh_.point(mesh_.interior_list(0)[at(xi)]);
    for (int i = 0; i < 6; ++i) {
      const Vec3 v = rm[at(i)](x);
      for (int c = 0; c < 3; ++c) j3.add(3 * xi + c, 6 * xi + i, v[c]);
    }
  }
  return {"j", "nedc", "p1n", {identity_map(2 * E), j1, j2, j3}};
}

ChainMap Assembler::hess_geom() {
  const int F0 = mesh_.count_interior(2);
  return {"hess_geom", "hessian", "p0n",
          {identity_map(mesh_.num_vertices()), Rational(-1) * identity_map(F0),
           identity_map(2 * mesh_.count_interior(1)), identity_map(3 * mesh_.count_interior(0))}};
}

ChainMap Assembler::ned_in_x() {
  return {"ned_in_x", "ned", "x_rm",
          {ned_in_x0(), phi_in_x1(), xhat2_in_x2(), identity_map(6 * mesh_.count_interior(0))}};
}

void write_matrix(std::ostream& out, const SparseMat& m) {
  out << "%%MatrixMarket matrix coordinate rational general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out << r + 1 << ' ' << c + 1 << ' ' << to_string(v) << '\n';
}

}  // namespace regge
