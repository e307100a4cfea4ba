#include <algorithm>
#include <fstream>
#include <sstream>

#include "regge/mesh.hpp"

namespace regge {

namespace {

// Kuhn subdivision: one tet per permutation of the axes, all sharing the
// main diagonal of the cube.
constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

SimplicialComplex3 cube_grid(int nx, int ny, int nz, const std::vector<std::array<int, 3>>& removed) {
  const auto vid = [&](int i, int j, int k) { return i + (nx + 1) * (j + (ny + 1) * k); };
  std::vector<std::array<int, 4>> tets;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        if (std::find(removed.begin(), removed.end(), std::array<int, 3>{i, j, k}) != removed.end()) continue;
        for (const auto& p : kPerms) {
          std::array<int, 3> c{i, j, k};
          std::array<int, 4> t{};
          t[0] = vid(c[0], c[1], c[2]);
          for (std::size_t s = 0; s < 3; ++s) {
            c[static_cast<std::size_t>(p[s])] += 1;
            t[s + 1] = vid(c[0], c[1], c[2]);
          }
          tets.push_back(t);
        }
      }
  // Keep only vertices that some tet uses, renumbered in grid order.
  const int total = (nx + 1) * (ny + 1) * (nz + 1);
  std::vector<int> remap(static_cast<std::size_t>(total), -1);
  for (const auto& t : tets)
    for (int v : t) remap[static_cast<std::size_t>(v)] = 0;
  std::vector<Point3> pts;
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) {
        auto& r = remap[static_cast<std::size_t>(vid(i, j, k))];
        if (r < 0) continue;
        r = static_cast<int>(pts.size());
        pts.push_back({i, j, k});
      }
  for (auto& t : tets)
    for (int& v : t) v = remap[static_cast<std::size_t>(v)];
  return SimplicialComplex3::build(std::move(pts), tets);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

// Next line with content, split into tokens; false at end of input.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    tokens.clear();
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) return true;
  }
  return false;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

int parse_count(const std::vector<std::string>& tokens, const std::string& keyword, int line_no) {
  if (tokens.size() != 2 || tokens[0] != keyword) parse_fail(line_no, "expected '" + keyword + " N'");
  try {
    std::size_t used = 0;
    const int n = std::stoi(tokens[1], &used);
    if (used != tokens[1].size() || n < 0) parse_fail(line_no, "bad count '" + tokens[1] + "'");
    return n;
  } catch (const std::logic_error&) {
    parse_fail(line_no, "bad count '" + tokens[1] + "'");
  }
}

}  // namespace

SimplicialComplex3 generate_mesh(const MeshSpec& spec) {
  switch (spec.kind) {
    case MeshKind::Tet:
      return SimplicialComplex3::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}});
    case MeshKind::TwoTet:
      return SimplicialComplex3::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}},
                                       {{0, 1, 2, 3}, {1, 2, 3, 4}});
    case MeshKind::Box:
      if (spec.nx < 1 || spec.ny < 1 || spec.nz < 1)
        throw Error(ErrorKind::InvalidParams, "box dimensions must be positive");
      return cube_grid(spec.nx, spec.ny, spec.nz, {});
    case MeshKind::Tunnel: return cube_grid(3, 3, 1, {{1, 1, 0}});
    case MeshKind::Cavity: return cube_grid(3, 3, 3, {{1, 1, 1}});
  }
  throw Error(ErrorKind::InvalidParams, "unknown mesh kind");
}

bool is_mesh_spec(const std::string& text) {
  return text == "tet" || text == "twotet" || text == "tunnel" || text == "cavity" || text.rfind("box:", 0) == 0;
}

MeshSpec parse_mesh_spec(const std::string& text) {
  if (text == "tet") return {MeshKind::Tet};
  if (text == "twotet") return {MeshKind::TwoTet};
  if (text == "tunnel") return {MeshKind::Tunnel};
  if (text == "cavity") return {MeshKind::Cavity};
  if (text.rfind("box:", 0) == 0) {
    MeshSpec s{MeshKind::Box};
    std::string rest = text.substr(4);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream ss(rest);
    std::string extra;
    if (!(ss >> s.nx >> s.ny >> s.nz) || (ss >> extra))
      throw Error(ErrorKind::InvalidParams, "expected box:NX,NY,NZ, got '" + text + "'");
    if (s.nx < 1 || s.ny < 1 || s.nz < 1) throw Error(ErrorKind::InvalidParams, "box dimensions must be positive");
    return s;
  }
  throw Error(ErrorKind::InvalidParams, "unknown mesh kind '" + text + "'");
}

std::string mesh_spec_name(const MeshSpec& spec) {
  switch (spec.kind) {
    case MeshKind::Tet: return "tet";
    case MeshKind::TwoTet: return "twotet";
    case MeshKind::Tunnel: return "tunnel";
    case MeshKind::Cavity: return "cavity";
    case MeshKind::Box:
      return "box:" + std::to_string(spec.nx) + "," + std::to_string(spec.ny) + "," + std::to_string(spec.nz);
  }
  return "unknown";
}

SimplicialComplex3 read_mesh(std::istream& in) {
  std::vector<std::string> tok;
  int line_no = 0;
  if (!next_tokens(in, tok, line_no)) parse_fail(line_no, "empty mesh file");
  const int nv = parse_count(tok, "vertices", line_no);
  std::vector<Point3> pts;
  for (int i = 0; i < nv; ++i) {
    if (!next_tokens(in, tok, line_no)) parse_fail(line_no, "missing vertex line");
    if (tok.size() != 3) parse_fail(line_no, "vertex needs three coordinates");
    Point3 p;
    for (int c = 0; c < 3; ++c) {
      try {
        p[c] = parse_rational(tok[static_cast<std::size_t>(c)]);
      } catch (const std::invalid_argument& e) {
        parse_fail(line_no, e.what());
      }
    }
    pts.push_back(p);
  }
  if (!next_tokens(in, tok, line_no)) parse_fail(line_no, "missing 'tets M'");
  const int nt = parse_count(tok, "tets", line_no);
  std::vector<std::array<int, 4>> tets;
  for (int i = 0; i < nt; ++i) {
    if (!next_tokens(in, tok, line_no)) parse_fail(line_no, "missing tet line");
    if (tok.size() != 4) parse_fail(line_no, "tet needs four indices");
    std::array<int, 4> t{};
    for (std::size_t c = 0; c < 4; ++c) {
      std::size_t used = 0;
      try {
        t[c] = std::stoi(tok[c], &used);
      } catch (const std::logic_error&) {
        parse_fail(line_no, "bad index '" + tok[c] + "'");
      }
      if (used != tok[c].size()) parse_fail(line_no, "bad index '" + tok[c] + "'");
    }
    tets.push_back(t);
  }
  if (next_tokens(in, tok, line_no)) parse_fail(line_no, "trailing content");
  return SimplicialComplex3::build(std::move(pts), tets);
}

SimplicialComplex3 read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open mesh file '" + path + "'");
  return read_mesh(in);
}

void write_mesh(std::ostream& out, const SimplicialComplex3& mesh) {
  out << "vertices " << mesh.num_vertices() << "\n";
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const Point3& p = mesh.point(v);
    out << to_string(p[0]) << " " << to_string(p[1]) << " " << to_string(p[2]) << "\n";
  }
  out << "tets " << mesh.num_tets() << "\n";
  for (int k = 0; k < mesh.num_tets(); ++k) {
    const auto t = mesh.oriented_tet(k);
    out << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
  }
}

SimplicialComplex3 load_mesh(const std::string& source) {
  if (is_mesh_spec(source)) return generate_mesh(parse_mesh_spec(source));
  return read_mesh_file(source);
}

}  // namespace regge
