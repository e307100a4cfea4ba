#include "regge/cartan.hpp"

namespace regge {

namespace {

DenseVec concat(const FieldVector& a, const FieldVector& b) {
  DenseVec v(a.coefficients);
  v.insert(v.end(), b.coefficients.begin(), b.coefficients.end());
  return v;
}

Cartan::Fields split(const DenseVec& v, const DofSpace& first, const DofSpace& second) {
  const auto mid = v.begin() + first.dim();
  return {{first.id(), DenseVec(v.begin(), mid)}, {second.id(), DenseVec(mid, v.end())}};
}

}  // namespace

void require_field(const FieldVector& f, const DofSpace& space) {
  if (f.space != space.id() || static_cast<int>(f.coefficients.size()) != space.dim())
    throw Error(ErrorKind::DimensionMismatch, "expected a field on " + space.id() + " with " +
                                                  std::to_string(space.dim()) + " coefficients, got " + f.space +
                                                  " with " + std::to_string(f.coefficients.size()));
}

const SparseMat& Cartan::a1() {
  if (!twisted_) twisted_ = a_.complex(ComplexId::Twisted);
  return twisted_->maps[1];
}

const SparseMat& Cartan::a2() {
  if (!twisted_) twisted_ = a_.complex(ComplexId::Twisted);
  return twisted_->maps[2];
}

Cartan::Fields Cartan::torsion_curvature(const FieldVector& theta, const FieldVector& gamma) {
  require_field(theta, theta_space());
  require_field(gamma, gamma_space());
  return split(a1().apply(concat(theta, gamma)), torsion_space(), curvature_space());
}

Cartan::Fields Cartan::bianchi(const FieldVector& torsion, const FieldVector& curvature) {
  require_field(torsion, torsion_space());
  require_field(curvature, curvature_space());
  return split(a2().apply(concat(torsion, curvature)), a_.space("vh3"), a_.space("wh3"));
}

FieldVector Cartan::regge_metric_curvature(const std::vector<Rational>& edge_data) {
  require_field({"reg", edge_data}, a_.space("reg"));
  return {"reg0_dual", a_.regge_inc().apply(edge_data)};
}

Cartan::Potential Cartan::potential_solve(const FieldVector& torsion, const FieldVector& curvature) {
  require_field(torsion, torsion_space());
  require_field(curvature, curvature_space());
  const DenseVec b = concat(torsion, curvature);
  Potential out;
  const DenseVec closed = a2().apply(b);
  for (const auto& x : closed)
    if (!is_zero(x)) {
      out.reason = "closedness";
      out.witness = closed;
      return out;
    }
  if (const auto x = solve_exact(a1(), b)) {
    out.solved = true;
    out.solution = split(*x, theta_space(), gamma_space());
    return out;
  }
  out.reason = "cohomology";
  for (const DenseVec& y : nullspace_exact(a1().transpose())) {
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * b[i];
    if (!is_zero(s)) {
      out.witness = y;
      break;
    }
  }
  return out;
}

nlohmann::json field_to_json(const FieldVector& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients) coeffs.push_back(to_string(c));
  return {{"space", f.space}, {"coefficients", coeffs}};
}

FieldVector field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("coefficients") || !j["space"].is_string() ||
      !j["coefficients"].is_array())
    throw Error(ErrorKind::Parse, "field JSON needs a string 'space' and an array 'coefficients'");
  FieldVector f;
  f.space = j["space"].get<std::string>();
  for (const auto& c : j["coefficients"]) {
    if (c.is_string()) {
      f.coefficients.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      f.coefficients.push_back(from_fraction(c.get<long>()));
    } else {
      throw Error(ErrorKind::Parse, "coefficient " + c.dump() + " is neither an integer nor a \"p/q\" string");
    }
  }
  return f;
}

}  // namespace regge
