#include "regge/identities.hpp"

#include <functional>

#include "regge/poly.hpp"

namespace regge {

namespace {

std::string describe(const Vec3& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

IdentityResult run(const std::string& id, const std::string& statement, int instances,
                   const std::function<std::string(int)>& instance) {
  IdentityResult r{id, statement, instances, true, {}};
  for (int k = 0; k < instances; ++k) {
    std::string bad = instance(k);
    if (!bad.empty()) {
      r.passed = false;
      r.counterexample = "instance " + std::to_string(k) + ": " + bad;
      break;
    }
  }
  return r;
}

}  // namespace

std::vector<IdentityResult> verify_pointwise_identities(std::uint64_t seed, int instances) {
  RationalSampler rng(seed);
  std::vector<IdentityResult> out;

  out.push_back(run("rm_traceless_curl", "p.curl(A).n = curl(p.A).n + 1/2 n.A.curl(p)", instances, [&](int) {
    const RigidMotion p = rng.rm();
    const MatPoly a = random_traceless_poly(rng, 2);
    const Vec3 n = rng.vec();
    const VecPoly pf = rm_field(p);
    const Poly lhs = dot(left_mul(pf, curl_rows(a)), n);
    const Poly rhs = dot(curl(left_mul(pf, a)), n) + Rational(1, 2) * dot(left_mul(vec_constant(n), a), p.curl());
    return lhs == rhs ? std::string() : "p.a=" + describe(p.a) + " p.b=" + describe(p.b) + " n=" + describe(n);
  }));

  out.push_back(run("symgrad", "grad(u):(a x b) - Def(u):(a x b) = -1/2 curl(u).(a cross b)", instances, [&](int) {
    const VecPoly u = random_vec_poly(rng, 2);
    const Vec3 a = rng.vec();
    const Vec3 b = rng.vec();
    const Mat3 ab = Mat3::outer(a, b);
    const Poly lhs = frobenius(grad(u), ab) - frobenius(def(u), ab);
    const Poly rhs = Rational(-1, 2) * dot(curl(u), cross(a, b));
    return lhs == rhs ? std::string() : "a=" + describe(a) + " b=" + describe(b);
  }));

  out.push_back(run("mskw_cross", "mskw(c) x n = -(c.n) I + n (x) c", instances, [&](int) {
    const Vec3 c = rng.vec();
    const Vec3 n = rng.vec();
    const Mat3 lhs = row_cross(mskw(c), n);
    const Mat3 rhs = -dot(c, n) * Mat3::identity() + Mat3::outer(n, c);
    return lhs == rhs ? std::string() : "c=" + describe(c) + " n=" + describe(n);
  }));

  out.push_back(run("sym_split", "sym = id - mskw o vskw", instances, [&](int) {
    const Mat3 m = rng.mat();
    return sym(m) == m - mskw(vskw(m)) ? std::string() : "random matrix";
  }));

  out.push_back(run("s_inverse", "Sinv o S = S o Sinv = id", instances, [&](int) {
    const Mat3 u = rng.mat();
    return (S_inv_op(S_op(u)) == u && S_op(S_inv_op(u)) == u) ? std::string() : "random matrix";
  }));

  out.push_back(run("mskw_pairing", "A : mskw(n) = 2 vskw(A).n", instances, [&](int) {
    const Mat3 a = rng.mat();
    const Vec3 n = rng.vec();
    return frobenius(a, mskw(n)) == 2 * dot(vskw(a), n) ? std::string() : "n=" + describe(n);
  }));

  return out;
}

void require_pointwise_identities(std::uint64_t seed, int instances) {
  for (const auto& r : verify_pointwise_identities(seed, instances))
    if (!r.passed) throw Error(ErrorKind::IdentityViolated, r.id + " " + r.counterexample);
}

}  // namespace regge
