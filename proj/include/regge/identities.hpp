#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace regge {

struct IdentityResult {
  std::string id;
  std::string statement;
  int instances = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

/// Exact checks of the pointwise tensor identities on seeded random inputs:
///   rm_traceless_curl   p·curl A·n = curl(p·A)·n + ½ n·A·curl p  (p ∈ RM, tr A = 0)
///   symgrad             grad u:(a⊗b) − Def u:(a⊗b) = −½ curl u·(a×b)
///   mskw_cross          mskw(c)×n = −(c·n)I + n⊗c
///   sym_split           sym = id − mskw∘vskw
///   s_inverse           Sinv∘S = S∘Sinv = id
///   mskw_pairing        A:mskw(n) = 2 vskw(A)·n
/// Polynomial inputs have degree ≤ 2.
std::vector<IdentityResult> verify_pointwise_identities(std::uint64_t seed, int instances = 20);

/// Same as above but throws Error(IdentityViolated) on the first failure.
void require_pointwise_identities(std::uint64_t seed, int instances = 20);

}  // namespace regge
