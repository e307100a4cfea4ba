#pragma once

#include <optional>
#include <vector>

#include "regge/rational.hpp"

namespace regge {

/// Small dense exact matrices for per-simplex solves (Gram systems, 6x6 RM
/// fits). Row-major, rows may not be ragged.
using DenseVec = std::vector<Rational>;
using DenseMat = std::vector<DenseVec>;

struct Echelon {
  DenseMat reduced;           // reduced row echelon form
  std::vector<int> pivots;    // pivot column per nonzero row
};

Echelon rref(DenseMat a);
int dense_rank(const DenseMat& a);
/// Any solution of a x = b; nullopt when inconsistent. Overdetermined
/// consistent systems are fine.
std::optional<DenseVec> dense_solve(const DenseMat& a, const DenseVec& b);
/// Basis of {x : a x = 0}, one vector per free column.
std::vector<DenseVec> dense_nullspace(const DenseMat& a, int ncols);
DenseVec dense_apply(const DenseMat& a, const DenseVec& x);

}  // namespace regge
