#pragma once

#include <tatek/common.hpp>

namespace tatek {

using BigMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using BigVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Exact determinant (fraction-free Bareiss).
Int int_det(const IntMat& m);

/// Adjugate, so that adj(m) * m = det(m) * I.
BigMat int_adjugate(const IntMat& m);

/// Sylvester test on an exact symmetric matrix.
bool is_positive_definite(const IntMat& m);

/// Solves m * x = d over the integers. Requires det(m) != 0; returns false
/// when the rational solution is not integral.
bool solve_integral(const IntMat& m, const IntVec& d, IntVec& x);

/// Rank of an integer matrix (fraction-free elimination; equals the number
/// of nonzero diagonal entries of the Smith normal form).
i64 int_rank(BigMat m);

/// Column-style Hermite normal form, lower triangular with positive diagonal:
/// returns H with the same column span as m. Requires det(m) != 0.
IntMat hermite_normal_form(IntMat m);

}  // namespace tatek
