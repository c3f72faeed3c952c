#pragma once

#include <tatek/affine_weyl.hpp>
#include <tatek/weighted_qseries.hpp>

#include <utility>
#include <vector>

namespace tatek {

enum class LineBundleClass { ample, anti_ample, rejected };

/// Polarization class of the (H, d) pair attached to an integer form:
/// ample iff positive definite, anti_ample iff negative definite.
LineBundleClass classify_line_bundle(const IntMat& form);
LineBundleClass classify_line_bundle(const Twisting& tw);

/// One theta series per coset of the lattice modulo form * lattice: the orbit
/// sum of (c, 0) under the translation action, truncated at `order`.
/// Count = |det form|. Throws NotPositive / OrderTooSmall.
/// Cosets may be processed by up to `jobs` workers; the merge is by coset
/// index, so the result does not depend on the worker count.
std::vector<WeightedQSeries> theta_basis(const Twisting& tw, i64 order, int jobs = 1);

/// Functional-equation check on the truncation-safe window: every stored term
/// must match the coefficient at its translate under p.
bool check_theta_invariance(const Twisting& tw, const WeightedQSeries& f,
                            const Coweight& p);

/// Rank-1 duality of section counts: rank_pos = |theta_basis|, rank_neg = free
/// rank of the coinvariants of the inverse-sign translation action on a finite
/// monomial window. Throws RankNotOne / NotStabilized.
std::pair<i64, i64> abelian_duality_ranks(const Twisting& tw, i64 window, i64 order);

struct ThetaPairing {
    std::vector<Weight> cosets;                  // canonical coset representatives
    std::vector<std::vector<QSeries>> matrix;    // M[c][c'] as below
    QSeries det;
};

/// Pairing of the theta basis against the coset monomial classes of the
/// opposite-sign side: M[c][c'] extracts the q-series of theta_c at the
/// representative weight of c'. Determinant is a unit of the Laurent ring.
ThetaPairing theta_pairing_matrix(const Twisting& tw, i64 order);

/// Determinant of a square matrix of q-series by Laplace expansion.
QSeries qs_det(const std::vector<std::vector<QSeries>>& m, i64 trunc_order);

}  // namespace tatek
