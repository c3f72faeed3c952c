#pragma once

#include <tatek/affine_weyl.hpp>
#include <tatek/weighted_qseries.hpp>

#include <utility>
#include <vector>

namespace tatek {

struct KacCharacter {
    Weight lambda;
    i64 level = 0;
    WeightedQSeries ch;  // graded multiplicities m(mu, n)
};

/// Alternating orbit sum at level m: sum over (w, p) of sign(w) times the
/// monomial at the translate of (w mu, 0), truncated at `order`. Requires
/// mu strictly dominant with trivial affine stabilizer at level m and
/// m >= h_dual. Anti-invariant under the finite Weyl group.
WeightedQSeries affine_numerator(const RootDatum& rd, const Weight& mu, i64 m, i64 order);

/// Graded character of the level-k integrable highest-weight module:
/// the exact layerwise quotient of the numerators at (lambda + rho, k + h_dual)
/// and (rho, h_dual). Throws NotIntegrable when lambda(theta_vee) > k.
KacCharacter kac_character(const RootDatum& rd, const Weight& lambda, i64 k, i64 order);

/// The level-shift bijection lambda -> lambda + rho from level-k orbit
/// representatives onto the regular level-(k + h_dual) representatives.
/// Throws BijectionFailed if the image does not match.
std::vector<std::pair<AffineOrbitRep, AffineOrbitRep>> duality_bijection(
    const RootDatum& rd, i64 k);

/// Pairing matrix of the two bases: entry (i, j) is the q-series of graded
/// multiplicities of the i-th positive representative's weight inside the
/// j-th character. Unitriangular at q^0, so the determinant is a unit.
struct DualityPairing {
    std::vector<std::pair<AffineOrbitRep, AffineOrbitRep>> pairs;
    std::vector<std::vector<QSeries>> matrix;
    QSeries det;
};
DualityPairing duality_pairing(const RootDatum& rd, i64 k, i64 order);

}  // namespace tatek
