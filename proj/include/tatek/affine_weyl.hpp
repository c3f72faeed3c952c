#pragma once

#include <tatek/root_data.hpp>

#include <boost/rational.hpp>

#include <variant>
#include <vector>

namespace tatek {

using Rat = boost::rational<i64>;

enum class FormSign { positive, negative };

/// Level datum: a symmetric definite bilinear form on the translation lattice.
/// Negative forms are stored as (|form|, sign flag) so both definiteness
/// classes share one enumeration path.
struct Twisting {
    std::variant<RootDatum, TorusDatum> base;
    IntMat form;   // positive-definite representative
    FormSign sign = FormSign::positive;
    i64 level = 0; // |k| when base is a root datum

    bool is_root_datum() const { return std::holds_alternative<RootDatum>(base); }
    const RootDatum& root_datum() const { return std::get<RootDatum>(base); }
    i64 rank() const { return form.rows(); }
};

/// form = |k| * basic_form on the coroot lattice; k != 0.
Twisting level_twisting(const RootDatum& rd, i64 k);

/// Arbitrary symmetric definite integer form on a torus lattice.
/// Throws NotPositive when the form is indefinite or singular.
Twisting torus_twisting(const IntMat& form);

/// A point (lambda, n) of the graded weight lattice; n is the q-exponent.
struct LambdaTauPoint {
    Weight lambda;
    i64 n = 0;
};

struct AffineOrbitRep {
    Weight rep;               // canonical representative
    i64 stabilizer_order = 1;
    bool regular = true;
};

/// A set whose slice at energy n has size c * n^a for large n.
struct GrowthDescriptor {
    Rat a{0};
    Rat c{0};
    bool bounded_below = true;
};

/// Contraction of the form: the weight form(p, .) in fundamental-weight
/// coordinates, so that pairing(kappa_tau(tw,p), p') = p'^T form p.
Weight kappa_tau(const Twisting& tw, const Coweight& p);

/// Translation part of the affine action on (lambda, n):
///   p . (lambda, n) = (lambda - kappa(p), n + form(p,p) - 2 lambda(p)).
/// The n-shift makes this a genuine group action; it preserves the rational
/// invariant n - form^{-1}(lambda, lambda).
LambdaTauPoint pi1_act(const Twisting& tw, const Coweight& p, const LambdaTauPoint& x);

/// Canonical representative of the W_aff-orbit of lam (lambda -> w lambda + kappa(p)).
/// For a root datum this is the unique point of the closed fundamental alcove
/// {mu dominant, mu(theta_vee) <= level}; for a torus, the Hermite box
/// representative of lam mod form * lattice.
Weight canonicalize(const Twisting& tw, Weight lam);

/// Order of the W_aff-stabilizer of lam: the number of w in W with
/// lam - w lam in form * lattice. Always 1 for tori.
i64 stabilizer_order(const Twisting& tw, const Weight& lam);

/// All orbit representatives, canonically sorted, tagged with stabilizer data.
/// Throws NotPositive on a negative twisting.
std::vector<AffineOrbitRep> affine_orbit_reps(const Twisting& tw);

/// Regular orbits at level k + h_dual: the free basis on the negative side of
/// the level-shift duality.
std::vector<AffineOrbitRep> negative_level_basis(const RootDatum& rd, i64 k);

/// True iff the per-energy slice count is o(n): c = 0 or a < 1.
bool check_tempered(const GrowthDescriptor& d);

/// Same limit, phrased for character-norm growth.
bool check_star(const GrowthDescriptor& d);

/// Level shift k -> k + h_dual. Throws TorusHasNoSigma for torus bases.
Twisting shift_by_sigma(const Twisting& tw);

/// All lattice translations p with p^T form p - 2 nu^T p <= order; finite
/// because the form is positive definite.
std::vector<Coweight> translation_points(const IntMat& form, const Weight& nu, i64 order);

}  // namespace tatek
