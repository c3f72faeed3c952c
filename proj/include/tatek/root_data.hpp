#pragma once

#include <tatek/common.hpp>

#include <string>
#include <vector>

namespace tatek {

using Weight = IntVec;    // fundamental-weight coordinates
using Coweight = IntVec;  // simple-coroot coordinates

/// Natural pairing <weight, coweight>; the chosen bases are dual, so this is
/// the plain dot product.
inline i64 pairing(const Weight& lam, const Coweight& p) { return lam.dot(p); }

struct Root {
    Weight weight;            // fundamental-weight coordinates
    IntVec simple_coords;     // expansion over simple roots
    Coweight coroot;          // coroot in simple-coroot coordinates
};

/// One finite Weyl group element, with its action on both lattices.
struct WeylElement {
    IntMat on_weights;   // fundamental-weight coordinates
    IntMat on_coweights; // simple-coroot coordinates; inverse-transpose of the above
    int sign;            // determinant, +-1
};

/// Exact Cartan data for a simply-connected simple group. Immutable.
struct RootDatum {
    std::string label;           // type label, or "custom"
    i64 rank = 0;
    IntMat cartan;               // C_ij = <alpha_i, alpha_j^vee>
    std::vector<Root> positive_roots;
    Root highest_root;           // theta; its coroot is the highest short coroot
    Weight rho;                  // all-ones in fundamental-weight coordinates
    i64 h_dual = 0;              // 1 + <rho, theta^vee>
    IntMat basic_form;           // on the coroot lattice, short coroots have square 2
    Coweight height_coweight;    // strictly dominant; adj(C) * ones, for total orders
};

struct TorusDatum {
    i64 rank = 0;
};

/// Builds and validates a root datum from a type label (A1..A4, C2, G2).
RootDatum load_root_datum(const std::string& type_label);

/// Same, from an explicit finite-type Cartan matrix.
RootDatum load_root_datum(const IntMat& cartan);

/// All elements of the finite Weyl group, generated by simple reflections.
/// Deterministic order. Throws WeylGroupTooLarge above the bound.
std::vector<WeylElement> weyl_elements(const RootDatum& rd, std::size_t bound = 1000000);

/// Weyl dimension formula, exact.
Int weyl_dim(const RootDatum& rd, const Weight& lam);

inline bool is_dominant(const Weight& lam) { return (lam.array() >= 0).all(); }

}  // namespace tatek
