#pragma once

#include <tatek/kac_characters.hpp>
#include <tatek/theta_torus.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tatek {

/// Weight multiplicities of the finite-dimensional module V_lambda, computed
/// by the recursive multiplicity formula over the scaled invariant form.
/// Independent of the graded character machinery; used as a cross-check oracle.
std::map<IntVec, Int, LexLess> finite_character(const RootDatum& rd, const Weight& lambda);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    i64 order = 8;
    std::uint64_t seed = 1;
    int jobs = 1;
};

/// Runs the whole invariant suite. The checks are pure and independently
/// seeded, so the report does not depend on the worker count.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

}  // namespace tatek
