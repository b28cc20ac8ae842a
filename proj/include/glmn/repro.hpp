#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glmn {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct ReproOptions {
    std::string only;               // substring filter on criterion titles
    unsigned extra_char = 0;        // re-run characteristic-sensitive checks mod p
    std::uint64_t seed = 0x5eedULL; // straightening round-trip sampling
};

/// Runs the full verification suite: the derivation tables, the minor
/// identities, the GL(1|1) identity battery, the explicit weight orders, the
/// bideterminant bases and straightening, the quotient dimensions, closure
/// of the truncated filtration, the divided-power vanishing, and the
/// one-level escape witness.
std::vector<CriterionResult> run_acceptance(const ReproOptions& options = {});

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace glmn
