#pragma once

// The acceptance suite: one entry per numbered cross-check criterion.  The
// suite is shared by the test binary and the CLI `verify` subcommand, so the
// pinned expected values live in exactly one place.

#include <string>
#include <vector>

#include "cmaps/census.hpp"

namespace cmaps {

enum class AcceptanceLevel { Quick, Standard, Full };

struct CriterionResult {
    int id = 0;
    std::string description;
    bool passed = false;
    std::string detail;  // measured values, counterexamples, sub-check notes
};

// Runs the criteria included at the given level (Quick ⊂ Standard ⊂ Full) and
// returns them in id order.  Criteria never throw on a value mismatch: a
// mismatch is a failed result carrying the measured value.
std::vector<CriterionResult> run_acceptance(AcceptanceLevel level, uint32_t jobs = 1);

// Which beta variant (if any) the n = 7 class [1,3,3] quotient fixed count
// validates; used by criterion 11 and `verify --adjudicate-beta`.
struct BetaAdjudication {
    BigInt dfs_value;
    BigInt statement_value;
    BigInt proof_value;
    std::optional<BetaVariant> validated;  // empty when the count matches neither
};
BetaAdjudication adjudicate_beta();

}  // namespace cmaps
