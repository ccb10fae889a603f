#pragma once

// Counting pipelines: closed-form totals, Burnside sums over conjugacy-class
// representatives, and exhaustive orbit counting, plus exponent helpers and
// the stable-pair-permutation cross-check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmaps/complete.hpp"

namespace cmaps {

enum class SurfaceKind { Orientable, NonOrientable, LocallyOrientable };
enum class CountMethod { Formula, Burnside, Orbit };
enum class BetaVariant { Statement, Proof };
enum class FixedSource { Dfs, Formula };

std::string to_string(SurfaceKind k);
std::string to_string(CountMethod m);
std::string to_string(BetaVariant v);

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PerClassTerm {
    CycleType type;
    bool reversing = false;
    BigInt class_size;
    BigInt fixed_count;                   // the value used in the sum
    std::optional<BigInt> formula_fixed;  // closed-form value when it differs/exists
};

struct CensusReport {
    uint32_t n = 0;
    SurfaceKind kind = SurfaceKind::LocallyOrientable;
    CountMethod method = CountMethod::Formula;
    BigInt count;
    std::vector<PerClassTerm> per_class;
    BetaVariant beta_variant = BetaVariant::Proof;
    std::vector<std::string> notes;
    // Set when the Burnside sum is not divisible by 2*n!; count then holds the
    // floor and the exact ratio is recorded in notes.
    bool non_integer = false;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

// Exponent of the 2-power in the uniform-class fixed count.
int64_t alpha_exponent(uint32_t n, uint32_t k);
// Exponent for the one-fixed-vertex classes; the two printed variants differ
// for odd k only.
int64_t beta_exponent(uint32_t n, uint32_t k, BetaVariant v);

struct FormulaCounts {
    BigInt locally, orientable, non_orientable;
    // The displayed closed forms evaluate to non-integers for some n (checked
    // exactly in rational arithmetic).  When that happens the fields above
    // hold the floors, integral is false and note carries the exact values.
    bool integral = true;
    std::string note;
};
// Exact values of the three closed-form totals (n = 4 uses the special
// values 11 / 3 / 8).
FormulaCounts formula_counts(uint32_t n, BetaVariant v = BetaVariant::Proof);

// Closed-form fixed count of one admissible class.  Throws for classes with
// no closed form (the n = 4 reversing special) or inadmissible classes.
BigInt fixed_count_formula(uint32_t n, const CycleType& t, bool reversing, SurfaceKind kind,
                           BetaVariant v = BetaVariant::Proof);

CensusReport burnside_count(uint32_t n, SurfaceKind kind, FixedSource source,
                            BetaVariant v = BetaVariant::Proof, uint32_t jobs = 1);

// Exhaustive canonical-form orbit count.  Budgets: orientable n <= 5,
// non/locally-orientable n <= 4; n = 5 non/locally behind long_run.
CensusReport orbit_count(uint32_t n, SurfaceKind kind, bool long_run = false, uint32_t jobs = 1);

// Isomorphism classes refined by surface; totals match orbit_count.
std::map<SurfaceType, uint64_t> genus_distribution(uint32_t n, SurfaceKind kind,
                                                   bool long_run = false, uint32_t jobs = 1);

// One representative map per isomorphism class, with surfaces (budgets as in
// orbit_count).
std::vector<std::pair<Map, SurfaceType>> catalog(uint32_t n, SurfaceKind kind,
                                                 bool long_run = false, uint32_t jobs = 1);

struct PairPermutationCheck {
    BigInt closed_form;       // 2 phi(k) (m-1)! / |E_{[k^{m/k}]}|
    uint64_t fixed_by_g = 0;  // C with C^g = C
    uint64_t fixed_by_g_alpha = 0;
    uint64_t fixed_by_either = 0;  // C^g = C or C^{g alpha} = C
};
// Closed form plus a brute-force count over all (m-1)! pair permutations for
// the canonical representative of [k^{m/k}] extended by a commuting
// fixed-point-free involution.  All three readings of "under g or g alpha"
// are reported.
PairPermutationCheck stable_pair_permutation_count(uint32_t m, uint32_t k);

}  // namespace cmaps
