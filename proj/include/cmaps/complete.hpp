#pragma once

// Everything specific to complete graphs K_n: the flag universe, embedding
// codes, lifted vertex-permutation actions, enumeration, fixed-embedding
// counting (raw and edge-flip-quotient), admissible automorphism classes and
// witness-map constructions.

#include <functional>
#include <optional>
#include <utility>

#include "cmaps/map.hpp"

namespace cmaps {

enum class EmbedKind { Orientable, LocallyOrientable };
enum class Orientability { Orientable, NonOrientable };

// Flags of K_n: one per (ordered vertex pair, sign).  Encoding:
//   flag(i,j,s) = 2*(i*(n-1) + adj(i,j)) + s,  adj(i,j) = j or j-1
// alpha flips the sign bit; beta swaps the two ends of an edge AND flips the
// sign.  The sign flip in beta is the convention that makes every all-plus
// code decode to an orientable map (the classical rotation-system embedding);
// see notes in the repository for why the convention is forced.
class CompleteFlagUniverse {
public:
    explicit CompleteFlagUniverse(uint32_t n);

    uint32_t n() const { return n_; }
    std::size_t size() const { return 2u * n_ * (n_ - 1); }

    uint32_t flag(uint32_t i, uint32_t j, uint32_t s) const {
        return 2 * (i * (n_ - 1) + (j < i ? j : j - 1)) + s;
    }
    struct Parts {
        uint32_t i, j, s;
    };
    Parts parts(uint32_t f) const {
        uint32_t s = f & 1, d = f >> 1;
        uint32_t i = d / (n_ - 1), a = d % (n_ - 1);
        return {i, a < i ? a : a + 1, s};
    }
    uint32_t alpha(uint32_t f) const { return f ^ 1; }
    uint32_t beta(uint32_t f) const {
        Parts p = parts(f);
        return flag(p.j, p.i, p.s ^ 1);
    }

    Permutation alpha_perm() const;
    Permutation beta_perm() const;
    FlagSet flag_set() const;

    // Edge index of the unordered pair {i,j} in lexicographic order.
    uint32_t edge_index(uint32_t i, uint32_t j) const;
    uint32_t edge_count() const { return n_ * (n_ - 1) / 2; }

private:
    uint32_t n_;
};

struct Dart {
    uint32_t neighbor = 0;
    uint8_t sign = 0;  // 0 = '+', 1 = '-'
    auto operator<=>(const Dart&) const = default;
};

// Per-vertex cyclic order of signed neighbor darts.  Normal form: the dart to
// the least neighbor is listed first and carries sign '+' (achieved by cyclic
// rotation and, if needed, replacing the rotation by its conjugate — reversed
// order with all signs flipped — which encodes the same vertex pair).
class EmbeddingCode {
public:
    EmbeddingCode(uint32_t n, std::vector<std::vector<Dart>> rotations);

    uint32_t n() const { return n_; }
    const std::vector<std::vector<Dart>>& rotations() const { return rot_; }
    bool all_plus() const;

    Map decode() const;

    bool operator==(const EmbeddingCode&) const = default;
    bool operator<(const EmbeddingCode& o) const { return rot_ < o.rot_; }

    std::string to_kn_v1() const;                  // one-line text form
    static EmbeddingCode parse_kn_v1(const std::string& line);

    // Reads the code back off a map built on the K_n universe.
    static EmbeddingCode from_map(const Map& m, uint32_t n);

private:
    uint32_t n_;
    std::vector<std::vector<Dart>> rot_;
};

struct LiftedAction {
    Permutation base;  // on n vertices
    bool reversing = false;
};

// Flag permutation induced by (g, reversing): i^{j s} -> g(i)^{g(j) s} then
// composed with alpha when reversing.  Commutes with alpha and beta.
Permutation lift(const CompleteFlagUniverse& u, const Permutation& g, bool reversing);

// True iff conjugating m's rotation by lift(a) returns it exactly.
bool is_stable(const Map& m, const LiftedAction& a);

// All normalized rotations of one vertex (deterministic order).
std::vector<std::vector<Dart>> vertex_rotation_candidates(uint32_t n, uint32_t v, EmbedKind kind);

// Every normalized code exactly once; the orientable kind emits only all-plus
// codes.  `first_vertex_filter`, if nonnegative, restricts vertex 0 to the
// candidate with that index (for data-parallel partitioning).  The callback
// returns false to stop early; the function returns false iff stopped.
bool enumerate_embeddings(uint32_t n, EmbedKind kind,
                          const std::function<bool(const EmbeddingCode&)>& fn,
                          int64_t first_vertex_filter = -1);

// Number of codes whose decoded map is stable under lift(g, reversing).
// DFS over free choices: one rotation per g-vertex-orbit representative,
// propagated along the orbit; inconsistent propagation prunes.
BigInt fixed_maps_count(uint32_t n, const Permutation& g, bool reversing, EmbedKind kind);

// Streams the stable codes counted by fixed_maps_count.  Callback returns
// false to stop; function returns false iff stopped.
bool for_each_fixed_code(uint32_t n, const Permutation& g, bool reversing, EmbedKind kind,
                         const std::function<bool(const EmbeddingCode&)>& fn);

// Fixed classes of lift(g, reversing) acting on codes modulo edge-flip
// conjugation (the carrier on which the locally-orientable Burnside count is
// an exact orbit count).  Computed as an exact average of raw fixed counts
// over sign-twisted actions, reduced by GF(2) linear algebra.
BigInt quotient_fixed_count(uint32_t n, const Permutation& g, bool reversing);

// Class lists of admissible (cycle type, reversing) automorphism sources for
// complete maps of the given orientability, per the implemented class tables;
// identical for both orientabilities.  Deterministic order.
std::vector<std::pair<CycleType, bool>> admissible_classes(uint32_t n, Orientability o);

// A map of the requested orientability stable under an action of the given
// class.  Pattern constructions with a deterministic sign-flip repair search
// and an exhaustive fallback; the result is always re-verified.
std::pair<Map, LiftedAction> witness_map(uint32_t n, const CycleType& t, bool reversing,
                                         Orientability o);

}  // namespace cmaps
