#pragma once

// The quadricell map model: a rotation permutation P on a flag set carrying
// two commuting fixed-point-free involutions alpha and beta.  A map encodes a
// cellular embedding of a graph on a closed surface.

#include <optional>
#include <string>
#include <vector>

#include "cmaps/perm.hpp"

namespace cmaps {

enum class MapErrorCode { AXIOM_I, AXIOM_II, AXIOM_III, BAD_FLAGSET, BAD_INPUT };

class MapError : public std::runtime_error {
public:
    MapError(MapErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    MapErrorCode code() const { return code_; }

private:
    MapErrorCode code_;
};

struct FlagSet {
    std::size_t size = 0;
    Permutation alpha;
    Permutation beta;

    // Checks: involutions, fixed-point-free, commuting, K-orbits of size 4.
    void validate() const;
    bool operator==(const FlagSet&) const = default;
};

struct SurfaceType {
    bool orientable = false;
    uint32_t genus_or_crosscap = 0;  // genus if orientable, crosscap number otherwise
    int64_t euler_characteristic = 0;

    bool operator==(const SurfaceType&) const = default;
    bool operator<(const SurfaceType& o) const {
        return std::tuple(!orientable, genus_or_crosscap) <
               std::tuple(!o.orientable, o.genus_or_crosscap);
    }
    std::string name() const;  // "sphere", "torus", "Klein bottle", ...
};

enum class MorphMode { Preserving, Reversing };
enum class IsoMode { Preserving, Reversing, Either };

struct MapMorphism {
    Permutation bijection;  // on the flag set
    MorphMode mode = MorphMode::Preserving;
};

// A vertex or face: a pair of mutually conjugate cycles of the relevant
// permutation.  `cycle` is one of the two cycles (the one containing the least
// flag); its conjugate is alpha * reverse.
struct CellPair {
    std::vector<uint32_t> cycle;
    std::vector<uint32_t> conjugate;
};

class Map {
public:
    // Validates all three axioms; throws MapError naming a witness flag.
    static Map validate(FlagSet flags, Permutation rotation);

    const FlagSet& flags() const { return flags_; }
    const Permutation& rotation() const { return rot_; }
    std::size_t flag_count() const { return flags_.size; }

    std::vector<CellPair> vertices() const;
    std::vector<std::vector<uint32_t>> edges() const;  // K-orbits, 4 flags each
    std::vector<CellPair> faces() const;               // cycles of P*(alpha*beta)
    SurfaceType surface() const;

    Map mirror() const;  // same flags, rotation P^{-1}

    bool operator==(const Map&) const = default;

private:
    Map(FlagSet f, Permutation r) : flags_(std::move(f)), rot_(std::move(r)) {}
    FlagSet flags_;
    Permutation rot_;
};

// Anchored propagation isomorphism search (no backtracking: the image of one
// anchor flag forces the whole bijection via the transitive action of
// <alpha, beta, P>).
std::optional<MapMorphism> find_isomorphism(const Map& m1, const Map& m2, IsoMode mode);

// All self-morphisms of both modes.
std::vector<MapMorphism> automorphism_group(const Map& m);

// Relabeling-invariant byte sequence: lexicographically least breadth-first
// trace over all (anchor flag, mode) choices; generator application order is
// fixed as (alpha, beta, P, P^{-1}) — with P and P^{-1} swapped in reversing
// mode so that isomorphic maps align.
std::vector<uint8_t> canonical_form(const Map& m);

}  // namespace cmaps
