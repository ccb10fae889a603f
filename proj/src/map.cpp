#include "cmaps/map.hpp"

#include <algorithm>
#include <deque>

namespace cmaps {

void FlagSet::validate() const {
    if (size == 0 || size % 4 != 0)
        throw MapError(MapErrorCode::BAD_FLAGSET, "flag count must be a positive multiple of 4");
    if (alpha.size() != size || beta.size() != size)
        throw MapError(MapErrorCode::BAD_FLAGSET, "alpha/beta ground-set size mismatch");
    for (uint32_t x = 0; x < size; ++x) {
        if (alpha(alpha(x)) != x || alpha(x) == x)
            throw MapError(MapErrorCode::BAD_FLAGSET,
                           "alpha is not a fixed-point-free involution at flag " + std::to_string(x));
        if (beta(beta(x)) != x || beta(x) == x)
            throw MapError(MapErrorCode::BAD_FLAGSET,
                           "beta is not a fixed-point-free involution at flag " + std::to_string(x));
        if (alpha(beta(x)) != beta(alpha(x)))
            throw MapError(MapErrorCode::BAD_FLAGSET,
                           "alpha and beta do not commute at flag " + std::to_string(x));
        if (alpha(x) == beta(x) || alpha(beta(x)) == x)
            throw MapError(MapErrorCode::BAD_FLAGSET,
                           "K-orbit of flag " + std::to_string(x) + " has fewer than 4 flags");
    }
}

std::string SurfaceType::name() const {
    if (orientable) {
        if (genus_or_crosscap == 0) return "sphere";
        if (genus_or_crosscap == 1) return "torus";
        return "orientable genus " + std::to_string(genus_or_crosscap);
    }
    if (genus_or_crosscap == 1) return "projective plane";
    if (genus_or_crosscap == 2) return "Klein bottle";
    return "non-orientable crosscap " + std::to_string(genus_or_crosscap);
}

Map Map::validate(FlagSet flags, Permutation rotation) {
    flags.validate();
    if (rotation.size() != flags.size)
        throw MapError(MapErrorCode::BAD_INPUT, "rotation ground-set size mismatch");
    const auto& a = flags.alpha;
    const auto& P = rotation;
    // Axiom ii: alpha * P = P^{-1} * alpha, i.e. P(alpha(P(x))) = alpha(x).
    for (uint32_t x = 0; x < flags.size; ++x) {
        if (P(a(P(x))) != a(x))
            throw MapError(MapErrorCode::AXIOM_II,
                           "alpha P != P^-1 alpha at flag " + std::to_string(x));
    }
    // Axiom i: no power of P maps x to alpha(x).
    for (uint32_t x = 0; x < flags.size; ++x) {
        uint32_t y = P(x);
        while (y != x) {
            if (y == a(x))
                throw MapError(MapErrorCode::AXIOM_I,
                               "a P-power of flag " + std::to_string(x) + " hits its alpha image");
            y = P(y);
        }
    }
    // Axiom iii: <alpha, beta, P> transitive.
    std::vector<bool> seen(flags.size, false);
    std::deque<uint32_t> q{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!q.empty()) {
        uint32_t x = q.front();
        q.pop_front();
        for (uint32_t y : {flags.alpha(x), flags.beta(x), P(x)}) {
            if (!seen[y]) {
                seen[y] = true;
                ++visited;
                q.push_back(y);
            }
        }
    }
    if (visited != flags.size) {
        uint32_t witness = 0;
        while (seen[witness]) ++witness;
        throw MapError(MapErrorCode::AXIOM_III,
                       "<alpha,beta,P> is not transitive; flag " + std::to_string(witness) +
                           " unreachable from flag 0");
    }
    return Map(std::move(flags), std::move(rotation));
}

// Pairs the cycles of `perm` via the involution `pairing` (which must map
// cycles to distinct cycles).  Each pair is reported once, anchored at the
// least flag it contains.
static std::vector<CellPair> paired_cycles(const Permutation& perm, const Permutation& pairing,
                                           std::size_t size) {
    std::vector<int32_t> cycle_of(size, -1);
    std::vector<std::vector<uint32_t>> cyc;
    for (uint32_t x = 0; x < size; ++x) {
        if (cycle_of[x] >= 0) continue;
        std::vector<uint32_t> c;
        uint32_t y = x;
        while (cycle_of[y] < 0) {
            cycle_of[y] = static_cast<int32_t>(cyc.size());
            c.push_back(y);
            y = perm(y);
        }
        cyc.push_back(std::move(c));
    }
    std::vector<bool> used(cyc.size(), false);
    std::vector<CellPair> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (used[i]) continue;
        std::size_t j = static_cast<std::size_t>(cycle_of[pairing(cyc[i][0])]);
        if (j == i || used[j] || cyc[j].size() != cyc[i].size())
            throw MapError(MapErrorCode::BAD_INPUT, "cycle pairing failed (internal)");
        used[i] = used[j] = true;
        CellPair cp;
        cp.cycle = cyc[i];
        // List the conjugate starting at the pairing image of the anchor.
        uint32_t start = pairing(cyc[i][0]);
        cp.conjugate.reserve(cyc[j].size());
        uint32_t y = start;
        do {
            cp.conjugate.push_back(y);
            y = perm(y);
        } while (y != start);
        out.push_back(std::move(cp));
    }
    return out;
}

std::vector<CellPair> Map::vertices() const {
    return paired_cycles(rot_, flags_.alpha, flags_.size);
}

std::vector<std::vector<uint32_t>> Map::edges() const {
    std::vector<bool> seen(flags_.size, false);
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t x = 0; x < flags_.size; ++x) {
        if (seen[x]) continue;
        std::vector<uint32_t> orb{x, flags_.alpha(x), flags_.beta(x), flags_.alpha(flags_.beta(x))};
        for (uint32_t y : orb) seen[y] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<CellPair> Map::faces() const {
    // Face permutation: P composed with alpha*beta; its cycles pair under beta.
    std::vector<uint32_t> img(flags_.size);
    for (uint32_t x = 0; x < flags_.size; ++x) img[x] = rot_(flags_.alpha(flags_.beta(x)));
    return paired_cycles(Permutation::from_images(std::move(img)), flags_.beta, flags_.size);
}

SurfaceType Map::surface() const {
    // Orientable iff <alpha*beta, P> is NOT transitive (then exactly 2 orbits
    // exchanged by alpha).
    std::vector<bool> seen(flags_.size, false);
    std::deque<uint32_t> q{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!q.empty()) {
        uint32_t x = q.front();
        q.pop_front();
        for (uint32_t y : {flags_.alpha(flags_.beta(x)), rot_(x), rot_.inverse()(x)}) {
            if (!seen[y]) {
                seen[y] = true;
                ++visited;
                q.push_back(y);
            }
        }
    }
    bool orientable;
    if (visited == flags_.size) {
        orientable = false;
    } else if (visited * 2 == flags_.size) {
        orientable = true;
        // The complementary orbit must be the alpha image of the first.
        for (uint32_t x = 0; x < flags_.size; ++x)
            if (seen[x] == seen[flags_.alpha(x)])
                throw MapError(MapErrorCode::BAD_INPUT,
                               "orientation orbits not exchanged by alpha (internal)");
    } else {
        throw MapError(MapErrorCode::BAD_INPUT,
                       "<alpha beta, P> has an impossible orbit count (internal)");
    }
    int64_t v = static_cast<int64_t>(vertices().size());
    int64_t e = static_cast<int64_t>(edges().size());
    int64_t f = static_cast<int64_t>(faces().size());
    SurfaceType s;
    s.orientable = orientable;
    s.euler_characteristic = v - e + f;
    if (orientable) {
        if ((2 - s.euler_characteristic) % 2 != 0)
            throw MapError(MapErrorCode::BAD_INPUT, "odd genus defect on orientable map (internal)");
        s.genus_or_crosscap = static_cast<uint32_t>((2 - s.euler_characteristic) / 2);
    } else {
        s.genus_or_crosscap = static_cast<uint32_t>(2 - s.euler_characteristic);
    }
    return s;
}

Map Map::mirror() const {
    return Map(flags_, rot_.inverse());
}

// Propagates the forced bijection sending anchor x0 of m1 to y0 of m2 in the
// given mode.  Returns the bijection if globally consistent.
static std::optional<Permutation> propagate(const Map& m1, const Map& m2, uint32_t x0,
                                            uint32_t y0, MorphMode mode) {
    const std::size_t n = m1.flag_count();
    const Permutation& P1 = m1.rotation();
    const Permutation P2 = mode == MorphMode::Preserving ? m2.rotation() : m2.rotation().inverse();
    std::vector<int64_t> img(n, -1);
    std::vector<bool> hit(n, false);
    img[x0] = y0;
    hit[y0] = true;
    std::deque<uint32_t> q{x0};
    auto push = [&](uint32_t x, uint32_t y) -> bool {
        if (img[x] >= 0) return img[x] == static_cast<int64_t>(y);
        if (hit[y]) return false;
        img[x] = y;
        hit[y] = true;
        q.push_back(x);
        return true;
    };
    while (!q.empty()) {
        uint32_t x = q.front();
        q.pop_front();
        uint32_t y = static_cast<uint32_t>(img[x]);
        if (!push(m1.flags().alpha(x), m2.flags().alpha(y))) return std::nullopt;
        if (!push(m1.flags().beta(x), m2.flags().beta(y))) return std::nullopt;
        if (!push(P1(x), P2(y))) return std::nullopt;
    }
    // Transitivity guarantees completeness; verify all constraints globally.
    std::vector<uint32_t> images(n);
    for (uint32_t x = 0; x < n; ++x) {
        if (img[x] < 0) return std::nullopt;
        images[x] = static_cast<uint32_t>(img[x]);
    }
    Permutation tau = Permutation::from_images(std::move(images));
    for (uint32_t x = 0; x < n; ++x) {
        if (tau(m1.flags().alpha(x)) != m2.flags().alpha(tau(x))) return std::nullopt;
        if (tau(m1.flags().beta(x)) != m2.flags().beta(tau(x))) return std::nullopt;
        if (tau(P1(x)) != P2(tau(x))) return std::nullopt;
    }
    return tau;
}

std::optional<MapMorphism> find_isomorphism(const Map& m1, const Map& m2, IsoMode mode) {
    if (m1.flag_count() != m2.flag_count()) return std::nullopt;
    std::vector<MorphMode> modes;
    if (mode != IsoMode::Reversing) modes.push_back(MorphMode::Preserving);
    if (mode != IsoMode::Preserving) modes.push_back(MorphMode::Reversing);
    for (MorphMode mm : modes) {
        for (uint32_t y0 = 0; y0 < m2.flag_count(); ++y0) {
            if (auto tau = propagate(m1, m2, 0, y0, mm))
                return MapMorphism{std::move(*tau), mm};
        }
    }
    return std::nullopt;
}

std::vector<MapMorphism> automorphism_group(const Map& m) {
    std::vector<MapMorphism> out;
    for (MorphMode mm : {MorphMode::Preserving, MorphMode::Reversing}) {
        for (uint32_t y0 = 0; y0 < m.flag_count(); ++y0) {
            if (auto tau = propagate(m, m, 0, y0, mm)) out.push_back({std::move(*tau), mm});
        }
    }
    return out;
}

// Breadth-first relabeling trace from one (anchor, mode) choice: flags are
// numbered in first-visit order; for each flag in visit order we emit the new
// labels of its images under the four generators.
static std::vector<uint8_t> bfs_trace(const Map& m, uint32_t anchor, MorphMode mode) {
    const std::size_t n = m.flag_count();
    const Permutation& P = m.rotation();
    const Permutation Pi = P.inverse();
    const Permutation* g3 = mode == MorphMode::Preserving ? &P : &Pi;
    const Permutation* g4 = mode == MorphMode::Preserving ? &Pi : &P;
    std::vector<int64_t> label(n, -1);
    std::vector<uint32_t> order;
    order.reserve(n);
    label[anchor] = 0;
    order.push_back(anchor);
    for (std::size_t head = 0; head < order.size(); ++head) {
        uint32_t x = order[head];
        for (uint32_t y : {m.flags().alpha(x), m.flags().beta(x), (*g3)(x), (*g4)(x)}) {
            if (label[y] < 0) {
                label[y] = static_cast<int64_t>(order.size());
                order.push_back(y);
            }
        }
    }
    std::vector<uint8_t> trace;
    trace.reserve(n * 8);
    auto emit = [&](uint32_t v) {
        trace.push_back(static_cast<uint8_t>(v >> 8));
        trace.push_back(static_cast<uint8_t>(v & 0xff));
    };
    for (uint32_t x : order) {
        emit(static_cast<uint32_t>(label[m.flags().alpha(x)]));
        emit(static_cast<uint32_t>(label[m.flags().beta(x)]));
        emit(static_cast<uint32_t>(label[(*g3)(x)]));
        emit(static_cast<uint32_t>(label[(*g4)(x)]));
    }
    return trace;
}

std::vector<uint8_t> canonical_form(const Map& m) {
    std::vector<uint8_t> best;
    for (MorphMode mode : {MorphMode::Preserving, MorphMode::Reversing}) {
        for (uint32_t anchor = 0; anchor < m.flag_count(); ++anchor) {
            std::vector<uint8_t> t = bfs_trace(m, anchor, mode);
            if (best.empty() || t < best) best = std::move(t);
        }
    }
    return best;
}

}  // namespace cmaps
