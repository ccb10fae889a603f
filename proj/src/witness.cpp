#include <algorithm>
#include <optional>

#include "cmaps/complete.hpp"

// Witness construction: build a map of a requested orientability stable under
// a representative action of an admissible class.  Strategy:
//   1. a deterministic "column" pattern that is stable by construction;
//   2. if the pattern's surface kind is wrong, a deterministic repair search
//      over sign flips of g-invariant dart-orbit sets (flipping a g-invariant
//      dart set preserves stability but can change orientability);
//   3. an exhaustive fallback over the stable codes streamed by
//      for_each_fixed_code, filtered by surface kind.
// The returned pair is always re-verified before being handed out.

namespace cmaps {

namespace {

std::vector<std::vector<uint32_t>> nontrivial_blocks(const CycleType& t) {
    // Blocks of the canonical representative, excluding fixed points.
    std::vector<std::vector<uint32_t>> out;
    uint32_t base = 0;
    for (uint32_t len : t.parts()) {
        if (len > 1) {
            std::vector<uint32_t> c(len);
            for (uint32_t k = 0; k < len; ++k) c[k] = base + k;
            out.push_back(std::move(c));
        }
        base += len;
    }
    return out;
}

// Column-major pattern: list row q of every cycle, for q = 0..s-1.  `self_sub`
// substitutes the fixed vertex t at the position where v itself appears
// (used when a fixed vertex exists); otherwise v's own slot is skipped.
std::vector<Dart> column_rotation(uint32_t v, const std::vector<std::vector<uint32_t>>& cycles,
                                  std::optional<uint32_t> self_sub, uint8_t sign) {
    std::vector<Dart> out;
    const std::size_t s = cycles.front().size();
    for (std::size_t q = 0; q < s; ++q) {
        for (const auto& c : cycles) {
            uint32_t w = c[q];
            if (w == v) {
                if (self_sub) out.push_back({*self_sub, sign});
            } else {
                out.push_back({w, sign});
            }
        }
    }
    return out;
}

std::optional<EmbeddingCode> base_pattern(uint32_t n, const CycleType& t, bool reversing) {
    const auto& parts = t.parts();
    auto blocks = nontrivial_blocks(t);
    std::vector<std::vector<Dart>> rots(n);
    bool uniform = std::all_of(parts.begin(), parts.end(),
                               [&](uint32_t p) { return p == parts.front(); });
    if (!reversing && uniform) {
        // Type [s^{n/s}] (s = 1 gives sorted all-plus rotations).
        uint32_t s = parts.front();
        std::vector<std::vector<uint32_t>> cycles;
        for (uint32_t c = 0; c < n / s; ++c) {
            std::vector<uint32_t> cyc(s);
            for (uint32_t k = 0; k < s; ++k) cyc[k] = c * s + k;
            cycles.push_back(std::move(cyc));
        }
        for (uint32_t v = 0; v < n; ++v)
            rots[v] = column_rotation(v, cycles, std::nullopt, 0);
        return EmbeddingCode(n, std::move(rots));
    }
    if (!reversing && parts.size() >= 2 && parts[0] == 1 && parts[1] > 1 &&
        std::all_of(parts.begin() + 1, parts.end(),
                    [&](uint32_t p) { return p == parts[1]; })) {
        // Type [1, s^{(n-1)/s}]; the fixed vertex is 0.
        rots[0] = column_rotation(0, blocks, std::nullopt, 0);
        for (const auto& c : blocks)
            for (uint32_t v : c) rots[v] = column_rotation(v, blocks, 0u, 0);
        return EmbeddingCode(n, std::move(rots));
    }
    if (reversing && uniform && parts.front() % 2 == 0) {
        // Type [(2s)^{n/2s}]: column pattern, signs by position parity.
        for (const auto& c : blocks)
            for (std::size_t p = 0; p < c.size(); ++p)
                rots[c[p]] = column_rotation(c[p], blocks, std::nullopt,
                                             static_cast<uint8_t>(p % 2));
        return EmbeddingCode(n, std::move(rots));
    }
    if (reversing && n == 4 && parts == std::vector<uint32_t>{1, 1, 2}) {
        // Sorted all-plus rotations with vertex 2's order replaced by (0,3,1);
        // stable under the lift of (2 3) composed with alpha.
        rots[0] = {{1, 0}, {2, 0}, {3, 0}};
        rots[1] = {{0, 0}, {2, 0}, {3, 0}};
        rots[2] = {{0, 0}, {3, 0}, {1, 0}};
        rots[3] = {{0, 0}, {1, 0}, {2, 0}};
        return EmbeddingCode(4, std::move(rots));
    }
    return std::nullopt;
}

// Orbits of <g> on ordered vertex pairs (darts).
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> dart_orbits(uint32_t n,
                                                                    const Permutation& g) {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> out;
    std::vector<bool> seen(n * n, false);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            if (i == j || seen[i * n + j]) continue;
            std::vector<std::pair<uint32_t, uint32_t>> orb;
            uint32_t a = i, b = j;
            while (!seen[a * n + b]) {
                seen[a * n + b] = true;
                orb.emplace_back(a, b);
                a = g(a);
                b = g(b);
            }
            out.push_back(std::move(orb));
        }
    return out;
}

EmbeddingCode flip_darts(const EmbeddingCode& code,
                         const std::vector<std::vector<std::pair<uint32_t, uint32_t>>>& orbits,
                         uint64_t subset) {
    uint32_t n = code.n();
    std::vector<std::vector<uint8_t>> flip(n, std::vector<uint8_t>(n, 0));
    for (std::size_t k = 0; k < orbits.size(); ++k)
        if ((subset >> k) & 1)
            for (auto [a, b] : orbits[k]) flip[a][b] ^= 1;
    auto rots = code.rotations();
    for (uint32_t v = 0; v < n; ++v)
        for (auto& d : rots[v]) d.sign ^= flip[v][d.neighbor];
    return EmbeddingCode(n, std::move(rots));
}

}  // namespace

std::pair<Map, LiftedAction> witness_map(uint32_t n, const CycleType& t, bool reversing,
                                         Orientability want) {
    if (t.total() != n)
        throw MapError(MapErrorCode::BAD_INPUT, "cycle type does not sum to n");
    auto admissible = admissible_classes(n, want);
    if (std::find(admissible.begin(), admissible.end(), std::make_pair(t, reversing)) ==
        admissible.end())
        throw MapError(MapErrorCode::BAD_INPUT,
                       "class " + t.to_string() + (reversing ? " (reversing)" : "") +
                           " is not admissible for n = " + std::to_string(n));
    LiftedAction action{t.representative(), reversing};
    auto accept = [&](const EmbeddingCode& code) -> std::optional<std::pair<Map, LiftedAction>> {
        Map m = code.decode();
        if (m.surface().orientable != (want == Orientability::Orientable)) return std::nullopt;
        if (!is_stable(m, action)) return std::nullopt;
        return std::make_pair(std::move(m), action);
    };

    if (auto base = base_pattern(n, t, reversing)) {
        if (auto hit = accept(*base)) return std::move(*hit);
        // Repair search: flip signs on unions of g-invariant dart orbits,
        // smallest unions first.
        auto orbits = dart_orbits(n, action.base);
        if (orbits.size() <= 24) {
            for (std::size_t popcount = 1; popcount <= 3; ++popcount) {
                for (uint64_t subset = 1; subset < (1ull << orbits.size()); ++subset) {
                    if (static_cast<std::size_t>(__builtin_popcountll(subset)) != popcount)
                        continue;
                    if (auto hit = accept(flip_darts(*base, orbits, subset)))
                        return std::move(*hit);
                }
            }
        }
    }
    // Exhaustive fallback over stable codes (bounded).
    std::optional<std::pair<Map, LiftedAction>> found;
    uint64_t budget = 5'000'000;
    for_each_fixed_code(n, action.base, reversing, EmbedKind::LocallyOrientable,
                        [&](const EmbeddingCode& code) {
                            if (auto hit = accept(code)) {
                                found = std::move(hit);
                                return false;
                            }
                            return --budget != 0;
                        });
    if (found) return std::move(*found);
    throw MapError(MapErrorCode::BAD_INPUT,
                   "no stable " +
                       std::string(want == Orientability::Orientable ? "orientable"
                                                                     : "non-orientable") +
                       " map found for class " + t.to_string() +
                       (reversing ? " (reversing)" : "") + " at n = " + std::to_string(n));
}

}  // namespace cmaps
