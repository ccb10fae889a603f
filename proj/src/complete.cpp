#include "cmaps/complete.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace cmaps {

CompleteFlagUniverse::CompleteFlagUniverse(uint32_t n) : n_(n) {
    if (n < 3) throw MapError(MapErrorCode::BAD_INPUT, "K_n universe requires n >= 3");
}

Permutation CompleteFlagUniverse::alpha_perm() const {
    std::vector<uint32_t> img(size());
    for (uint32_t f = 0; f < size(); ++f) img[f] = alpha(f);
    return Permutation::from_images(std::move(img));
}

Permutation CompleteFlagUniverse::beta_perm() const {
    std::vector<uint32_t> img(size());
    for (uint32_t f = 0; f < size(); ++f) img[f] = beta(f);
    return Permutation::from_images(std::move(img));
}

FlagSet CompleteFlagUniverse::flag_set() const {
    return FlagSet{size(), alpha_perm(), beta_perm()};
}

uint32_t CompleteFlagUniverse::edge_index(uint32_t i, uint32_t j) const {
    if (i > j) std::swap(i, j);
    // Lexicographic rank of pair (i, j), i < j.
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

// ---------------------------------------------------------------------------
// EmbeddingCode

EmbeddingCode::EmbeddingCode(uint32_t n, std::vector<std::vector<Dart>> rotations)
    : n_(n), rot_(std::move(rotations)) {
    if (n < 3) throw MapError(MapErrorCode::BAD_INPUT, "embedding code requires n >= 3");
    if (rot_.size() != n)
        throw MapError(MapErrorCode::BAD_INPUT, "embedding code needs one rotation per vertex");
    for (uint32_t v = 0; v < n; ++v) {
        auto& r = rot_[v];
        if (r.size() != n - 1)
            throw MapError(MapErrorCode::BAD_INPUT,
                           "vertex " + std::to_string(v) + " rotation has wrong length");
        std::vector<bool> seen(n, false);
        uint32_t least = v == 0 ? 1 : 0;
        std::size_t least_pos = r.size();
        for (std::size_t k = 0; k < r.size(); ++k) {
            uint32_t w = r[k].neighbor;
            if (w >= n || w == v || seen[w])
                throw MapError(MapErrorCode::BAD_INPUT,
                               "vertex " + std::to_string(v) + " rotation is not a neighbor cycle");
            seen[w] = true;
            if (r[k].sign > 1)
                throw MapError(MapErrorCode::BAD_INPUT, "dart sign must be 0 or 1");
            if (w == least) least_pos = k;
        }
        // Normalize: rotate the least neighbor to the front...
        std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(least_pos), r.end());
        // ...and if its sign is '-', pass to the conjugate rotation (reverse
        // the order of the remaining darts, flip every sign).
        if (r[0].sign == 1) {
            std::reverse(r.begin() + 1, r.end());
            for (auto& d : r) d.sign ^= 1;
        }
    }
}

bool EmbeddingCode::all_plus() const {
    for (const auto& r : rot_)
        for (const auto& d : r)
            if (d.sign) return false;
    return true;
}

static Permutation rotation_from_code(const CompleteFlagUniverse& u, const EmbeddingCode& code) {
    std::vector<uint32_t> img(u.size(), UINT32_MAX);
    for (uint32_t v = 0; v < u.n(); ++v) {
        const auto& r = code.rotations()[v];
        const std::size_t m = r.size();
        for (std::size_t k = 0; k < m; ++k) {
            uint32_t a = u.flag(v, r[k].neighbor, r[k].sign);
            uint32_t b = u.flag(v, r[(k + 1) % m].neighbor, r[(k + 1) % m].sign);
            img[a] = b;
            img[b ^ 1] = a ^ 1;  // conjugate cycle (alpha = xor 1)
        }
    }
    return Permutation::from_images(std::move(img));
}

Map EmbeddingCode::decode() const {
    CompleteFlagUniverse u(n_);
    return Map::validate(u.flag_set(), rotation_from_code(u, *this));
}

EmbeddingCode EmbeddingCode::from_map(const Map& m, uint32_t n) {
    CompleteFlagUniverse u(n);
    if (m.flag_count() != u.size())
        throw MapError(MapErrorCode::BAD_INPUT, "map is not on the K_n universe");
    const Permutation& P = m.rotation();
    std::vector<std::vector<Dart>> rots(n);
    for (uint32_t v = 0; v < n; ++v) {
        uint32_t least = v == 0 ? 1 : 0;
        uint32_t start = u.flag(v, least, 0);
        uint32_t f = start;
        do {
            auto p = u.parts(f);
            if (p.i != v)
                throw MapError(MapErrorCode::BAD_INPUT, "rotation leaves its vertex (not a K_n map)");
            rots[v].push_back({p.j, static_cast<uint8_t>(p.s)});
            f = P(f);
        } while (f != start);
    }
    return EmbeddingCode(n, std::move(rots));
}

std::string EmbeddingCode::to_kn_v1() const {
    std::ostringstream out;
    out << "kn v1; n=" << n_;
    for (uint32_t v = 0; v < n_; ++v) {
        out << "; rot[" << (v + 1) << "]=";
        const auto& r = rot_[v];
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) out << ' ';
            out << (r[k].neighbor + 1) << (r[k].sign ? '-' : '+');
        }
    }
    return out.str();
}

EmbeddingCode EmbeddingCode::parse_kn_v1(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ';') {
            fields.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    fields.push_back(cur);
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return std::string();
        std::size_t b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
    };
    for (auto& f : fields) f = trim(f);
    if (fields.empty() || fields[0] != "kn v1")
        throw MapError(MapErrorCode::BAD_INPUT, "expected 'kn v1' header");
    if (fields.size() < 2 || fields[1].rfind("n=", 0) != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "expected 'n=<order>'");
    uint32_t n = static_cast<uint32_t>(std::stoul(fields[1].substr(2)));
    if (fields.size() != 2u + n)
        throw MapError(MapErrorCode::BAD_INPUT, "expected one rot[...] field per vertex");
    std::vector<std::vector<Dart>> rots(n);
    for (uint32_t v = 0; v < n; ++v) {
        const std::string& f = fields[2 + v];
        std::string prefix = "rot[" + std::to_string(v + 1) + "]=";
        if (f.rfind(prefix, 0) != 0)
            throw MapError(MapErrorCode::BAD_INPUT, "expected '" + prefix + "...'");
        std::istringstream ss(f.substr(prefix.size()));
        std::string tok;
        while (ss >> tok) {
            if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
                throw MapError(MapErrorCode::BAD_INPUT, "dart '" + tok + "' must end in + or -");
            uint32_t w = static_cast<uint32_t>(std::stoul(tok.substr(0, tok.size() - 1)));
            if (w == 0 || w > n)
                throw MapError(MapErrorCode::BAD_INPUT, "dart neighbor out of range in '" + tok + "'");
            rots[v].push_back({w - 1, static_cast<uint8_t>(tok.back() == '-' ? 1 : 0)});
        }
    }
    return EmbeddingCode(n, std::move(rots));
}

// ---------------------------------------------------------------------------
// Lifted actions

Permutation lift(const CompleteFlagUniverse& u, const Permutation& g, bool reversing) {
    if (g.size() != u.n())
        throw MapError(MapErrorCode::BAD_INPUT, "vertex permutation size mismatch");
    std::vector<uint32_t> img(u.size());
    for (uint32_t f = 0; f < u.size(); ++f) {
        auto p = u.parts(f);
        img[f] = u.flag(g(p.i), g(p.j), p.s ^ (reversing ? 1u : 0u));
    }
    return Permutation::from_images(std::move(img));
}

bool is_stable(const Map& m, const LiftedAction& a) {
    CompleteFlagUniverse u(static_cast<uint32_t>(a.base.size()));
    if (m.flag_count() != u.size())
        throw MapError(MapErrorCode::BAD_INPUT, "map/action universe mismatch");
    Permutation z = lift(u, a.base, a.reversing);
    const Permutation& P = m.rotation();
    for (uint32_t x = 0; x < u.size(); ++x)
        if (z(P(x)) != P(z(x))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::vector<Dart>> vertex_rotation_candidates(uint32_t n, uint32_t v, EmbedKind kind) {
    std::vector<uint32_t> nbrs;
    for (uint32_t w = 0; w < n; ++w)
        if (w != v) nbrs.push_back(w);
    std::vector<uint32_t> rest(nbrs.begin() + 1, nbrs.end());
    std::vector<std::vector<Dart>> out;
    std::sort(rest.begin(), rest.end());
    const uint32_t signbits = n >= 2 ? n - 2 : 0;
    const uint32_t nsign = kind == EmbedKind::Orientable ? 1u : (1u << signbits);
    do {
        for (uint32_t mask = 0; mask < nsign; ++mask) {
            std::vector<Dart> r;
            r.reserve(n - 1);
            r.push_back({nbrs[0], 0});
            for (uint32_t k = 0; k < rest.size(); ++k)
                r.push_back({rest[k], static_cast<uint8_t>((mask >> k) & 1)});
            out.push_back(std::move(r));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

bool enumerate_embeddings(uint32_t n, EmbedKind kind,
                          const std::function<bool(const EmbeddingCode&)>& fn,
                          int64_t first_vertex_filter) {
    std::vector<std::vector<std::vector<Dart>>> cand(n);
    for (uint32_t v = 0; v < n; ++v) cand[v] = vertex_rotation_candidates(n, v, kind);
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::vector<Dart>> rots(n);
    std::size_t v0_lo = 0, v0_hi = cand[0].size();
    if (first_vertex_filter >= 0) {
        if (static_cast<std::size_t>(first_vertex_filter) >= cand[0].size()) return true;
        v0_lo = static_cast<std::size_t>(first_vertex_filter);
        v0_hi = v0_lo + 1;
    }
    // Odometer over the per-vertex candidate lists.
    for (std::size_t i0 = v0_lo; i0 < v0_hi; ++i0) {
        idx.assign(n, 0);
        idx[0] = i0;
        for (;;) {
            for (uint32_t v = 0; v < n; ++v) rots[v] = cand[v][idx[v]];
            if (!fn(EmbeddingCode(n, rots))) return false;
            uint32_t v = n - 1;
            for (;;) {
                if (v == 0) goto next_i0;
                if (++idx[v] < cand[v].size()) break;
                idx[v] = 0;
                --v;
            }
        }
    next_i0:;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Fixed-embedding counting
//
// A lifted action z = lift(g, rev) permutes the vertices of K_n along the
// cycles of g.  A stable rotation is freely chosen at one representative
// vertex per g-orbit and propagated; the only constraint is closure when the
// propagation wraps around the orbit, i.e. the chosen vertex pair must commute
// with the restriction of z^m (m = orbit length) to the representative's
// flags.  That restriction permutes the representative's darts by g^m and
// twists each dart's sign by a bit that, in the edge-flip-twisted variants
// used for the quotient count, is a GF(2)-linear function of the flip set.

namespace {

struct VertexOrbit {
    uint32_t rep = 0;
    uint32_t len = 0;
    std::vector<uint32_t> members;
};

std::vector<VertexOrbit> vertex_orbits(const Permutation& g) {
    std::vector<VertexOrbit> out;
    for (const auto& c : g.cycles()) {
        VertexOrbit o;
        o.rep = *std::min_element(c.begin(), c.end());
        o.len = static_cast<uint32_t>(c.size());
        // members in propagation order starting at rep
        uint32_t v = o.rep;
        for (std::size_t k = 0; k < c.size(); ++k) {
            o.members.push_back(v);
            v = g(v);
        }
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexOrbit& a, const VertexOrbit& b) { return a.rep < b.rep; });
    return out;
}

// Local pair permutation of one vertex: array over 2(n-1) local flag slots,
// slot = 2*adj(v,j) + s.
using LocalPerm = std::vector<uint8_t>;

uint32_t local_slot(uint32_t n, uint32_t v, uint32_t j, uint32_t s) {
    return 2 * (j < v ? j : j - 1) + s;
}

LocalPerm local_pair(uint32_t n, uint32_t v, const std::vector<Dart>& rot) {
    LocalPerm P(2 * (n - 1), 0xff);
    const std::size_t m = rot.size();
    for (std::size_t k = 0; k < m; ++k) {
        uint32_t a = local_slot(n, v, rot[k].neighbor, rot[k].sign);
        uint32_t b = local_slot(n, v, rot[(k + 1) % m].neighbor, rot[(k + 1) % m].sign);
        P[a] = static_cast<uint8_t>(b);
        P[b ^ 1] = static_cast<uint8_t>(a ^ 1);
    }
    return P;
}

// The closure map at orbit representative r: dart j -> h(j) with sign twisted
// by bit j of `twist` (indexed by adj position of j at r).
LocalPerm closure_map(uint32_t n, uint32_t r, const std::vector<uint32_t>& h_img,
                      uint32_t twist_mask) {
    LocalPerm phi(2 * (n - 1));
    for (uint32_t j = 0; j < n; ++j) {
        if (j == r) continue;
        uint32_t adj = j < r ? j : j - 1;
        uint32_t tw = (twist_mask >> adj) & 1;
        for (uint32_t s = 0; s < 2; ++s)
            phi[local_slot(n, r, j, s)] =
                static_cast<uint8_t>(local_slot(n, r, h_img[j], s ^ tw));
    }
    return phi;
}

bool commutes(const LocalPerm& phi, const LocalPerm& P) {
    for (std::size_t l = 0; l < P.size(); ++l)
        if (phi[P[l]] != P[phi[l]]) return false;
    return true;
}

// Per-orbit stable-candidate counter with memoization over the twist mask.
struct OrbitCounter {
    uint32_t n;
    const VertexOrbit* orbit;
    EmbedKind kind;
    std::vector<uint32_t> h_img;  // g^len restricted (fixes rep, permutes its neighbors)
    std::vector<std::vector<Dart>> candidates;
    std::vector<LocalPerm> candidate_pairs;
    std::vector<int64_t> memo;  // by twist mask over n-1 adj positions

    OrbitCounter(uint32_t n_, const VertexOrbit& o, const Permutation& g, EmbedKind k)
        : n(n_), orbit(&o), kind(k) {
        Permutation gm = g.power(o.len);
        h_img.resize(n);
        for (uint32_t j = 0; j < n; ++j) h_img[j] = gm(j);
        candidates = vertex_rotation_candidates(n, o.rep, kind);
        candidate_pairs.reserve(candidates.size());
        for (const auto& c : candidates) candidate_pairs.push_back(local_pair(n, o.rep, c));
        memo.assign(1u << (n - 1), -1);
    }

    uint64_t count(uint32_t twist_mask) {
        int64_t& slot = memo[twist_mask];
        if (slot >= 0) return static_cast<uint64_t>(slot);
        LocalPerm phi = closure_map(n, orbit->rep, h_img, twist_mask);
        uint64_t c = 0;
        for (const auto& P : candidate_pairs)
            if (commutes(phi, P)) ++c;
        slot = static_cast<int64_t>(c);
        return c;
    }

    // Indices of candidates stable under the given twist.
    std::vector<std::size_t> stable_indices(uint32_t twist_mask) const {
        LocalPerm phi = closure_map(n, orbit->rep, h_img, twist_mask);
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < candidate_pairs.size(); ++i)
            if (commutes(phi, candidate_pairs[i])) out.push_back(i);
        return out;
    }

    // Uniform twist mask for the raw (untwisted) action: rev applied len times.
    uint32_t raw_twist(bool reversing) const {
        return (reversing && (orbit->len & 1)) ? ((1u << (n - 1)) - 1) : 0u;
    }
};

}  // namespace

BigInt fixed_maps_count(uint32_t n, const Permutation& g, bool reversing, EmbedKind kind) {
    if (g.size() != n) throw MapError(MapErrorCode::BAD_INPUT, "vertex permutation size mismatch");
    BigInt total = 1;
    for (const auto& o : vertex_orbits(g)) {
        OrbitCounter oc(n, o, g, kind);
        uint64_t c = oc.count(oc.raw_twist(reversing));
        if (c == 0) return 0;
        total *= c;
    }
    return total;
}

bool for_each_fixed_code(uint32_t n, const Permutation& g, bool reversing, EmbedKind kind,
                         const std::function<bool(const EmbeddingCode&)>& fn) {
    auto orbits = vertex_orbits(g);
    std::vector<OrbitCounter> counters;
    std::vector<std::vector<std::size_t>> stable;
    for (const auto& o : orbits) {
        counters.emplace_back(n, o, g, kind);
        stable.push_back(counters.back().stable_indices(counters.back().raw_twist(reversing)));
        if (stable.back().empty()) return true;
    }
    CompleteFlagUniverse u(n);
    Permutation z = lift(u, g, reversing);
    std::vector<std::size_t> idx(orbits.size(), 0);
    for (;;) {
        // Assemble the full rotation: the chosen pair at each representative,
        // conjugated along the orbit.
        std::vector<uint32_t> img(u.size(), UINT32_MAX);
        for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
            const auto& o = orbits[oi];
            const auto& rot = counters[oi].candidates[stable[oi][idx[oi]]];
            const std::size_t m = rot.size();
            std::vector<uint32_t> cyc(m);
            for (std::size_t k = 0; k < m; ++k)
                cyc[k] = u.flag(o.rep, rot[k].neighbor, rot[k].sign);
            for (uint32_t step = 0; step < o.len; ++step) {
                for (std::size_t k = 0; k < m; ++k) {
                    uint32_t a = cyc[k], b = cyc[(k + 1) % m];
                    img[a] = b;
                    img[b ^ 1] = a ^ 1;
                }
                if (step + 1 < o.len)
                    for (auto& f : cyc) f = z(f);
            }
        }
        Permutation P = Permutation::from_images(std::move(img));
        EmbeddingCode code = [&] {
            std::vector<std::vector<Dart>> rots(n);
            for (uint32_t v = 0; v < n; ++v) {
                uint32_t start = u.flag(v, v == 0 ? 1 : 0, 0);
                uint32_t f = start;
                do {
                    auto p = u.parts(f);
                    rots[v].push_back({p.j, static_cast<uint8_t>(p.s)});
                    f = P(f);
                } while (f != start);
            }
            return EmbeddingCode(n, std::move(rots));
        }();
        if (!fn(code)) return false;
        std::size_t oi = orbits.size();
        for (;;) {
            if (oi == 0) return true;
            --oi;
            if (++idx[oi] < stable[oi].size()) break;
            idx[oi] = 0;
        }
    }
}

BigInt quotient_fixed_count(uint32_t n, const Permutation& g, bool reversing) {
    if (g.size() != n) throw MapError(MapErrorCode::BAD_INPUT, "vertex permutation size mismatch");
    if (n > 7)
        throw MapError(MapErrorCode::BAD_INPUT,
                       "quotient fixed counts are budgeted for n <= 7");
    CompleteFlagUniverse u(n);
    auto orbits = vertex_orbits(g);
    const uint32_t eps = u.edge_count();
    const uint32_t D = static_cast<uint32_t>(orbits.size()) * (n - 1);
    if (D > 64) throw MapError(MapErrorCode::BAD_INPUT, "quotient twist space too large");

    // Column vector for edge e: the concatenated twist bits each vertex-orbit
    // sees when the action is composed with the flip of edge e's orbit under g.
    // The twist on dart (rep, j) accumulates the flip bits of edges
    // {g^t(rep), g^t(j)} for t = 1..len.
    std::vector<uint64_t> column(eps, 0);
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        const auto& o = orbits[oi];
        for (uint32_t j = 0; j < n; ++j) {
            if (j == o.rep) continue;
            uint32_t adj = j < o.rep ? j : j - 1;
            uint32_t bitpos = static_cast<uint32_t>(oi) * (n - 1) + adj;
            uint32_t a = o.rep, b = j;
            for (uint32_t t = 0; t < o.len; ++t) {
                a = g(a);
                b = g(b);
                column[u.edge_index(a, b)] ^= (1ull << bitpos);
            }
        }
    }
    // Basis of the column span.
    std::vector<uint64_t> basis;
    for (uint32_t e = 0; e < eps; ++e) {
        uint64_t v = column[e];
        for (uint64_t b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    std::sort(basis.rbegin(), basis.rend());

    std::vector<OrbitCounter> counters;
    std::vector<uint32_t> base_twist;
    for (const auto& o : orbits) {
        counters.emplace_back(n, o, g, EmbedKind::LocallyOrientable);
        base_twist.push_back(counters.back().raw_twist(reversing));
    }
    const uint32_t mask = (1u << (n - 1)) - 1;
    BigInt total = 0;
    const uint64_t span = 1ull << basis.size();
    uint64_t y = 0;
    for (uint64_t it = 0;; ++it) {
        BigInt prod = 1;
        for (std::size_t oi = 0; oi < counters.size(); ++oi) {
            uint32_t tw = base_twist[oi] ^
                          (static_cast<uint32_t>(y >> (oi * (n - 1))) & mask);
            uint64_t c = counters[oi].count(tw);
            if (c == 0) {
                prod = 0;
                break;
            }
            prod *= c;
        }
        total += prod;
        if (it + 1 == span) break;
        // Gray-code walk over the span.
        uint64_t next = it + 1;
        unsigned bit = 0;
        while (!(next & (1ull << bit))) ++bit;
        y ^= basis[bit];
    }
    BigInt denom = BigInt(1) << basis.size();
    if (total % denom != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "quotient fixed count not integral (internal)");
    return total / denom;
}

std::vector<std::pair<CycleType, bool>> admissible_classes(uint32_t n, Orientability) {
    if (n < 4) throw MapError(MapErrorCode::BAD_INPUT, "admissible classes require n >= 4");
    std::vector<std::pair<CycleType, bool>> out;
    auto add = [&](const CycleType& t, bool rev) {
        for (const auto& [tt, rr] : out)
            if (tt == t && rr == rev) return;
        out.emplace_back(t, rev);
    };
    // Order-preserving sources: [s^{n/s}] for s | n, and [1, s^{(n-1)/s}] for
    // s | (n-1), s > 1.
    for (uint32_t s = 1; s <= n; ++s) {
        if (n % s == 0) add(CycleType(std::vector<uint32_t>(n / s, s)), false);
        if (s > 1 && (n - 1) % s == 0) {
            std::vector<uint32_t> parts{1};
            parts.insert(parts.end(), (n - 1) / s, s);
            add(CycleType(std::move(parts)), false);
        }
    }
    // Order-reversing sources: [(2s)^{n/2s}] for 2s | n, plus the n = 4
    // special [1,1,2].
    for (uint32_t s = 1; 2 * s <= n; ++s)
        if (n % (2 * s) == 0) add(CycleType(std::vector<uint32_t>(n / (2 * s), 2 * s)), true);
    if (n == 4) add(CycleType({1, 1, 2}), true);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

}  // namespace cmaps
