#include "cmaps/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace cmaps {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Orientable: return "orientable";
        case SurfaceKind::NonOrientable: return "non-orientable";
        case SurfaceKind::LocallyOrientable: return "locally-orientable";
    }
    return "?";
}
std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Formula: return "formula";
        case CountMethod::Burnside: return "burnside";
        case CountMethod::Orbit: return "orbit";
    }
    return "?";
}
std::string to_string(BetaVariant v) {
    return v == BetaVariant::Statement ? "statement" : "proof";
}

int64_t alpha_exponent(uint32_t n, uint32_t k) {
    if (k == 0 || n % k != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "alpha exponent requires k | n");
    uint64_t num = (k % 2 == 1) ? static_cast<uint64_t>(n) * (n - 3)
                                : static_cast<uint64_t>(n) * (n - 2);
    if (num % (2 * k) != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "alpha exponent is not an integer");
    return static_cast<int64_t>(num / (2 * k));
}

int64_t beta_exponent(uint32_t n, uint32_t k, BetaVariant v) {
    if (k <= 1 || (n - 1) % k != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "beta exponent requires k | (n-1), k != 1");
    uint64_t num;
    if (k % 2 == 0) num = static_cast<uint64_t>(n - 1) * (n - 3);
    else if (v == BetaVariant::Statement) num = static_cast<uint64_t>(n - 1) * (n - 2);
    else num = static_cast<uint64_t>(n - 1) * (n - 4);
    if (num % (2 * k) != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "beta exponent is not an integer");
    return static_cast<int64_t>(num / (2 * k));
}

static BigInt pow_big(const BigInt& b, uint32_t e) {
    BigInt r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

static std::string rational_str(const Rational& r) {
    return denominator(r) == 1 ? numerator(r).str()
                               : numerator(r).str() + "/" + denominator(r).str();
}

FormulaCounts formula_counts(uint32_t n, BetaVariant v) {
    if (n < 4) throw MapError(MapErrorCode::BAD_INPUT, "formula counts require n >= 4");
    if (n == 4) return {11, 3, 8};
    auto closed = [&](bool with_two_powers) {
        Rational total = 0;
        for (uint32_t k = 1; k <= n; ++k) {
            if (n % k) continue;
            BigInt term = pow_big(factorial(n - 2), n / k);
            if (with_two_powers) term <<= alpha_exponent(n, k);
            BigInt denom = pow_big(k, n / k) * factorial(n / k);
            Rational frac = Rational(term, denom) / 2;
            total += frac;              // the sum over all k | n
            if (k % 2 == 0) total += frac;  // the even-k sum, same terms
        }
        for (uint32_t k = 2; k < n; ++k) {
            if ((n - 1) % k) continue;
            BigInt term = euler_phi(k) * pow_big(factorial(n - 2), (n - 1) / k);
            if (with_two_powers) term <<= beta_exponent(n, k, v);
            total += Rational(term, n - 1);
        }
        return total;
    };
    Rational locally = closed(true), orientable = closed(false);
    Rational non_orientable = locally - orientable;
    FormulaCounts out;
    out.locally = numerator(locally) / denominator(locally);
    out.orientable = numerator(orientable) / denominator(orientable);
    out.non_orientable = numerator(non_orientable) / denominator(non_orientable);
    out.integral = denominator(locally) == 1 && denominator(orientable) == 1;
    if (!out.integral)
        out.note = "closed forms evaluate to non-integers: locally = " + rational_str(locally) +
                   ", orientable = " + rational_str(orientable) + ", non-orientable = " +
                   rational_str(non_orientable) + "; fields hold floors";
    return out;
}

BigInt fixed_count_formula(uint32_t n, const CycleType& t, bool reversing, SurfaceKind kind,
                           BetaVariant v) {
    if (kind == SurfaceKind::NonOrientable)
        return fixed_count_formula(n, t, reversing, SurfaceKind::LocallyOrientable, v) -
               fixed_count_formula(n, t, reversing, SurfaceKind::Orientable, v);
    const auto& parts = t.parts();
    bool uniform = !parts.empty() && std::all_of(parts.begin(), parts.end(), [&](uint32_t p) {
        return p == parts.front();
    });
    bool local = kind == SurfaceKind::LocallyOrientable;
    if (uniform && t.total() == n) {
        uint32_t k = parts.front();
        if (reversing && k % 2 != 0)
            throw MapError(MapErrorCode::BAD_INPUT,
                           "no closed-form fixed count: reversing class of odd part " +
                               t.to_string());
        BigInt r = pow_big(factorial(n - 2), n / k);
        if (local) r <<= alpha_exponent(n, k);
        return r;
    }
    bool one_fixed = parts.size() >= 2 && parts[0] == 1 && parts[1] > 1 &&
                     std::all_of(parts.begin() + 1, parts.end(),
                                 [&](uint32_t p) { return p == parts[1]; });
    if (one_fixed && !reversing) {
        uint32_t k = parts[1];
        // Trailing factor: stable pair permutations on the n-1 moved symbols.
        CycleType sub(std::vector<uint32_t>(parts.begin() + 1, parts.end()));
        BigInt num = BigInt(2) * euler_phi(k) * factorial(n - 2);
        BigInt den = sub.conjugacy_class_size();
        if (num % den != 0)
            throw MapError(MapErrorCode::BAD_INPUT, "fixed-count trailing factor not integral");
        BigInt r = pow_big(factorial(n - 2), (n - 1) / k) * (num / den);
        if (local) r <<= beta_exponent(n, k, v);
        return r;
    }
    throw MapError(MapErrorCode::BAD_INPUT,
                   "no closed-form fixed count for class " + t.to_string() +
                       (reversing ? " (reversing)" : ""));
}

// ---------------------------------------------------------------------------
// Burnside

static void run_jobs(std::size_t count, uint32_t jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max<uint32_t>(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (uint32_t w = 0; w < std::min<std::size_t>(jobs, count); ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

CensusReport burnside_count(uint32_t n, SurfaceKind kind, FixedSource source, BetaVariant v,
                            uint32_t jobs) {
    if (n < 4) throw MapError(MapErrorCode::BAD_INPUT, "burnside requires n >= 4");
    CensusReport rep;
    rep.n = n;
    rep.kind = kind;
    rep.method = CountMethod::Burnside;
    rep.beta_variant = v;
    if (kind == SurfaceKind::NonOrientable) {
        CensusReport L = burnside_count(n, SurfaceKind::LocallyOrientable, source, v, jobs);
        CensusReport O = burnside_count(n, SurfaceKind::Orientable, source, v, jobs);
        rep.count = L.count - O.count;
        rep.non_integer = L.non_integer || O.non_integer;
        for (std::size_t i = 0; i < L.per_class.size(); ++i) {
            PerClassTerm term = L.per_class[i];
            term.fixed_count -= O.per_class[i].fixed_count;
            if (term.formula_fixed && O.per_class[i].formula_fixed)
                *term.formula_fixed -= *O.per_class[i].formula_fixed;
            rep.per_class.push_back(std::move(term));
        }
        rep.notes.push_back("non-orientable = locally-orientable minus orientable");
        return rep;
    }
    if (source == FixedSource::Dfs) {
        if (kind == SurfaceKind::Orientable && n > 8)
            throw BudgetError("burnside dfs (orientable) budgeted for n <= 8");
        if (kind == SurfaceKind::LocallyOrientable && n > 7)
            throw BudgetError("burnside dfs (locally-orientable) budgeted for n <= 7");
    }
    auto types = all_cycle_types(n);
    std::sort(types.begin(), types.end());
    struct Job {
        CycleType type;
        bool reversing;
    };
    std::vector<Job> jobs_list;
    for (const auto& t : types)
        for (bool rv : {false, true}) jobs_list.push_back({t, rv});
    std::vector<PerClassTerm> terms(jobs_list.size());
    auto admissible = admissible_classes(n, Orientability::Orientable);
    std::vector<std::string> notes;
    std::mutex note_mu;
    run_jobs(jobs_list.size(), jobs, [&](std::size_t i) {
        const auto& [t, rv] = jobs_list[i];
        PerClassTerm term;
        term.type = t;
        term.reversing = rv;
        term.class_size = t.conjugacy_class_size();
        Permutation g = t.representative();
        if (source == FixedSource::Dfs) {
            if (kind == SurfaceKind::Orientable)
                term.fixed_count = fixed_maps_count(n, g, rv, EmbedKind::Orientable);
            else
                term.fixed_count = quotient_fixed_count(n, g, rv);
            try {
                term.formula_fixed = fixed_count_formula(n, t, rv, kind, v);
            } catch (const MapError&) {
            }
        } else {
            bool adm = std::find(admissible.begin(), admissible.end(),
                                 std::make_pair(t, rv)) != admissible.end();
            if (!adm) {
                term.fixed_count = 0;
            } else {
                try {
                    term.fixed_count = fixed_count_formula(n, t, rv, kind, v);
                } catch (const MapError&) {
                    term.fixed_count = 0;
                    std::scoped_lock lk(note_mu);
                    notes.push_back("class " + t.to_string() + (rv ? " (reversing)" : "") +
                                    " has no closed-form fixed count; counted as 0");
                }
            }
        }
        terms[i] = std::move(term);
    });
    rep.per_class = std::move(terms);
    rep.notes = std::move(notes);
    BigInt sum = 0;
    for (const auto& term : rep.per_class) sum += term.class_size * term.fixed_count;
    BigInt denom = 2 * factorial(n);
    if (sum % denom != 0) {
        rep.non_integer = true;
        rep.count = sum / denom;
        rep.notes.push_back("NON_INTEGER_ORBIT_COUNT: sum " + sum.str() + " not divisible by " +
                            denom.str());
    } else {
        rep.count = sum / denom;
    }
    for (auto& term : rep.per_class) {
        if (source == FixedSource::Dfs && term.formula_fixed &&
            *term.formula_fixed != term.fixed_count)
            rep.notes.push_back("class " + term.type.to_string() +
                                (term.reversing ? " (reversing)" : "") + ": dfs fixed count " +
                                term.fixed_count.str() + " differs from closed form " +
                                term.formula_fixed->str() + " (dfs authoritative)");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Orbit counting

static void check_orbit_budget(uint32_t n, SurfaceKind kind, bool long_run) {
    if (kind == SurfaceKind::Orientable) {
        if (n > 5) throw BudgetError("exhaustive orientable orbit count budgeted for n <= 5");
    } else {
        if (n > 5 || (n == 5 && !long_run))
            throw BudgetError(
                "exhaustive non/locally-orientable orbit count budgeted for n <= 4 "
                "(n = 5 requires the long-run flag)");
    }
}

// Canonical form -> (surface, representative rotation images).
static std::map<std::vector<uint8_t>, std::pair<SurfaceType, std::vector<uint32_t>>>
orbit_classes(uint32_t n, SurfaceKind kind, bool long_run, uint32_t jobs) {
    check_orbit_budget(n, kind, long_run);
    EmbedKind ek = kind == SurfaceKind::Orientable ? EmbedKind::Orientable
                                                   : EmbedKind::LocallyOrientable;
    std::size_t partitions = vertex_rotation_candidates(n, 0, ek).size();
    std::vector<std::map<std::vector<uint8_t>, std::pair<SurfaceType, std::vector<uint32_t>>>>
        partial(partitions);
    run_jobs(partitions, jobs, [&](std::size_t p) {
        enumerate_embeddings(
            n, ek,
            [&](const EmbeddingCode& code) {
                Map m = code.decode();
                SurfaceType s = m.surface();
                if (kind == SurfaceKind::NonOrientable && s.orientable) return true;
                auto key = canonical_form(m);
                partial[p].emplace(std::move(key),
                                   std::make_pair(s, m.rotation().images()));
                return true;
            },
            static_cast<int64_t>(p));
    });
    std::map<std::vector<uint8_t>, std::pair<SurfaceType, std::vector<uint32_t>>> classes;
    for (auto& part : partial)
        for (auto& kvp : part) classes.insert(std::move(kvp));
    return classes;
}

CensusReport orbit_count(uint32_t n, SurfaceKind kind, bool long_run, uint32_t jobs) {
    auto classes = orbit_classes(n, kind, long_run, jobs);
    CensusReport rep;
    rep.n = n;
    rep.kind = kind;
    rep.method = CountMethod::Orbit;
    rep.count = classes.size();
    rep.notes.push_back("exhaustive canonical-form count over all normalized codes");
    return rep;
}

std::map<SurfaceType, uint64_t> genus_distribution(uint32_t n, SurfaceKind kind, bool long_run,
                                                   uint32_t jobs) {
    std::map<SurfaceType, uint64_t> hist;
    for (const auto& [key, val] : orbit_classes(n, kind, long_run, jobs)) ++hist[val.first];
    return hist;
}

std::vector<std::pair<Map, SurfaceType>> catalog(uint32_t n, SurfaceKind kind, bool long_run,
                                                 uint32_t jobs) {
    CompleteFlagUniverse u(n);
    std::vector<std::pair<Map, SurfaceType>> out;
    for (const auto& [key, val] : orbit_classes(n, kind, long_run, jobs))
        out.emplace_back(Map::validate(u.flag_set(), Permutation::from_images(
                                                         std::vector<uint32_t>(val.second))),
                         val.first);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

// ---------------------------------------------------------------------------
// Pair permutations

PairPermutationCheck stable_pair_permutation_count(uint32_t m, uint32_t k) {
    if (k == 0 || m % k != 0)
        throw MapError(MapErrorCode::BAD_INPUT, "pair permutation count requires k | m");
    PairPermutationCheck out;
    CycleType t(std::vector<uint32_t>(m / k, k));
    BigInt num = BigInt(2) * euler_phi(k) * factorial(m - 1);
    BigInt den = t.conjugacy_class_size();
    out.closed_form = num / den;  // exactness is part of what the checker adjudicates
    // Brute force on 2m points; alpha(x) = x + m (mod 2m).
    const uint32_t N = 2 * m;
    std::vector<uint32_t> g(N);
    Permutation base = t.representative();
    for (uint32_t i = 0; i < m; ++i) {
        g[i] = base(i);
        g[i + m] = base(i) + m;
    }
    std::vector<uint32_t> ga(N);
    for (uint32_t x = 0; x < N; ++x) ga[x] = g[(x + m) % N];
    std::vector<uint32_t> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 1u);
    std::vector<uint32_t> rho(N);
    do {
        std::vector<uint32_t> cyc{0};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        for (uint32_t i = 0; i < m; ++i) {
            uint32_t a = cyc[i], b = cyc[(i + 1) % m];
            rho[a] = b;
            rho[b + m] = a + m;
        }
        auto commutes_with = [&](const std::vector<uint32_t>& h) {
            for (uint32_t x = 0; x < N; ++x)
                if (h[rho[x]] != rho[h[x]]) return false;
            return true;
        };
        bool fg = commutes_with(g), fga = commutes_with(ga);
        out.fixed_by_g += fg;
        out.fixed_by_g_alpha += fga;
        out.fixed_by_either += (fg || fga);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Report rendering

static nlohmann::ordered_json report_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["kind"] = to_string(r.kind);
    j["method"] = to_string(r.method);
    j["count"] = r.count.str();
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& term : r.per_class) {
        nlohmann::ordered_json c;
        c["cycle_type"] = term.type.to_string();
        c["reversing"] = term.reversing;
        c["class_size"] = term.class_size.str();
        c["fixed_count"] = term.fixed_count.str();
        if (term.formula_fixed) c["formula_fixed"] = term.formula_fixed->str();
        classes.push_back(std::move(c));
    }
    j["per_class"] = std::move(classes);
    j["beta_variant"] = to_string(r.beta_variant);
    j["notes"] = r.notes;
    j["non_integer"] = r.non_integer;
    return j;
}

std::string CensusReport::to_json() const { return report_json(*this).dump(2) + "\n"; }

std::string CensusReport::to_csv() const {
    std::ostringstream out;
    out << "n,kind,method,cycle_type,reversing,class_size,fixed_count\n";
    if (per_class.empty()) {
        out << n << ',' << cmaps::to_string(kind) << ',' << cmaps::to_string(method) << ",total,,,"
            << count.str() << "\n";
        return out.str();
    }
    for (const auto& term : per_class) {
        out << n << ',' << cmaps::to_string(kind) << ',' << cmaps::to_string(method) << ",\""
            << term.type.to_string() << "\"," << (term.reversing ? "true" : "false") << ','
            << term.class_size.str() << ',' << term.fixed_count.str() << "\n";
    }
    return out.str();
}

std::string CensusReport::to_text() const {
    std::ostringstream out;
    out << cmaps::to_string(method) << " census: n=" << n << " kind=" << cmaps::to_string(kind)
        << " count=" << count.str() << "\n";
    if (!per_class.empty()) {
        out << "  class (reversing)  class_size  fixed_count\n";
        for (const auto& term : per_class) {
            out << "  " << term.type.to_string() << (term.reversing ? " (rev)" : "      ") << "  "
                << term.class_size.str() << "  " << term.fixed_count.str();
            if (term.formula_fixed && *term.formula_fixed != term.fixed_count)
                out << "  [closed form: " << term.formula_fixed->str() << "]";
            out << "\n";
        }
    }
    for (const auto& note : notes) out << "  note: " << note << "\n";
    return out.str();
}

}  // namespace cmaps
