// mapcensus: censuses of complete-graph maps on surfaces, map isomorphism /
// automorphism queries, witness construction and class catalogs.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cmaps/acceptance.hpp"
#include "cmaps/map_io.hpp"
#include "json.hpp"

using namespace cmaps;

namespace {

constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_BAD_USAGE = 2;
constexpr int EXIT_BUDGET = 3;
constexpr int EXIT_NON_INTEGER = 4;

struct Options {
    uint32_t n = 4;
    std::string kind = "locally-orientable";
    std::string method = "formula";
    std::string fixed_source = "dfs";
    std::string beta_variant = "proof";
    std::string format = "text";
    std::string level = "standard";
    std::string cls;
    std::string output;
    uint32_t jobs = 1;
    uint64_t seed = 20240501;
    bool long_run = false;
    bool reversing = false;
    bool adjudicate = false;
    std::vector<std::string> paths;
};

SurfaceKind parse_kind(const std::string& s) {
    if (s == "orientable") return SurfaceKind::Orientable;
    if (s == "non-orientable") return SurfaceKind::NonOrientable;
    if (s == "locally-orientable") return SurfaceKind::LocallyOrientable;
    throw CLI::ValidationError("--kind", "unknown kind: " + s);
}

BetaVariant parse_variant(const std::string& s) {
    return s == "statement" ? BetaVariant::Statement : BetaVariant::Proof;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        out << text;
    }
}

int run_census(const Options& opt) {
    SurfaceKind kind = parse_kind(opt.kind);
    BetaVariant variant = parse_variant(opt.beta_variant);
    CensusReport rep;
    if (opt.method == "formula") {
        FormulaCounts f = formula_counts(opt.n, variant);
        rep.n = opt.n;
        rep.kind = kind;
        rep.method = CountMethod::Formula;
        rep.beta_variant = variant;
        rep.count = kind == SurfaceKind::Orientable      ? f.orientable
                    : kind == SurfaceKind::NonOrientable ? f.non_orientable
                                                         : f.locally;
        rep.non_integer = !f.integral;
        if (!f.note.empty()) rep.notes.push_back(f.note);
    } else if (opt.method == "burnside") {
        FixedSource src = opt.fixed_source == "formula" ? FixedSource::Formula : FixedSource::Dfs;
        rep = burnside_count(opt.n, kind, src, variant, opt.jobs);
    } else if (opt.method == "orbit") {
        rep = orbit_count(opt.n, kind, opt.long_run, opt.jobs);
    } else {
        throw CLI::ValidationError("--method", "unknown method: " + opt.method);
    }
    std::string text = opt.format == "json"  ? rep.to_json()
                       : opt.format == "csv" ? rep.to_csv()
                                             : rep.to_text();
    emit(text, opt.output);
    return rep.non_integer ? EXIT_NON_INTEGER : 0;
}

int run_verify(const Options& opt) {
    if (opt.adjudicate) {
        BetaAdjudication a = adjudicate_beta();
        std::cout << "n = 7 class [1,3,3] locally-orientable fixed count (dfs): "
                  << a.dfs_value.str() << "\n"
                  << "  statement-variant closed form: " << a.statement_value.str() << "\n"
                  << "  proof-variant closed form:     " << a.proof_value.str() << "\n"
                  << "  validated variant: " << (a.validated ? to_string(*a.validated) : "neither")
                  << "\n";
        return a.validated ? 0 : EXIT_CHECK_FAILED;
    }
    AcceptanceLevel level = opt.level == "quick"  ? AcceptanceLevel::Quick
                            : opt.level == "full" ? AcceptanceLevel::Full
                                                  : AcceptanceLevel::Standard;
    auto results = run_acceptance(level, opt.jobs);
    bool all_ok = true;
    if (opt.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            all_ok = all_ok && r.passed;
            j.push_back({{"id", r.id},
                         {"description", r.description},
                         {"passed", r.passed},
                         {"detail", r.detail}});
        }
        emit(j.dump(2) + "\n", opt.output);
    } else {
        std::ostringstream out;
        for (const auto& r : results) {
            all_ok = all_ok && r.passed;
            out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.description
                << " — " << r.detail << "\n";
        }
        emit(out.str(), opt.output);
    }
    return all_ok ? 0 : EXIT_CHECK_FAILED;
}

int run_iso(const Options& opt) {
    Map m1 = read_map_v1_file(opt.paths[0]);
    Map m2 = read_map_v1_file(opt.paths[1]);
    auto iso = find_isomorphism(m1, m2, IsoMode::Either);
    if (!iso) {
        std::cout << "none\n";
        return 0;
    }
    std::cout << "mode: "
              << (iso->mode == MorphMode::Preserving ? "order-preserving" : "order-reversing")
              << "\nbijection: " << format_cycles(iso->bijection) << "\n";
    return 0;
}

int run_aut(const Options& opt) {
    Map m = read_map_v1_file(opt.paths[0]);
    auto group = automorphism_group(m);
    uint64_t preserving = 0;
    for (const auto& a : group)
        if (a.mode == MorphMode::Preserving) ++preserving;
    std::cout << "order: " << group.size() << "\norder-preserving: " << preserving
              << "\norder-reversing: " << group.size() - preserving << "\n";
    for (const auto& a : group)
        std::cout << (a.mode == MorphMode::Preserving ? "P " : "R ")
                  << format_cycles(a.bijection, false) << "\n";
    return 0;
}

int run_witness(const Options& opt) {
    CycleType t = CycleType::parse(opt.cls, opt.n);
    Orientability want = parse_kind(opt.kind) == SurfaceKind::Orientable
                             ? Orientability::Orientable
                             : Orientability::NonOrientable;
    auto [m, action] = witness_map(opt.n, t, opt.reversing, want);
    std::ostringstream out;
    out << write_map_v1(m);
    out << "# witness for class " << t.to_string() << (opt.reversing ? " (reversing)" : "")
        << " on K_" << opt.n << ", " << m.surface().name() << "\n";
    out << "# vertex action g = " << format_cycles(action.base) << "\n";
    CompleteFlagUniverse u(opt.n);
    Permutation z = lift(u, action.base, action.reversing);
    out << "# lifted flag action z = " << format_cycles(z, false) << "\n";
    bool ok = true;
    const Permutation& P = m.rotation();
    for (uint32_t x = 0; x < u.size(); ++x) ok = ok && z(P(x)) == P(z(x));
    out << "# conjugation check z·P = P·z on all " << u.size() << " flags: "
        << (ok ? "pass" : "FAIL") << "\n";
    emit(out.str(), opt.output);
    return ok ? 0 : EXIT_CHECK_FAILED;
}

int run_catalog(const Options& opt) {
    SurfaceKind kind = parse_kind(opt.kind);
    auto classes = catalog(opt.n, kind, opt.long_run, opt.jobs);
    std::filesystem::path dir = opt.output.empty() ? "." : opt.output;
    std::filesystem::create_directories(dir);
    std::size_t index = 0;
    for (const auto& [m, surface] : classes) {
        std::ostringstream name;
        name << "k" << opt.n << "_class" << std::setw(3) << std::setfill('0') << index++ << ".map";
        std::ofstream out(dir / name.str());
        out << write_map_v1(m) << "# surface: " << surface.name() << "\n";
    }
    std::cout << classes.size() << " classes written to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"censuses, isomorphism and witnesses for complete-graph maps on surfaces"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "number of vertices");
        sub->add_option("--jobs", opt.jobs, "worker threads");
        sub->add_option("--format", opt.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("-o,--output", opt.output, "output file (or directory for catalog)");
        sub->add_option("--seed", opt.seed, "seed for randomized checks");
        sub->add_flag("--long-run", opt.long_run, "allow long-running exhaustive budgets");
    };
    auto add_kind = [&](CLI::App* sub) {
        sub->add_option("--kind", opt.kind, "orientable, non-orientable or locally-orientable")
            ->check(CLI::IsMember({"orientable", "non-orientable", "locally-orientable"}));
    };

    CLI::App* census = app.add_subcommand("census", "count isomorphism classes");
    add_common(census);
    add_kind(census);
    census->add_option("--method", opt.method, "formula, burnside or orbit")
        ->check(CLI::IsMember({"formula", "burnside", "orbit"}));
    census->add_option("--fixed-source", opt.fixed_source, "dfs or formula (burnside only)")
        ->check(CLI::IsMember({"dfs", "formula"}));
    census->add_option("--beta-variant", opt.beta_variant, "proof or statement")
        ->check(CLI::IsMember({"proof", "statement"}));

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance cross-checks");
    add_common(verify);
    verify->add_option("--level", opt.level, "quick, standard or full")
        ->check(CLI::IsMember({"quick", "standard", "full"}));
    verify->add_flag("--adjudicate-beta", opt.adjudicate,
                     "report which beta variant the n = 7 fixed count validates");

    CLI::App* iso = app.add_subcommand("iso", "test two map files for isomorphism");
    iso->add_option("files", opt.paths, "two map v1 files")->expected(2);

    CLI::App* aut = app.add_subcommand("aut", "print the automorphism group of a map file");
    aut->add_option("file", opt.paths, "map v1 file")->expected(1);

    CLI::App* witness = app.add_subcommand("witness", "emit a stable map for an admissible class");
    add_common(witness);
    add_kind(witness);
    witness->add_option("--class", opt.cls, "cycle type, e.g. 1,1,2")->required();
    witness->add_flag("--reversing", opt.reversing, "use the order-reversing lifted action");

    CLI::App* cat = app.add_subcommand("catalog", "emit one map file per isomorphism class");
    add_common(cat);
    add_kind(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_BAD_USAGE;
    }

    try {
        if (census->parsed()) return run_census(opt);
        if (verify->parsed()) return run_verify(opt);
        if (iso->parsed()) return run_iso(opt);
        if (aut->parsed()) return run_aut(opt);
        if (witness->parsed()) return run_witness(opt);
        if (cat->parsed()) return run_catalog(opt);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return EXIT_BUDGET;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return EXIT_BAD_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CHECK_FAILED;
    }
    return EXIT_BAD_USAGE;
}
