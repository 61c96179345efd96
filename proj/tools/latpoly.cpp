// Command-line front end: count or enumerate the Latin squares compatible
// with an isotopism, compute per-class table rows (reduced coordinate count,
// rank bound, solution count, polytope dimension), verify them against the
// bundled expectations, export matrices/vertices/equivalence maps, and check
// a square file against an isotopism.
//
// Exit codes: 0 success, 1 usage or input error, 2 budget exhausted before
// the requested values settled, 3 computed values disagree with expectations
// (or a check/equivalence definitively fails).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/constraint_system.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/equivalence.hpp"
#include "latpoly/exact_linalg.hpp"
#include "latpoly/report.hpp"

namespace {

using namespace latpoly;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_counts(const std::string& text) {
    std::vector<int> counts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad count list '" + text + "': '" + item + "' is not an integer");
        }
        if (used != item.size()) throw UsageError("bad count list '" + text + "': '" + item + "' is not an integer");
        counts.push_back(value);
    }
    if (counts.empty()) throw UsageError("empty count list");
    return counts;
}

// Flags describing one isotopism: either three permutations in cycle
// notation (unset means identity) or three cycle-structure count lists.
struct ThetaFlags {
    int n = 0;
    std::string a, b, c;
    bool a_set = false, b_set = false, c_set = false;
    std::vector<std::string> structure;

    void add_to(CLI::App& cmd, const std::string& suffix = "") {
        // Short names only work for the unsuffixed set; CLI11 requires
        // single-dash names to be a single character.
        const std::string an = suffix.empty() ? "-a" : "--a" + suffix;
        const std::string bn = suffix.empty() ? "-b" : "--b" + suffix;
        const std::string cn = suffix.empty() ? "-c" : "--c" + suffix;
        const std::string tail = suffix.empty() ? "" : " (" + suffix + ")";
        cmd.add_option(an, a, "row permutation, cycle notation" + tail)->each([this](const std::string&) {
            a_set = true;
        });
        cmd.add_option(bn, b, "column permutation, cycle notation" + tail)->each([this](const std::string&) {
            b_set = true;
        });
        cmd.add_option(cn, c, "symbol permutation, cycle notation" + tail)->each([this](const std::string&) {
            c_set = true;
        });
        cmd.add_option("--structure" + suffix, structure,
                       "three cycle-structure count lists, e.g. 0,0,1 0,0,1 3,0,0" + tail)
            ->expected(3);
    }

    bool any_permutation() const { return a_set || b_set || c_set; }

    Isotopism build() const {
        if (!structure.empty() && any_permutation())
            throw UsageError("give either -a/-b/-c or --structure, not both");
        if (!structure.empty()) {
            std::vector<CycleStructure> parts;
            for (const std::string& text : structure) {
                const std::vector<int> counts = parse_counts(text);
                const int degree = n > 0 ? n : static_cast<int>(counts.size());
                if (static_cast<int>(counts.size()) != degree)
                    throw UsageError("count list '" + text + "' has " + std::to_string(counts.size()) +
                                     " entries, expected " + std::to_string(degree));
                parts.push_back(make_cycle_structure(degree, counts));
            }
            return representative_isotopism(parts[0], parts[1], parts[2]);
        }
        if (n <= 0) throw UsageError("-n is required with -a/-b/-c");
        return Isotopism(parse_permutation(a, n), parse_permutation(b, n), parse_permutation(c, n));
    }
};

struct BudgetFlags {
    long long max_nodes = 10'000'000;
    double max_secs = 60.0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--budget-nodes", max_nodes, "search-node limit per computation (0 = unlimited)")
            ->capture_default_str();
        cmd.add_option("--budget-secs", max_secs, "wall-time limit per computation in seconds (0 = unlimited)")
            ->capture_default_str();
    }

    Budget budget() const { return Budget{max_nodes, max_secs}; }
};

// Structures ordered the way the tables list them: by cycle count, then by
// the count vector itself.
std::vector<CycleStructure> normalized_triple(const TableRow& row) {
    std::vector<CycleStructure> parts{row.la, row.lb, row.lc};
    std::stable_sort(parts.begin(), parts.end(), [](const CycleStructure& x, const CycleStructure& y) {
        if (x.cycle_count() != y.cycle_count()) return x.cycle_count() < y.cycle_count();
        return x.counts < y.counts;
    });
    return parts;
}

bool is_normalized(const TableRow& row) {
    return row.la.cycle_count() <= row.lb.cycle_count() && row.lb.cycle_count() <= row.lc.cycle_count();
}

RowComputation computed_row(const CycleStructure& la, const CycleStructure& lb, const CycleStructure& lc,
                            const RowOptions& opt, const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        const ResultCache cache(cache_dir);
        if (std::optional<RowComputation> hit = cache.load(la, lb, lc, opt)) return *hit;
        RowComputation fresh = compute_row(la, lb, lc, opt);
        cache.store(fresh, opt);
        return fresh;
    }
    return compute_row(la, lb, lc, opt);
}

int cmd_count(const ThetaFlags& theta, const BudgetFlags& budget, bool json) {
    const Isotopism T = theta.build();
    const EnumerationResult r = count_squares(T, budget.budget());
    if (json) {
        nlohmann::ordered_json j;
        if (r.complete)
            j["delta"] = r.delta;
        else
            j["delta"] = nullptr;
        j["complete"] = r.complete;
        j["nodes"] = r.nodes;
        std::cout << j.dump() << "\n";
    } else if (r.complete) {
        std::cout << r.delta << "\n";
    } else {
        std::cout << "incomplete: found " << r.delta << " so far in " << r.nodes << " nodes\n";
    }
    return r.complete ? kExitOk : kExitIncomplete;
}

int cmd_row(const ThetaFlags& theta, const BudgetFlags& budget, bool json, bool bounds_only,
            const std::string& cache_dir) {
    const Isotopism T = theta.build();
    RowOptions opt;
    opt.budget = budget.budget();
    opt.want_delta = !bounds_only;
    opt.want_dim = !bounds_only;
    const RowComputation got = computed_row(cycle_structure(T.alpha), cycle_structure(T.beta),
                                            cycle_structure(T.gamma), opt, cache_dir);
    if (json) {
        std::cout << row_to_json(got.row).dump() << "\n";
    } else {
        std::cout << row_to_text(got.row) << "\n";
        if (!is_normalized(got.row)) {
            const std::vector<CycleStructure> parts = normalized_triple(got.row);
            std::cout << "note: in table order (components sorted by cycle count) this class is "
                      << structure_text(parts[0]) << " " << structure_text(parts[1]) << " "
                      << structure_text(parts[2]) << "\n";
        }
    }
    const bool settled = (!opt.want_delta || got.delta_complete) && (!opt.want_dim || got.dim_known);
    return settled ? kExitOk : kExitIncomplete;
}

int cmd_table(int n, const BudgetFlags& budget, bool json, bool bounds_only, const std::string& cache_dir,
              const std::string& tables_path) {
    const std::vector<TableRow> all = load_expected_rows(tables_path);
    std::vector<const TableRow*> wanted;
    for (const TableRow& row : all)
        if (row.n == n) wanted.push_back(&row);
    if (wanted.empty()) throw UsageError("no table rows for n=" + std::to_string(n));

    bool any_mismatch = false, any_incomplete = false;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const TableRow* expected : wanted) {
        RowOptions opt;
        opt.budget = budget.budget();
        // Blank cells are unknown, not zero: never enumerate for them.
        opt.want_delta = !bounds_only && expected->delta.has_value();
        opt.want_dim = !bounds_only && expected->dim.has_value();
        const RowComputation got = computed_row(expected->la, expected->lb, expected->lc, opt, cache_dir);
        const std::vector<std::string> bad = compare_row(*expected, got);
        const bool settled = (!opt.want_delta || got.delta_complete) && (!opt.want_dim || got.dim_known);
        any_mismatch = any_mismatch || !bad.empty();
        any_incomplete = any_incomplete || !settled;

        if (json) {
            nlohmann::ordered_json j;
            j["row"] = row_to_json(got.row);
            j["complete"] = settled;
            j["mismatches"] = bad;
            jrows.push_back(j);
        } else {
            std::cout << row_to_text(got.row);
            if (!settled) std::cout << "  (incomplete)";
            for (const std::string& msg : bad) std::cout << "  MISMATCH " << msg;
            std::cout << "\n";
        }
    }
    if (json) std::cout << jrows.dump() << "\n";
    if (any_mismatch) return kExitMismatch;
    return any_incomplete ? kExitIncomplete : kExitOk;
}

int cmd_export(const std::string& what, const ThetaFlags& theta, const ThetaFlags& theta2,
               const BudgetFlags& budget, const std::string& out_dir) {
    const Isotopism T = theta.build();
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    auto write_system = [&](const ConstraintSystem& sys, const std::string& stem) {
        std::ofstream matrix(dir / (stem + ".mtx"));
        write_matrix(sys, matrix);
        std::ofstream rhs(dir / (stem + ".rhs"));
        write_rhs(sys, rhs);
        std::ofstream sidecar(dir / (stem + ".sidecar.json"));
        sidecar << matrix_sidecar_json(sys) << "\n";
        std::cout << (dir / (stem + ".mtx")).string() << "\n"
                  << (dir / (stem + ".rhs")).string() << "\n"
                  << (dir / (stem + ".sidecar.json")).string() << "\n";
    };

    if (what == "full-matrix") {
        write_system(full_system(T), "full");
        return kExitOk;
    }
    if (what == "reduced-matrix") {
        // Raw family-by-family rows; deduplication is reported in the sidecar
        // of the deduplicated variant, which callers can rebuild at will.
        write_system(reduced_system(T, /*dedup=*/false), "reduced");
        return kExitOk;
    }
    if (what == "vertices") {
        const ReductionContext ctx(T);
        std::ofstream out(dir / "vertices.txt");
        const EnumerationResult r = enumerate_vertices(ctx, budget.budget(), [&](const std::vector<uint8_t>& x) {
            std::string line(x.size(), '0');
            for (size_t u = 0; u < x.size(); ++u)
                if (x[u]) line[u] = '1';
            out << line << "\n";
            return true;
        });
        std::cout << (dir / "vertices.txt").string() << "\n";
        if (!r.complete) {
            std::cerr << "vertex enumeration incomplete: " << r.delta << " written\n";
            return kExitIncomplete;
        }
        return kExitOk;
    }
    if (what == "map") {
        const Isotopism U = theta2.build();
        try {
            const EquivalenceMap map = build_equivalence(T, U);
            std::ofstream out(dir / "map.txt");
            out << describe(map);
        } catch (const std::invalid_argument& e) {
            std::cerr << "no relabelling exists: " << e.what() << "\n";
            return kExitMismatch;
        }
        std::cout << (dir / "map.txt").string() << "\n";
        return kExitOk;
    }
    throw UsageError("unknown export kind '" + what + "' (use vertices, full-matrix, reduced-matrix, or map)");
}

int cmd_equiv(const ThetaFlags& theta, const ThetaFlags& theta2, const BudgetFlags& budget) {
    const Isotopism T = theta.build();
    const Isotopism U = theta2.build();
    std::optional<EquivalenceMap> map;
    try {
        map = build_equivalence(T, U);
    } catch (const std::invalid_argument& e) {
        std::cout << "not equivalent: " << e.what() << "\n";
        return kExitMismatch;
    }
    std::cout << describe(*map);
    switch (verify_equivalence(T, U, *map, budget.budget())) {
        case VerifyOutcome::Confirmed:
            std::cout << "verified: solution sets correspond under the map\n";
            return kExitOk;
        case VerifyOutcome::Inconclusive:
            std::cout << "unverified: budget exhausted before both solution sets were enumerated\n";
            return kExitIncomplete;
        case VerifyOutcome::Refuted:
        default:
            std::cout << "refuted: the map does not carry one solution set onto the other\n";
            return kExitMismatch;
    }
}

int cmd_check(const std::string& square_path, const ThetaFlags& theta) {
    std::ifstream in(square_path);
    if (!in) throw UsageError("cannot open square file: " + square_path);
    const LatinSquare L = read_square_text(in);
    ThetaFlags flags = theta;
    if (flags.n == 0) flags.n = L.size();
    const Isotopism T = flags.build();
    if (T.degree() != L.size())
        throw UsageError("square has order " + std::to_string(L.size()) + " but the isotopism has degree " +
                         std::to_string(T.degree()));
    if (is_autotopism(T, L)) {
        std::cout << "yes\n";
        return kExitOk;
    }
    std::cout << "no\n";
    return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin-square symmetry polytopes: counts, dimensions, rank bounds, exports"};
    app.require_subcommand(1);

    ThetaFlags theta, theta2;
    BudgetFlags budget;
    bool json = false, bounds_only = false;
    std::string cache_dir, out_dir = ".", what, square_path;
    std::string tables_path = LATPOLY_TABLES_JSON;
    int table_n = 0;

    CLI::App* count = app.add_subcommand("count", "count the squares compatible with an isotopism");
    count->add_option("-n", theta.n, "order of the squares");
    theta.add_to(*count);
    budget.add_to(*count);
    count->add_flag("--json", json, "machine-readable output");

    CLI::App* row = app.add_subcommand("row", "compute one table row (d, delta, dim, bound)");
    row->add_option("-n", theta.n, "order of the squares");
    theta.add_to(*row);
    budget.add_to(*row);
    row->add_flag("--json", json, "machine-readable output");
    row->add_flag("--bounds-only", bounds_only, "skip enumeration; compute d and bound only");
    row->add_option("--cache-dir", cache_dir, "directory for cached row results");

    CLI::App* table = app.add_subcommand("table", "compute all rows for one order and compare to expectations");
    table->add_option("-n", table_n, "order of the squares")->required();
    budget.add_to(*table);
    table->add_flag("--json", json, "machine-readable output");
    table->add_flag("--bounds-only", bounds_only, "skip enumeration; compute d and bound only");
    table->add_option("--cache-dir", cache_dir, "directory for cached row results");
    table->add_option("--tables", tables_path, "expectations file")->capture_default_str();

    CLI::App* exp = app.add_subcommand("export", "write matrices, vertices, or a relabelling map to files");
    exp->add_option("what", what, "one of: vertices, full-matrix, reduced-matrix, map")->required();
    exp->add_option("-n", theta.n, "order of the squares");
    theta.add_to(*exp);
    theta2.add_to(*exp, "2");
    budget.add_to(*exp);
    exp->add_option("--out", out_dir, "output directory")->capture_default_str();

    CLI::App* equiv = app.add_subcommand("equiv", "build and verify a relabelling between two isotopisms");
    equiv->add_option("-n", theta.n, "order of the squares");
    theta.add_to(*equiv);
    theta2.add_to(*equiv, "2");
    budget.add_to(*equiv);

    CLI::App* check = app.add_subcommand("check", "test whether a square file is compatible with an isotopism");
    check->add_option("square", square_path, "square file: first line n, then n rows")->required();
    check->add_option("-n", theta.n, "degree of the isotopism (defaults to the square's order)");
    theta.add_to(*check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        theta2.n = theta.n;
        if (count->parsed()) return cmd_count(theta, budget, json);
        if (row->parsed()) return cmd_row(theta, budget, json, bounds_only, cache_dir);
        if (table->parsed()) return cmd_table(table_n, budget, json, bounds_only, cache_dir, tables_path);
        if (exp->parsed()) return cmd_export(what, theta, theta2, budget, out_dir);
        if (equiv->parsed()) return cmd_equiv(theta, theta2, budget);
        if (check->parsed()) return cmd_check(square_path, theta);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
