#pragma once

// Table rows: the per-symmetry-class record (reduced coordinate count, rank
// bound, solution count, polytope dimension), computation of a row from
// scratch under a budget, comparison against bundled expected values, and a
// JSON-file cache keyed by the cycle-structure triple.

#include <json.hpp>

#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/enumeration.hpp"
#include "latpoly/exact_linalg.hpp"
#include "latpoly/reduction.hpp"

namespace latpoly {

inline constexpr const char* kToolVersion = "0.1.0";

// One row of the class table. The published tables also carry a lower-bound
// column obtained from an explicit construction; it is intentionally not
// modeled or reproduced here.
struct TableRow {
    int n = 0;
    CycleStructure la, lb, lc;
    long long d = 0;
    std::optional<long long> delta;  // number of compatible squares, if known
    std::optional<int> dim;          // affine dimension of their convex hull, if known
    int bound = 0;                   // d - rank of the reduced system

    bool operator==(const TableRow&) const = default;
};

// Counts by cycle length 1..n, as stored in JSON.
inline std::vector<int> structure_counts(const CycleStructure& s) {
    return std::vector<int>(s.counts.begin() + 1, s.counts.end());
}

inline std::string counts_key(const CycleStructure& s) {
    std::string out;
    for (int len = 1; len <= s.degree; ++len) {
        if (len > 1) out += '.';
        out += std::to_string(s.counts[static_cast<size_t>(len)]);
    }
    return out;
}

struct RowOptions {
    Budget budget;            // limits the enumeration phase
    bool want_delta = true;   // enumerate and count
    bool want_dim = true;     // stream the affine span of the vertices
};

struct RowComputation {
    TableRow row;
    int rank = 0;
    bool delta_complete = false;  // enumeration visited every solution
    bool dim_known = false;       // span saturated the bound, or enumeration completed
    long long nodes = 0;
    double seconds = 0.0;
};

// Compute a row for the given isotopism. d, rank and bound are always exact;
// delta and dim are filled as the options and budget allow. The affine span
// stops absorbing points once it saturates the rank bound (the dimension is
// then settled), so a completed count is never slowed down by span updates.
inline RowComputation compute_row(const Isotopism& T, const RowOptions& opt = {}) {
    RowComputation out;
    out.row.n = T.degree();
    out.row.la = cycle_structure(T.alpha);
    out.row.lb = cycle_structure(T.beta);
    out.row.lc = cycle_structure(T.gamma);

    const ReductionContext ctx(T);
    out.row.d = ctx.index_map.size();
    out.rank = exact_rank(reduced_system(ctx));
    out.row.bound = static_cast<int>(out.row.d) - out.rank;

    if (!opt.want_delta && !opt.want_dim) return out;

    AffineBasis span(ctx.index_map.size());
    bool saturated = false;
    const EnumerationResult r = enumerate_vertices(ctx, opt.budget, [&](const std::vector<uint8_t>& x) {
        if (opt.want_dim && !saturated) {
            span.add(x);
            if (span.dimension() >= out.row.bound) saturated = true;
            if (saturated && !opt.want_delta) return false;  // nothing left to learn
        }
        return true;
    });
    out.nodes = r.nodes;
    out.seconds = r.seconds;
    out.delta_complete = r.complete;
    if (r.complete && opt.want_delta) out.row.delta = r.delta;
    if (opt.want_dim && (r.complete || saturated)) {
        out.dim_known = true;
        out.row.dim = span.dimension();  // -1 when there are no solutions at all
    }
    return out;
}

inline RowComputation compute_row(const CycleStructure& la, const CycleStructure& lb, const CycleStructure& lc,
                                  const RowOptions& opt = {}) {
    return compute_row(representative_isotopism(la, lb, lc), opt);
}

// ---- serialization ----------------------------------------------------

// The canonical JSON record of a row: fixed key order, null for unknowns.
inline nlohmann::ordered_json row_to_json(const TableRow& row) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["l_alpha"] = structure_counts(row.la);
    j["l_beta"] = structure_counts(row.lb);
    j["l_gamma"] = structure_counts(row.lc);
    j["d_theta"] = row.d;
    if (row.delta)
        j["delta"] = *row.delta;
    else
        j["delta"] = nullptr;
    if (row.dim)
        j["dim"] = *row.dim;
    else
        j["dim"] = nullptr;
    j["bound"] = row.bound;
    return j;
}

inline std::string structure_text(const CycleStructure& s) {
    std::string out = "(";
    for (int len = 1; len <= s.degree; ++len) {
        if (len > 1) out += ',';
        out += std::to_string(s.counts[static_cast<size_t>(len)]);
    }
    return out + ")";
}

// Aligned single-line text form; unknowns print as "-".
inline std::string row_to_text(const TableRow& row) {
    std::ostringstream out;
    out << "n=" << row.n << "  a=" << structure_text(row.la) << "  b=" << structure_text(row.lb)
        << "  c=" << structure_text(row.lc) << "  d=" << row.d << "  delta=";
    if (row.delta)
        out << *row.delta;
    else
        out << '-';
    out << "  dim=";
    if (row.dim)
        out << *row.dim;
    else
        out << '-';
    out << "  bound=" << row.bound;
    return out.str();
}

// ---- bundled expectations ----------------------------------------------

inline TableRow row_from_json(const nlohmann::json& j) {
    TableRow row;
    row.n = j.at("n").get<int>();
    row.la = make_cycle_structure(row.n, j.at("l_alpha").get<std::vector<int>>());
    row.lb = make_cycle_structure(row.n, j.at("l_beta").get<std::vector<int>>());
    row.lc = make_cycle_structure(row.n, j.at("l_gamma").get<std::vector<int>>());
    row.d = j.at("d_theta").get<long long>();
    if (!j.at("delta").is_null()) row.delta = j.at("delta").get<long long>();
    if (!j.at("dim").is_null()) row.dim = j.at("dim").get<int>();
    row.bound = j.at("bound").get<int>();
    return row;
}

inline std::vector<TableRow> load_expected_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open expectations file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<TableRow> rows;
    for (const nlohmann::json& j : doc.at("rows")) rows.push_back(row_from_json(j));
    return rows;
}

// Mismatches between a computed row and expected values; empty means every
// value the expectation states (and the computation settled) agrees. An
// unknown on either side is never a mismatch by itself.
inline std::vector<std::string> compare_row(const TableRow& expected, const RowComputation& got) {
    std::vector<std::string> bad;
    auto complain = [&](const std::string& what, long long want, long long have) {
        bad.push_back(what + ": expected " + std::to_string(want) + ", computed " + std::to_string(have));
    };
    if (expected.d != got.row.d) complain("d_theta", expected.d, got.row.d);
    if (expected.bound != got.row.bound) complain("bound", expected.bound, got.row.bound);
    if (expected.delta && got.row.delta && *expected.delta != *got.row.delta)
        complain("delta", *expected.delta, *got.row.delta);
    if (expected.dim && got.row.dim && *expected.dim != *got.row.dim) complain("dim", *expected.dim, *got.row.dim);
    return bad;
}

// ---- cache ---------------------------------------------------------------

// One JSON file per (n, structure triple); an entry is reused when the tool
// version matches and the stored computation covers what is being asked for
// (settled values cover everything; an unsettled value only covers a request
// made under the same budget, which would do no better).
class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    std::string path_for(const CycleStructure& la, const CycleStructure& lb, const CycleStructure& lc) const {
        return (std::filesystem::path(dir_) /
                ("n" + std::to_string(la.degree) + "-a" + counts_key(la) + "-b" + counts_key(lb) + "-c" +
                 counts_key(lc) + ".json"))
            .string();
    }

    std::optional<RowComputation> load(const CycleStructure& la, const CycleStructure& lb,
                                       const CycleStructure& lc, const RowOptions& opt) const {
        std::ifstream in(path_for(la, lb, lc));
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;
        }
        if (!j.is_object() || !j.contains("version") || j["version"] != kToolVersion) return std::nullopt;
        RowComputation got;
        try {
            got.row = row_from_json(j.at("row"));
            got.rank = j.at("rank").get<int>();
            got.delta_complete = j.at("delta_complete").get<bool>();
            got.dim_known = j.at("dim_known").get<bool>();
            got.nodes = j.at("nodes").get<long long>();
            got.seconds = j.at("seconds").get<double>();
            const nlohmann::json& b = j.at("budget");
            const bool same_budget = b.at("max_nodes").get<long long>() == opt.budget.max_nodes &&
                                     b.at("max_secs").get<double>() == opt.budget.max_secs;
            const bool delta_covered = !opt.want_delta || got.delta_complete || same_budget;
            const bool dim_covered = !opt.want_dim || got.dim_known || same_budget;
            if (!delta_covered || !dim_covered) return std::nullopt;
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;
        }
        return got;
    }

    void store(const RowComputation& got, const RowOptions& opt) const {
        std::filesystem::create_directories(dir_);
        nlohmann::ordered_json j;
        j["version"] = kToolVersion;
        j["created"] = static_cast<long long>(std::time(nullptr));
        j["budget"] = {{"max_nodes", opt.budget.max_nodes}, {"max_secs", opt.budget.max_secs}};
        j["row"] = row_to_json(got.row);
        j["rank"] = got.rank;
        j["delta_complete"] = got.delta_complete;
        j["dim_known"] = got.dim_known;
        j["nodes"] = got.nodes;
        j["seconds"] = got.seconds;
        std::ofstream out(path_for(got.row.la, got.row.lb, got.row.lc));
        out << j.dump(2) << "\n";
    }

private:
    std::string dir_;
};

}  // namespace latpoly
