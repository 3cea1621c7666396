#include "incfree/report.hpp"

#include <cmath>
#include <cstdio>

#include "incfree/galois_field.hpp"

namespace incfree {

namespace {

bool is_square(std::size_t q) {
    const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(q))));
    return r * r == q;
}

}  // namespace

std::vector<std::string> row_issues(const TableRow& row) {
    std::vector<std::string> issues;
    const auto q = row.q;
    const auto v = q * q + q + 1;
    if (row.alpha_found > haemers_bound_floor(q))
        issues.push_back("found pair exceeds the Haemers bound");
    if (row.alpha_table) {
        if (row.mode == SearchMode::Exact && row.alpha_found != *row.alpha_table)
            issues.push_back("exact value differs from the table");
        if (row.mode == SearchMode::Heuristic && row.alpha_found > *row.alpha_table)
            issues.push_back("found pair of size " + std::to_string(row.alpha_found) + " exceeds the table value " +
                             std::to_string(*row.alpha_table));
    }
    // A found pair always yields a coloring with v - alpha_found colors.
    if (static_cast<double>(v - row.alpha_found) + 1e-9 < row.bounds.lower)
        issues.push_back("implied coloring beats the lower bound on chi");
    if (row.mode == SearchMode::Exact && row.chi_implied > row.bounds.upper)
        issues.push_back("exact chi exceeds q^2+1");
    return issues;
}

std::vector<TableRow> build_table(const TableOptions& options) {
    std::vector<TableRow> rows;
    for (std::size_t q = 2; q <= options.max_q; ++q) {
        if (prime_power_decomposition(q).first == 0) continue;
        const auto plane = build_pg2(q);
        TableRow row;
        row.q = q;
        row.bounds = chi_bounds(q);
        row.haemers = haemers_bound(q);
        row.alpha_table = alpha_from_table(q);

        PairCertificate cert;
        if (q <= options.exact_up_to) {
            try {
                cert = max_pair_exact(plane, options.search);
            } catch (const BudgetExhausted& e) {
                cert = e.best();
                row.issues.push_back("exact search exhausted its budget");
            }
        } else {
            cert = greedy_pair(plane, options.search.seed, options.greedy_restarts);
        }
        check_pair(plane, cert.pair.points, cert.pair.blocks);
        row.alpha_found = cert.size();
        row.mode = cert.mode;
        row.chi_implied = plane.v() - cert.size();
        row.haemers_equal = is_square(q) && row.alpha_found == haemers_bound_floor(q);
        for (auto& issue : row_issues(row)) row.issues.push_back(std::move(issue));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%3s %10s %6s %9s %7s %7s %-9s %6s %s\n", "q", "chi_lower", "chi_up", "haemers",
                  "a_table", "a_found", "mode", "chi", "notes");
    out += buf;
    for (const auto& r : rows) {
        const std::string table = r.alpha_table ? std::to_string(*r.alpha_table) : "-";
        // Heuristic rows only give an upper bound on chi.
        const std::string chi = (r.mode == SearchMode::Exact ? "" : "<=") + std::to_string(r.chi_implied);
        std::string notes = r.haemers_equal ? "haemers-equality" : "";
        for (const auto& issue : r.issues) notes += (notes.empty() ? "ERROR: " : "; ERROR: ") + issue;
        std::snprintf(buf, sizeof buf, "%3zu %10.3f %6zu %9.3f %7s %7zu %-9s %6s %s\n", r.q, r.bounds.lower,
                      r.bounds.upper, r.haemers, table.c_str(), r.alpha_found, std::string(to_string(r.mode)).c_str(),
                      chi.c_str(), notes.c_str());
        out += buf;
    }
    if (!rows.empty())
        out += "asymptotic upper bound on chi: " + rows.front().bounds.asymptotic_upper + '\n';
    return out;
}

}  // namespace incfree
