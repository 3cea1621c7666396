#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "incfree/incidence_free.hpp"
#include "incfree/kneser.hpp"

namespace incfree {

/// One row of the chi / incidence-free-number comparison table.
struct TableRow {
    std::size_t q = 0;
    ChiBounds bounds{};
    double haemers = 0.0;
    std::optional<std::size_t> alpha_table;
    std::size_t alpha_found = 0;
    SearchMode mode = SearchMode::Heuristic;
    std::size_t chi_implied = 0;  ///< q^2+q+1 - alpha_found
    bool haemers_equal = false;   ///< q square and alpha_found attains the bound
    std::vector<std::string> issues;
};

struct TableOptions {
    std::size_t max_q = 13;
    std::size_t exact_up_to = 5;
    SearchConfig search;
    std::size_t greedy_restarts = 64;
};

/// Builds a row for every prime power 2 <= q <= max_q: exact search up to
/// exact_up_to, greedy above. Every pair found is checked with check_pair.
std::vector<TableRow> build_table(const TableOptions& options);

/// Checks a single row's consistency (Haemers bound, table value, chi bounds)
/// and returns the issues found.
std::vector<std::string> row_issues(const TableRow& row);

std::string format_table(const std::vector<TableRow>& rows);

}  // namespace incfree
