#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "incfree/design.hpp"
#include "incfree/matching.hpp"
#include "incfree/pair_matching.hpp"

namespace incfree {

/// Free choices of the grid construction in a plane of order 5.
struct GridRecipeChoices {
    std::size_t center;                  ///< P
    std::size_t base_line;               ///< g, not through P
    std::array<std::size_t, 6> pencil;   ///< l1..l6, the lines through P
    std::size_t first_secant;            ///< g1, through Q = g ^ l1
    std::size_t second_secant;           ///< g2, through Q

    bool operator==(const GridRecipeChoices&) const = default;
};

struct GridConstruction {
    GridRecipeChoices choices;
    std::size_t corner;         ///< Q = g ^ l1
    std::size_t closing_line;   ///< g3, joining g1 ^ l2 and g2 ^ l3
    IncidenceFreePair pair;
    /// Surviving points on l1, l2, l3 after removing only l4, l5, l6, g.
    std::array<std::size_t, 3> survivors_before_secants;
    /// Surviving points on l1, l2, l3 at the end; 3, 2, 2.
    std::array<std::size_t, 3> survivors;
};

/// Lexicographically first valid choices. Throws Error(NotOrderFive).
GridRecipeChoices default_grid_choices(const SymmetricDesign& plane);
/// Uniformly random valid choices, reproducible from `seed`.
GridRecipeChoices random_grid_choices(const SymmetricDesign& plane, std::uint64_t seed);

/// Removes Y = {l4, l5, l6, g, g1, g2, g3} and keeps as X the points of
/// l1, l2, l3 on no line of Y. Throws Error(NotOrderFive) or
/// Error(InvalidChoices) naming the violated constraint.
GridConstruction build_q5_grid(const SymmetricDesign& plane, const GridRecipeChoices& choices);

IncidenceFreePair q5_grid_pair(const SymmetricDesign& plane,
                               const std::optional<GridRecipeChoices>& choices = std::nullopt);

/// Largest edge count accepted by edge_domination_number.
inline constexpr std::size_t max_edge_domination_edges = 24;

/// Minimum number of edges such that every edge shares an endpoint with one
/// of them, by exhaustive search over subsets of increasing size. Throws
/// Error(TooLarge) above max_edge_domination_edges edges and
/// Error(BudgetExhausted) after `budget` subsets.
std::size_t edge_domination_number(const BipartiteGraph& graph, std::uint64_t budget = UINT64_MAX);
/// Same, on the incidence graph of the design.
std::size_t edge_domination_number(const SymmetricDesign& design, std::uint64_t budget = UINT64_MAX);

}  // namespace incfree
