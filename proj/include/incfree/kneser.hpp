#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "incfree/design.hpp"
#include "incfree/pair_matching.hpp"
#include "incfree/validation.hpp"

namespace incfree {

/// Incident point-line pair (a flag) of a projective plane.
struct Chamber {
    std::size_t point;
    std::size_t line;

    auto operator<=>(const Chamber&) const = default;
};

/// All chambers ordered by (point, line). Throws Error(NotAPlane) unless
/// lambda = 1.
std::vector<Chamber> chambers(const SymmetricDesign& plane);

/// Opposite flags: neither point lies on the other chamber's line.
bool adjacent(const SymmetricDesign& plane, Chamber a, Chamber b);

struct ColoredChamber {
    Chamber chamber;
    std::size_t color;
};

/// Coloring of the flag Kneser graph by chamber cocliques: color i is
/// contained in the set of chambers sharing the point or the line of
/// anchors[i].
struct ChamberColoring {
    static constexpr std::size_t uncolored = static_cast<std::size_t>(-1);

    std::vector<Chamber> anchors;
    std::vector<ColoredChamber> assignment;

    std::size_t color_count() const noexcept { return anchors.size(); }
};

/// Colors every chamber with the anchor sharing its point if there is one,
/// otherwise the smallest-index anchor sharing its line, otherwise
/// `uncolored`.
ChamberColoring assign_colors(const SymmetricDesign& plane, std::vector<Chamber> anchors);

/// Anchors are the perfect matching of the plane with the pair removed, so
/// the coloring uses v - |pair| colors.
ChamberColoring coloring_from_pair(const SymmetricDesign& plane, const IncidenceFreePair& pair);

/// Points and lines missing from the anchors. Throws Error(NotCovering) with
/// the first violation's witness if the coloring does not verify. If anchors
/// repeat a point or line the larger side is truncated to keep the pair
/// equinumerous.
IncidenceFreePair pair_from_coloring(const SymmetricDesign& plane, const ChamberColoring& coloring);

/// Anchors are chambers, every chamber is colored exactly once, each color
/// agrees with its anchor, and no two adjacent chambers share a color.
ValidationReport verify_coloring(const SymmetricDesign& plane, const ChamberColoring& coloring);

enum class CocliqueKind { Chamber, Triangular, Other };

std::string_view to_string(CocliqueKind kind);

struct ClassifiedCoclique {
    std::vector<Chamber> members;  // sorted
    CocliqueKind kind = CocliqueKind::Other;
    /// Chamber kind: the defining chamber (point, line). Triangular kind: the
    /// three points.
    std::vector<std::size_t> witness;
};

bool is_coclique(const SymmetricDesign& plane, const std::vector<Chamber>& members);

/// Chambers through the chamber's point or on its line; 2q+1 of them.
std::vector<Chamber> chamber_coclique(const SymmetricDesign& plane, Chamber c);

ClassifiedCoclique classify_coclique(const SymmetricDesign& plane, std::vector<Chamber> members);

/// Every maximal coclique, by Bron-Kerbosch on the complement of the flag
/// graph. Throws Error(TooLarge) when the plane has more than
/// min(max_chambers, 64) chambers.
std::vector<ClassifiedCoclique> enumerate_maximal_cocliques(const SymmetricDesign& plane,
                                                            std::size_t max_chambers = 64);

/// Random maximal cocliques grown greedily from random start chambers.
std::vector<ClassifiedCoclique> sample_maximal_cocliques(const SymmetricDesign& plane, std::size_t samples,
                                                         std::uint64_t seed);

/// Exact chromatic number of the flag Kneser graph by DSATUR branch and
/// bound. Only planes of order 2 are accepted (Error(TooLarge) otherwise);
/// Error(BudgetExhausted) after `node_budget` nodes.
std::size_t chromatic_number_exact(const SymmetricDesign& plane, std::uint64_t node_budget = 50'000'000);

struct ChiBounds {
    double lower;       ///< (q+1)(q+1-sqrt(q))
    std::size_t upper;  ///< q^2+1
    /// Asymptotic upper bound, reported but not evaluated.
    std::string asymptotic_upper;
};

ChiBounds chi_bounds(std::size_t q);

}  // namespace incfree
