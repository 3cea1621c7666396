#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "incfree/design.hpp"
#include "incfree/matching.hpp"
#include "incfree/validation.hpp"

namespace incfree {

/// Equinumerous incidence-free pair: a point set and a block set of equal
/// size with no point of the first lying on a block of the second. Both
/// lists are sorted and duplicate-free.
struct IncidenceFreePair {
    std::vector<std::size_t> points;
    std::vector<std::size_t> blocks;

    std::size_t size() const noexcept { return points.size(); }
    bool operator==(const IncidenceFreePair&) const = default;
};

/// Incident (point, block) pair of the design.
struct Edge {
    std::size_t point;
    std::size_t block;

    auto operator<=>(const Edge&) const = default;
};

/// Sorts and validates the pair. Throws Error(OutOfRange), Error(DuplicateIndex),
/// Error(NotEquinumerous), or Error(IncidenceFound) with witness {point, block}.
IncidenceFreePair check_pair(const SymmetricDesign& design, std::vector<std::size_t> points,
                             std::vector<std::size_t> blocks);

/// Bijection from the removed points onto the removed blocks.
using Bijection = std::vector<std::pair<std::size_t, std::size_t>>;

/// Pairs the i-th smallest removed point with the i-th smallest removed block.
Bijection build_phi(const IncidenceFreePair& pair);
/// Uniformly random bijection, reproducible from `seed`.
Bijection random_phi(const IncidenceFreePair& pair, std::uint64_t seed);

/// A design with a removed pair and a chosen bijection. The design must
/// outlive the context.
class RemovedContext {
public:
    /// Throws Error(InvalidDesign) if `phi` is not a bijection between exactly
    /// the removed points and the removed blocks.
    RemovedContext(const SymmetricDesign& design, IncidenceFreePair pair, Bijection phi);
    RemovedContext(const SymmetricDesign& design, IncidenceFreePair pair);

    const SymmetricDesign& design() const noexcept { return *design_; }
    const IncidenceFreePair& pair() const noexcept { return pair_; }
    const Bijection& phi() const noexcept { return phi_; }

    bool point_removed(std::size_t p) const noexcept { return removed_points_.test(p); }
    bool block_removed(std::size_t b) const noexcept { return removed_blocks_.test(b); }
    /// Image of a removed point; throws Error(NotInX) otherwise.
    std::size_t image_of(std::size_t point) const;

    std::vector<std::size_t> surviving_points() const;
    std::vector<std::size_t> surviving_blocks() const;

private:
    const SymmetricDesign* design_;
    IncidenceFreePair pair_;
    Bijection phi_;
    Bitset removed_points_;
    Bitset removed_blocks_;
};

/// The local graph around a removed point x: left vertices are the blocks
/// through x, right vertices the points on its image block, joined when
/// incident. `blocks[i]` and `points[j]` give the design indices.
struct LocalGraph {
    std::size_t removed_point;
    std::size_t image_block;
    std::vector<std::size_t> blocks;
    std::vector<std::size_t> points;
    BipartiteGraph graph;
};

LocalGraph local_graph(const RemovedContext& ctx, std::size_t x);

struct LocalMatching {
    std::size_t removed_point;
    std::size_t image_block;
    std::vector<Edge> edges;  // sorted
};

enum class LocalMatchingMethod {
    Automatic,  ///< direct when lambda = 1, generic otherwise
    Generic,    ///< perfect_matching_regular on every local graph
    Direct,     ///< block -> its unique point on the image block; lambda = 1 only
};

/// One perfect matching per removed point, in increasing point order.
std::vector<LocalMatching> local_matchings(const RemovedContext& ctx,
                                           LocalMatchingMethod method = LocalMatchingMethod::Automatic);

/// Edge weights w(e) = (1 + #{x : e in M_x}) / k on the surviving incidence
/// graph, stored as integer numerators over the common denominator k.
struct EdgeWeighting {
    std::size_t denominator = 1;
    std::map<Edge, std::size_t> numerators;

    /// Sum of all numerators; total weight is this over `denominator`.
    std::size_t total_numerator() const;
};

/// Throws Error(InconsistentMatchings) when a local matching edge is not an
/// edge of the surviving incidence graph.
EdgeWeighting edge_weights(const RemovedContext& ctx, const std::vector<LocalMatching>& local);

/// Passes iff the weighting covers exactly the surviving incidences and every
/// surviving point and block has weight exactly 1.
ValidationReport verify_fractional(const RemovedContext& ctx, const EdgeWeighting& weights);

/// Surviving incidence graph: left = surviving points, right = surviving
/// blocks, both in increasing index order.
struct SurvivingGraph {
    std::vector<std::size_t> points;
    std::vector<std::size_t> blocks;
    BipartiteGraph graph;
};

SurvivingGraph surviving_graph(const RemovedContext& ctx);

/// Every intermediate object of the construction, for inspection.
struct MatchingReplay {
    std::vector<LocalMatching> local;
    EdgeWeighting weights;
    ValidationReport fractional;
    std::vector<Edge> matching;  // sorted by point
};

/// Local matchings, edge weights, fractional check, then a maximum matching
/// of the surviving graph. Throws Error(FractionalCheckFailed) or
/// Error(NotPerfect); neither happens for a valid design and pair.
MatchingReplay replay_perfect_matching(const RemovedContext& ctx,
                                       LocalMatchingMethod method = LocalMatchingMethod::Automatic);

/// Perfect matching between the surviving points and blocks.
std::vector<Edge> construct_perfect_matching(const RemovedContext& ctx);

}  // namespace incfree
