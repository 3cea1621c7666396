#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace incfree {

/// Bipartite graph with left vertices 0..left_count-1 and right vertices
/// 0..right_count-1. Neighbour lists are sorted and duplicate-free.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t left_count, std::size_t right_count);
    /// Sorts each list; throws Error(OutOfRange) for a neighbour >= right_count
    /// and Error(DuplicateIndex) for a repeated neighbour.
    BipartiteGraph(std::size_t right_count, std::vector<std::vector<std::size_t>> adjacency);

    std::size_t left_count() const noexcept { return adjacency_.size(); }
    std::size_t right_count() const noexcept { return right_count_; }
    std::size_t edge_count() const noexcept;

    const std::vector<std::size_t>& neighbors(std::size_t left) const noexcept { return adjacency_[left]; }
    bool has_edge(std::size_t left, std::size_t right) const noexcept;
    std::vector<std::size_t> right_degrees() const;

    /// Inserts keeping the list sorted; no-op if the edge exists.
    void add_edge(std::size_t left, std::size_t right);

private:
    std::size_t right_count_ = 0;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Partial injective map from left to right vertices.
class Matching {
public:
    static constexpr std::size_t unmatched = static_cast<std::size_t>(-1);

    Matching() = default;
    Matching(std::size_t left_count, std::size_t right_count)
        : right_of_(left_count, unmatched), left_of_(right_count, unmatched) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t right_of(std::size_t left) const noexcept { return right_of_[left]; }
    std::size_t left_of(std::size_t right) const noexcept { return left_of_[right]; }

    /// Pairs `left` with `right`, dropping any previous partner of either.
    void match(std::size_t left, std::size_t right);

    /// (left, right) pairs in increasing left order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    /// Injective, every pair an edge of `graph`.
    bool is_valid_for(const BipartiteGraph& graph) const;
    bool is_left_perfect() const noexcept { return size_ == right_of_.size(); }
    bool is_perfect() const noexcept { return size_ == right_of_.size() && size_ == left_of_.size(); }

private:
    std::vector<std::size_t> right_of_;
    std::vector<std::size_t> left_of_;
    std::size_t size_ = 0;
};

/// Maximum-cardinality matching by Hopcroft-Karp phases. Neighbours are
/// scanned in index order, so the result is deterministic.
Matching maximum_matching(const BipartiteGraph& graph);

/// A set W of left vertices with |W| > |N(W)|, or nullopt when a left-perfect
/// matching exists. W is the set of left vertices reachable by alternating
/// paths from the unmatched left vertices of a maximum matching, so
/// |W| - |N(W)| equals the number of unmatched left vertices.
std::optional<std::vector<std::size_t>> hall_violator(const BipartiteGraph& graph);

/// Right neighbourhood of a set of left vertices, sorted.
std::vector<std::size_t> neighborhood(const BipartiteGraph& graph, const std::vector<std::size_t>& left);

/// Perfect matching of a `degree`-regular balanced bipartite graph.
/// Throws Error(NotRegular) if the graph is unbalanced or any vertex has a
/// different degree.
Matching perfect_matching_regular(const BipartiteGraph& graph, std::size_t degree);

}  // namespace incfree
