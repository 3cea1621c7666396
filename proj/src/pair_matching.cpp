#include "incfree/pair_matching.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "incfree/error.hpp"

namespace incfree {

namespace {

void sort_unique_in_range(std::vector<std::size_t>& idx, std::size_t v, const char* what) {
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= v) throw Error(ErrorKind::OutOfRange, std::string(what) + " index out of range", {idx[i]});
        if (i > 0 && idx[i] == idx[i - 1])
            throw Error(ErrorKind::DuplicateIndex, std::string("repeated ") + what, {idx[i]});
    }
}

}  // namespace

IncidenceFreePair check_pair(const SymmetricDesign& design, std::vector<std::size_t> points,
                             std::vector<std::size_t> blocks) {
    sort_unique_in_range(points, design.v(), "point");
    sort_unique_in_range(blocks, design.v(), "block");
    if (points.size() != blocks.size())
        throw Error(ErrorKind::NotEquinumerous,
                    std::to_string(points.size()) + " points vs " + std::to_string(blocks.size()) + " blocks",
                    {points.size(), blocks.size()});
    for (auto p : points) {
        for (auto b : blocks) {
            if (design.incident(p, b))
                throw Error(ErrorKind::IncidenceFound,
                            "point " + std::to_string(p) + " lies on block " + std::to_string(b), {p, b});
        }
    }
    return {std::move(points), std::move(blocks)};
}

Bijection build_phi(const IncidenceFreePair& pair) {
    Bijection phi;
    phi.reserve(pair.size());
    for (std::size_t i = 0; i < pair.size(); ++i) phi.emplace_back(pair.points[i], pair.blocks[i]);
    return phi;
}

Bijection random_phi(const IncidenceFreePair& pair, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto blocks = pair.blocks;
    std::shuffle(blocks.begin(), blocks.end(), rng);
    Bijection phi;
    phi.reserve(pair.size());
    for (std::size_t i = 0; i < pair.size(); ++i) phi.emplace_back(pair.points[i], blocks[i]);
    return phi;
}

RemovedContext::RemovedContext(const SymmetricDesign& design, IncidenceFreePair pair, Bijection phi)
    : design_(&design), pair_(std::move(pair)), phi_(std::move(phi)), removed_points_(design.v()),
      removed_blocks_(design.v()) {
    for (auto p : pair_.points) removed_points_.set(p);
    for (auto b : pair_.blocks) removed_blocks_.set(b);
    std::sort(phi_.begin(), phi_.end());
    if (phi_.size() != pair_.size())
        throw Error(ErrorKind::InvalidDesign, "bijection size differs from pair size");
    Bitset images(design.v());
    for (std::size_t i = 0; i < phi_.size(); ++i) {
        const auto [x, b] = phi_[i];
        if (x != pair_.points[i] || !removed_blocks_.test(b) || images.test(b))
            throw Error(ErrorKind::InvalidDesign, "mapping is not a bijection between the removed sets", {x, b});
        images.set(b);
    }
}

RemovedContext::RemovedContext(const SymmetricDesign& design, IncidenceFreePair pair)
    : RemovedContext(design, pair, build_phi(pair)) {}

std::size_t RemovedContext::image_of(std::size_t point) const {
    auto it = std::lower_bound(phi_.begin(), phi_.end(), std::pair<std::size_t, std::size_t>{point, 0});
    if (it == phi_.end() || it->first != point)
        throw Error(ErrorKind::NotInX, "point " + std::to_string(point) + " is not removed", {point});
    return it->second;
}

std::vector<std::size_t> RemovedContext::surviving_points() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < design_->v(); ++p)
        if (!removed_points_.test(p)) out.push_back(p);
    return out;
}

std::vector<std::size_t> RemovedContext::surviving_blocks() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < design_->v(); ++b)
        if (!removed_blocks_.test(b)) out.push_back(b);
    return out;
}

LocalGraph local_graph(const RemovedContext& ctx, std::size_t x) {
    const auto image = ctx.image_of(x);
    const auto& d = ctx.design();
    LocalGraph h{x, image, d.blocks_through(x).indices(), d.points_on(image).indices(), {}};
    std::vector<std::vector<std::size_t>> adjacency(h.blocks.size());
    for (std::size_t i = 0; i < h.blocks.size(); ++i)
        for (std::size_t j = 0; j < h.points.size(); ++j)
            if (d.incident(h.points[j], h.blocks[i])) adjacency[i].push_back(j);
    h.graph = BipartiteGraph(h.points.size(), std::move(adjacency));
    return h;
}

std::vector<LocalMatching> local_matchings(const RemovedContext& ctx, LocalMatchingMethod method) {
    const auto& d = ctx.design();
    if (method == LocalMatchingMethod::Automatic)
        method = d.lambda() == 1 ? LocalMatchingMethod::Direct : LocalMatchingMethod::Generic;
    if (method == LocalMatchingMethod::Direct && d.lambda() != 1)
        throw Error(ErrorKind::NotRegular, "direct local matchings need lambda = 1");

    std::vector<LocalMatching> out;
    out.reserve(ctx.pair().size());
    for (const auto& [x, image] : ctx.phi()) {
        LocalMatching lm{x, image, {}};
        if (method == LocalMatchingMethod::Direct) {
            d.blocks_through(x).for_each([&](std::size_t block) {
                Bitset meet = d.points_on(block);
                meet &= d.points_on(image);
                if (meet.count() != 1)
                    throw Error(ErrorKind::NotRegular, "blocks do not meet in exactly one point", {block, image});
                lm.edges.push_back({meet.find_first(), block});
            });
        } else {
            const auto h = local_graph(ctx, x);
            const auto m = perfect_matching_regular(h.graph, d.lambda());
            for (const auto& [i, j] : m.pairs()) lm.edges.push_back({h.points[j], h.blocks[i]});
        }
        std::sort(lm.edges.begin(), lm.edges.end());
        out.push_back(std::move(lm));
    }
    return out;
}

std::size_t EdgeWeighting::total_numerator() const {
    std::size_t total = 0;
    for (const auto& [edge, n] : numerators) total += n;
    return total;
}

EdgeWeighting edge_weights(const RemovedContext& ctx, const std::vector<LocalMatching>& local) {
    const auto& d = ctx.design();
    EdgeWeighting w;
    w.denominator = d.k();
    for (auto p : ctx.surviving_points()) {
        d.blocks_through(p).for_each([&](std::size_t b) {
            if (!ctx.block_removed(b)) w.numerators.emplace(Edge{p, b}, 1);
        });
    }
    for (const auto& lm : local) {
        for (const auto& e : lm.edges) {
            auto it = w.numerators.find(e);
            if (it == w.numerators.end())
                throw Error(ErrorKind::InconsistentMatchings, "local matching edge outside the surviving graph",
                            {e.point, e.block});
            ++it->second;
        }
    }
    return w;
}

ValidationReport verify_fractional(const RemovedContext& ctx, const EdgeWeighting& w) {
    const auto& d = ctx.design();
    ValidationReport report;
    std::vector<std::size_t> point_sum(d.v(), 0), block_sum(d.v(), 0);
    for (const auto& [e, n] : w.numerators) {
        if (e.point >= d.v() || e.block >= d.v() || ctx.point_removed(e.point) || ctx.block_removed(e.block) ||
            !d.incident(e.point, e.block)) {
            report.add("non-edge", {e.point, e.block}, "weight on a pair outside the surviving graph");
            continue;
        }
        point_sum[e.point] += n;
        block_sum[e.block] += n;
    }
    const auto survivors = ctx.surviving_points();
    for (auto p : survivors) {
        d.blocks_through(p).for_each([&](std::size_t b) {
            if (!ctx.block_removed(b) && !w.numerators.contains(Edge{p, b}))
                report.add("missing-edge", {p, b}, "surviving incidence without weight");
        });
    }
    for (auto p : survivors) {
        if (point_sum[p] != w.denominator)
            report.add("point-weight", {p},
                       std::to_string(point_sum[p]) + "/" + std::to_string(w.denominator) + " != 1");
    }
    for (auto b : ctx.surviving_blocks()) {
        if (block_sum[b] != w.denominator)
            report.add("block-weight", {b},
                       std::to_string(block_sum[b]) + "/" + std::to_string(w.denominator) + " != 1");
    }
    return report;
}

SurvivingGraph surviving_graph(const RemovedContext& ctx) {
    const auto& d = ctx.design();
    SurvivingGraph g{ctx.surviving_points(), ctx.surviving_blocks(), {}};
    std::vector<std::size_t> block_pos(d.v(), 0);
    for (std::size_t j = 0; j < g.blocks.size(); ++j) block_pos[g.blocks[j]] = j;
    std::vector<std::vector<std::size_t>> adjacency(g.points.size());
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        d.blocks_through(g.points[i]).for_each([&](std::size_t b) {
            if (!ctx.block_removed(b)) adjacency[i].push_back(block_pos[b]);
        });
    }
    g.graph = BipartiteGraph(g.blocks.size(), std::move(adjacency));
    return g;
}

MatchingReplay replay_perfect_matching(const RemovedContext& ctx, LocalMatchingMethod method) {
    MatchingReplay r;
    r.local = local_matchings(ctx, method);
    r.weights = edge_weights(ctx, r.local);
    r.fractional = verify_fractional(ctx, r.weights);
    if (!r.fractional.passed())
        throw Error(ErrorKind::FractionalCheckFailed, r.fractional.summary(),
                    r.fractional.violations.front().witness);

    const auto g = surviving_graph(ctx);
    const auto m = maximum_matching(g.graph);
    if (!m.is_perfect())
        throw Error(ErrorKind::NotPerfect, "surviving graph matching has size " + std::to_string(m.size()),
                    {m.size(), g.points.size()});
    for (const auto& [i, j] : m.pairs()) r.matching.push_back({g.points[i], g.blocks[j]});
    return r;
}

std::vector<Edge> construct_perfect_matching(const RemovedContext& ctx) {
    return replay_perfect_matching(ctx).matching;
}

}  // namespace incfree
