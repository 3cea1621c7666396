#include "incfree/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "incfree/error.hpp"

namespace incfree {

namespace {

void require_order_five(const SymmetricDesign& d) {
    if (!d.is_plane() || d.order() != 5)
        throw Error(ErrorKind::NotOrderFive, "design is not a projective plane of order 5", {d.v(), d.k(), d.lambda()});
}

std::size_t meet(const SymmetricDesign& d, std::size_t a, std::size_t b) {
    Bitset common = d.points_on(a);
    common &= d.points_on(b);
    return common.find_first();
}

std::size_t join(const SymmetricDesign& d, std::size_t p, std::size_t r) {
    Bitset common = d.blocks_through(p);
    common &= d.blocks_through(r);
    return common.find_first();
}

[[noreturn]] void invalid(const std::string& what, std::vector<std::size_t> witness = {}) {
    throw Error(ErrorKind::InvalidChoices, what, std::move(witness));
}

// Lines through Q other than l1 and g, i.e. the admissible g1, g2.
std::vector<std::size_t> secant_candidates(const SymmetricDesign& d, std::size_t corner, std::size_t l1,
                                           std::size_t g) {
    std::vector<std::size_t> out;
    d.blocks_through(corner).for_each([&](std::size_t line) {
        if (line != l1 && line != g) out.push_back(line);
    });
    return out;
}

}  // namespace

GridRecipeChoices default_grid_choices(const SymmetricDesign& plane) {
    require_order_five(plane);
    GridRecipeChoices c{};
    c.center = 0;
    for (std::size_t l = 0; l < plane.v(); ++l) {
        if (!plane.incident(c.center, l)) {
            c.base_line = l;
            break;
        }
    }
    const auto pencil = plane.blocks_through(c.center).indices();
    std::copy(pencil.begin(), pencil.end(), c.pencil.begin());
    const auto corner = meet(plane, c.base_line, c.pencil[0]);
    const auto secants = secant_candidates(plane, corner, c.pencil[0], c.base_line);
    c.first_secant = secants[0];
    c.second_secant = secants[1];
    return c;
}

GridRecipeChoices random_grid_choices(const SymmetricDesign& plane, std::uint64_t seed) {
    require_order_five(plane);
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<std::size_t>& from) {
        return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    };
    GridRecipeChoices c{};
    c.center = std::uniform_int_distribution<std::size_t>(0, plane.v() - 1)(rng);
    std::vector<std::size_t> avoiding;
    for (std::size_t l = 0; l < plane.v(); ++l)
        if (!plane.incident(c.center, l)) avoiding.push_back(l);
    c.base_line = pick(avoiding);
    auto pencil = plane.blocks_through(c.center).indices();
    std::shuffle(pencil.begin(), pencil.end(), rng);
    std::copy(pencil.begin(), pencil.end(), c.pencil.begin());
    const auto corner = meet(plane, c.base_line, c.pencil[0]);
    auto secants = secant_candidates(plane, corner, c.pencil[0], c.base_line);
    std::shuffle(secants.begin(), secants.end(), rng);
    c.first_secant = secants[0];
    c.second_secant = secants[1];
    return c;
}

GridConstruction build_q5_grid(const SymmetricDesign& plane, const GridRecipeChoices& c) {
    require_order_five(plane);
    const auto v = plane.v();
    const auto in_range = [&](std::size_t i) { return i < v; };
    if (!in_range(c.center) || !in_range(c.base_line) || !in_range(c.first_secant) || !in_range(c.second_secant) ||
        !std::all_of(c.pencil.begin(), c.pencil.end(), in_range))
        invalid("index out of range");
    if (plane.incident(c.center, c.base_line)) invalid("P lies on g", {c.center, c.base_line});
    for (std::size_t i = 0; i < 6; ++i) {
        if (!plane.incident(c.center, c.pencil[i])) invalid("pencil line does not pass through P", {c.pencil[i]});
        for (std::size_t j = 0; j < i; ++j)
            if (c.pencil[i] == c.pencil[j]) invalid("pencil lines are not distinct", {c.pencil[i]});
    }
    const auto corner = meet(plane, c.base_line, c.pencil[0]);
    for (auto s : {c.first_secant, c.second_secant}) {
        if (s == c.base_line) invalid("secant equals g", {s});
        if (!plane.incident(corner, s)) invalid("secant does not pass through Q", {s, corner});
        if (plane.incident(c.center, s)) invalid("secant passes through P", {s});
    }
    if (c.first_secant == c.second_secant) invalid("g1 equals g2", {c.first_secant});

    const auto [l1, l2, l3, l4, l5, l6] = c.pencil;
    const auto closing = join(plane, meet(plane, c.first_secant, l2), meet(plane, c.second_secant, l3));

    GridConstruction out{c, corner, closing, {}, {}, {}};
    const std::array<std::size_t, 3> kept{l1, l2, l3};

    auto survivors_on = [&](const std::vector<std::size_t>& removed_lines) {
        std::array<std::size_t, 3> counts{};
        std::vector<std::size_t> points;
        for (std::size_t i = 0; i < 3; ++i) {
            plane.points_on(kept[i]).for_each([&](std::size_t p) {
                const bool hit = std::any_of(removed_lines.begin(), removed_lines.end(),
                                             [&](std::size_t l) { return plane.incident(p, l); });
                if (!hit) {
                    ++counts[i];
                    points.push_back(p);
                }
            });
        }
        return std::pair{counts, points};
    };

    out.survivors_before_secants = survivors_on({l4, l5, l6, c.base_line}).first;
    std::vector<std::size_t> removed{l4, l5, l6, c.base_line, c.first_secant, c.second_secant, closing};
    auto [counts, points] = survivors_on(removed);
    out.survivors = counts;
    // The lines l1, l2, l3 meet only in P, which is removed, so no point repeats.
    out.pair = check_pair(plane, std::move(points), std::move(removed));
    return out;
}

IncidenceFreePair q5_grid_pair(const SymmetricDesign& plane, const std::optional<GridRecipeChoices>& choices) {
    return build_q5_grid(plane, choices ? *choices : default_grid_choices(plane)).pair;
}

std::size_t edge_domination_number(const BipartiteGraph& graph, std::uint64_t budget) {
    struct CompactEdge {
        std::uint64_t mask;  // both endpoints
    };
    std::map<std::size_t, std::size_t> vertex_id;
    auto id = [&](std::size_t key) {
        auto [it, inserted] = vertex_id.emplace(key, vertex_id.size());
        return it->second;
    };
    std::vector<CompactEdge> edges;
    for (std::size_t l = 0; l < graph.left_count(); ++l) {
        for (auto r : graph.neighbors(l)) {
            const auto a = id(l);
            const auto b = id(graph.left_count() + r);
            edges.push_back({(std::uint64_t{1} << a) | (std::uint64_t{1} << b)});
        }
    }
    const std::size_t m = edges.size();
    if (m > max_edge_domination_edges)
        throw Error(ErrorKind::TooLarge, std::to_string(m) + " edges exceed the exhaustive limit", {m});

    std::uint64_t visited = 0;
    auto dominates = [&](std::uint64_t covered) {
        return std::all_of(edges.begin(), edges.end(), [&](const CompactEdge& e) { return (e.mask & covered) != 0; });
    };
    // Tries every subset of exactly `size` edges from index `from` on.
    auto choose = [&](auto&& self, std::size_t from, std::size_t size, std::uint64_t covered) -> bool {
        if (++visited > budget) throw Error(ErrorKind::BudgetExhausted, "edge domination search exceeded budget");
        if (size == 0) return dominates(covered);
        for (std::size_t i = from; i + size <= m; ++i)
            if (self(self, i + 1, size - 1, covered | edges[i].mask)) return true;
        return false;
    };
    for (std::size_t size = 0; size <= m; ++size)
        if (choose(choose, 0, size, 0)) return size;
    return m;
}

std::size_t edge_domination_number(const SymmetricDesign& design, std::uint64_t budget) {
    std::vector<std::vector<std::size_t>> adjacency(design.v());
    for (std::size_t p = 0; p < design.v(); ++p) adjacency[p] = design.blocks_through(p).indices();
    return edge_domination_number(BipartiteGraph(design.v(), std::move(adjacency)), budget);
}

}  // namespace incfree
