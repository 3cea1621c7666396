#include "incfree/kneser.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "incfree/error.hpp"

namespace incfree {

namespace {

void require_plane(const SymmetricDesign& d) {
    if (d.lambda() != 1) throw Error(ErrorKind::NotAPlane, "lambda is " + std::to_string(d.lambda()));
}

// Flag graph on at most 64 chambers as adjacency masks.
std::vector<std::uint64_t> adjacency_masks(const SymmetricDesign& d, const std::vector<Chamber>& cs) {
    std::vector<std::uint64_t> adj(cs.size(), 0);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (adjacent(d, cs[i], cs[j])) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    return adj;
}

class DsaturSolver {
public:
    DsaturSolver(std::vector<std::uint64_t> adj, std::uint64_t budget)
        : adj_(std::move(adj)), n_(adj_.size()), budget_(budget), color_(n_, -1) {}

    std::size_t solve() {
        best_ = n_ + 1;
        if (n_ == 0) return 0;
        search(0, 0);
        return best_;
    }

private:
    std::uint64_t neighbor_colors(std::size_t v) const {
        std::uint64_t mask = 0;
        std::uint64_t nb = adj_[v];
        while (nb) {
            const auto u = static_cast<std::size_t>(std::countr_zero(nb));
            nb &= nb - 1;
            if (color_[u] >= 0) mask |= std::uint64_t{1} << color_[u];
        }
        return mask;
    }

    void search(std::size_t colored, std::size_t used) {
        if (++nodes_ > budget_) throw Error(ErrorKind::BudgetExhausted, "coloring search exceeded node budget");
        if (used >= best_) return;
        if (colored == n_) {
            best_ = used;
            return;
        }
        std::size_t pick = n_;
        int pick_sat = -1, pick_deg = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            const int sat = std::popcount(neighbor_colors(v));
            int deg = 0;
            std::uint64_t nb = adj_[v];
            while (nb) {
                const auto u = static_cast<std::size_t>(std::countr_zero(nb));
                nb &= nb - 1;
                if (color_[u] < 0) ++deg;
            }
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const auto forbidden = neighbor_colors(pick);
        for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
            if (forbidden >> c & 1U) continue;
            color_[pick] = static_cast<int>(c);
            search(colored + 1, std::max(used, c + 1));
            color_[pick] = -1;
        }
    }

    std::vector<std::uint64_t> adj_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
    std::vector<int> color_;
};

}  // namespace

std::vector<Chamber> chambers(const SymmetricDesign& plane) {
    require_plane(plane);
    std::vector<Chamber> out;
    for (std::size_t p = 0; p < plane.v(); ++p)
        plane.blocks_through(p).for_each([&](std::size_t l) { out.push_back({p, l}); });
    return out;
}

bool adjacent(const SymmetricDesign& plane, Chamber a, Chamber b) {
    return !plane.incident(a.point, b.line) && !plane.incident(b.point, a.line);
}

ChamberColoring assign_colors(const SymmetricDesign& plane, std::vector<Chamber> anchors) {
    ChamberColoring coloring;
    const std::size_t v = plane.v();
    std::vector<std::size_t> by_point(v, ChamberColoring::uncolored), by_line(v, ChamberColoring::uncolored);
    for (std::size_t i = anchors.size(); i-- > 0;) {
        if (anchors[i].point < v) by_point[anchors[i].point] = i;
        if (anchors[i].line < v) by_line[anchors[i].line] = i;
    }
    for (const auto& c : chambers(plane)) {
        auto color = by_point[c.point];
        if (color == ChamberColoring::uncolored) color = by_line[c.line];
        coloring.assignment.push_back({c, color});
    }
    coloring.anchors = std::move(anchors);
    return coloring;
}

ChamberColoring coloring_from_pair(const SymmetricDesign& plane, const IncidenceFreePair& pair) {
    require_plane(plane);
    const RemovedContext ctx(plane, pair);
    std::vector<Chamber> anchors;
    for (const auto& e : construct_perfect_matching(ctx)) anchors.push_back({e.point, e.block});
    return assign_colors(plane, std::move(anchors));
}

ValidationReport verify_coloring(const SymmetricDesign& plane, const ChamberColoring& coloring) {
    require_plane(plane);
    ValidationReport report;
    const std::size_t v = plane.v();
    const auto& anchors = coloring.anchors;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const auto& a = anchors[i];
        if (a.point >= v || a.line >= v || !plane.incident(a.point, a.line))
            report.add("anchor-not-chamber", {i, a.point, a.line});
    }

    std::vector<std::size_t> seen(v * v, 0);
    std::vector<std::vector<Chamber>> classes(anchors.size());
    for (const auto& [c, color] : coloring.assignment) {
        if (c.point >= v || c.line >= v || !plane.incident(c.point, c.line)) {
            report.add("non-chamber", {c.point, c.line});
            continue;
        }
        if (seen[c.point * v + c.line]++ == 1) report.add("duplicate", {c.point, c.line});
        if (color >= anchors.size()) {
            report.add("uncolored", {c.point, c.line}, "no valid color");
            continue;
        }
        const auto& a = anchors[color];
        if (a.point != c.point && a.line != c.line)
            report.add("anchor-mismatch", {c.point, c.line, color}, "chamber shares neither point nor line with its anchor");
        classes[color].push_back(c);
    }
    for (const auto& c : chambers(plane))
        if (seen[c.point * v + c.line] == 0) report.add("uncovered", {c.point, c.line});

    for (std::size_t color = 0; color < classes.size(); ++color) {
        const auto& cls = classes[color];
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (adjacent(plane, cls[i], cls[j]))
                    report.add("adjacent-in-class", {color, cls[i].point, cls[i].line, cls[j].point, cls[j].line});
    }
    return report;
}

IncidenceFreePair pair_from_coloring(const SymmetricDesign& plane, const ChamberColoring& coloring) {
    const auto report = verify_coloring(plane, coloring);
    if (!report.passed())
        throw Error(ErrorKind::NotCovering, report.summary(), report.violations.front().witness);
    const std::size_t v = plane.v();
    Bitset points(v), lines(v);
    points.set_all();
    lines.set_all();
    for (const auto& a : coloring.anchors) {
        points.reset(a.point);
        lines.reset(a.line);
    }
    auto xs = points.indices();
    auto ys = lines.indices();
    const auto s = std::min(xs.size(), ys.size());
    xs.resize(s);
    ys.resize(s);
    return check_pair(plane, std::move(xs), std::move(ys));
}

std::string_view to_string(CocliqueKind kind) {
    switch (kind) {
    case CocliqueKind::Chamber: return "chamber";
    case CocliqueKind::Triangular: return "triangular";
    case CocliqueKind::Other: return "other";
    }
    return "other";
}

bool is_coclique(const SymmetricDesign& plane, const std::vector<Chamber>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (adjacent(plane, members[i], members[j])) return false;
    return true;
}

std::vector<Chamber> chamber_coclique(const SymmetricDesign& plane, Chamber c) {
    std::vector<Chamber> out;
    for (const auto& other : chambers(plane))
        if (other.point == c.point || other.line == c.line) out.push_back(other);
    return out;
}

ClassifiedCoclique classify_coclique(const SymmetricDesign& plane, std::vector<Chamber> members) {
    std::sort(members.begin(), members.end());
    ClassifiedCoclique out{std::move(members), CocliqueKind::Other, {}};
    const auto& ms = out.members;
    const std::size_t q = plane.k() - 1;

    if (ms.size() == 2 * q + 1) {
        for (const auto& c : ms) {
            const bool all = std::all_of(ms.begin(), ms.end(),
                                         [&](const Chamber& o) { return o.point == c.point || o.line == c.line; });
            if (all) {
                out.kind = CocliqueKind::Chamber;
                out.witness = {c.point, c.line};
                return out;
            }
        }
    }
    if (ms.size() == 3) {
        const auto a = ms[0].point, b = ms[1].point, c = ms[2].point;
        if (a != b && b != c && a != c) {
            Bitset common = plane.blocks_through(a);
            common &= plane.blocks_through(b);
            common &= plane.blocks_through(c);
            if (common.none()) {
                out.kind = CocliqueKind::Triangular;
                out.witness = {a, b, c};
            }
        }
    }
    return out;
}

std::vector<ClassifiedCoclique> enumerate_maximal_cocliques(const SymmetricDesign& plane, std::size_t max_chambers) {
    const auto cs = chambers(plane);
    if (cs.size() > std::min<std::size_t>(max_chambers, 64))
        throw Error(ErrorKind::TooLarge, std::to_string(cs.size()) + " chambers exceed the exhaustive limit",
                    {cs.size()});
    const std::size_t n = cs.size();
    const auto adj = adjacency_masks(plane, cs);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> compat(n);
    for (std::size_t i = 0; i < n; ++i) compat[i] = all & ~adj[i] & ~(std::uint64_t{1} << i);

    std::vector<ClassifiedCoclique> out;
    // Bron-Kerbosch with Tomita pivoting on the non-adjacency graph.
    auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0) {
            if (x == 0) {
                std::vector<Chamber> members;
                for (std::uint64_t m = r; m; m &= m - 1) members.push_back(cs[std::countr_zero(m)]);
                out.push_back(classify_coclique(plane, std::move(members)));
            }
            return;
        }
        std::size_t pivot = 0;
        int pivot_score = -1;
        for (std::uint64_t m = p | x; m; m &= m - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(m));
            const int score = std::popcount(p & compat[u]);
            if (score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        }
        for (std::uint64_t m = p & ~compat[pivot]; m; m &= m - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(m));
            const auto bit = std::uint64_t{1} << u;
            self(self, r | bit, p & compat[u], x & compat[u]);
            p &= ~bit;
            x |= bit;
        }
    };
    expand(expand, 0, all, 0);
    return out;
}

std::vector<ClassifiedCoclique> sample_maximal_cocliques(const SymmetricDesign& plane, std::size_t samples,
                                                         std::uint64_t seed) {
    const auto cs = chambers(plane);
    std::mt19937_64 rng(seed);
    std::vector<ClassifiedCoclique> out;
    std::vector<std::size_t> order(cs.size());
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Chamber> members;
        for (auto i : order) {
            const bool ok = std::none_of(members.begin(), members.end(),
                                         [&](const Chamber& m) { return adjacent(plane, m, cs[i]); });
            if (ok) members.push_back(cs[i]);
        }
        out.push_back(classify_coclique(plane, std::move(members)));
    }
    return out;
}

std::size_t chromatic_number_exact(const SymmetricDesign& plane, std::uint64_t node_budget) {
    require_plane(plane);
    if (plane.k() > 3)
        throw Error(ErrorKind::TooLarge, "exact coloring is limited to order 2", {plane.k() - 1});
    const auto cs = chambers(plane);
    DsaturSolver solver(adjacency_masks(plane, cs), node_budget);
    return solver.solve();
}

ChiBounds chi_bounds(std::size_t q) {
    const double qd = static_cast<double>(q);
    return {(qd + 1.0) * (qd + 1.0 - std::sqrt(qd)), q * q + 1, "q^2+q+1-(1/2)q^(3/2)+O(q^(5/4+eps))"};
}

}  // namespace incfree
