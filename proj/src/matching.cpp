#include "incfree/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "incfree/error.hpp"

namespace incfree {

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count)
    : right_count_(right_count), adjacency_(left_count) {}

BipartiteGraph::BipartiteGraph(std::size_t right_count, std::vector<std::vector<std::size_t>> adjacency)
    : right_count_(right_count), adjacency_(std::move(adjacency)) {
    for (std::size_t l = 0; l < adjacency_.size(); ++l) {
        auto& list = adjacency_[l];
        std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] >= right_count_)
                throw Error(ErrorKind::OutOfRange, "right neighbour out of range", {l, list[i]});
            if (i > 0 && list[i] == list[i - 1])
                throw Error(ErrorKind::DuplicateIndex, "duplicate neighbour", {l, list[i]});
        }
    }
}

std::size_t BipartiteGraph::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& list : adjacency_) n += list.size();
    return n;
}

bool BipartiteGraph::has_edge(std::size_t left, std::size_t right) const noexcept {
    const auto& list = adjacency_[left];
    return std::binary_search(list.begin(), list.end(), right);
}

std::vector<std::size_t> BipartiteGraph::right_degrees() const {
    std::vector<std::size_t> deg(right_count_, 0);
    for (const auto& list : adjacency_)
        for (auto r : list) ++deg[r];
    return deg;
}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
    if (left >= adjacency_.size() || right >= right_count_)
        throw Error(ErrorKind::OutOfRange, "edge endpoint out of range", {left, right});
    auto& list = adjacency_[left];
    auto it = std::lower_bound(list.begin(), list.end(), right);
    if (it == list.end() || *it != right) list.insert(it, right);
}

void Matching::match(std::size_t left, std::size_t right) {
    if (right_of_[left] != unmatched) {
        left_of_[right_of_[left]] = unmatched;
        --size_;
    }
    if (left_of_[right] != unmatched) {
        right_of_[left_of_[right]] = unmatched;
        --size_;
    }
    right_of_[left] = right;
    left_of_[right] = left;
    ++size_;
}

std::vector<std::pair<std::size_t, std::size_t>> Matching::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(size_);
    for (std::size_t l = 0; l < right_of_.size(); ++l)
        if (right_of_[l] != unmatched) out.emplace_back(l, right_of_[l]);
    return out;
}

bool Matching::is_valid_for(const BipartiteGraph& graph) const {
    if (right_of_.size() != graph.left_count() || left_of_.size() != graph.right_count()) return false;
    std::size_t n = 0;
    for (std::size_t l = 0; l < right_of_.size(); ++l) {
        const auto r = right_of_[l];
        if (r == unmatched) continue;
        if (left_of_[r] != l || !graph.has_edge(l, r)) return false;
        ++n;
    }
    return n == size_;
}

Matching maximum_matching(const BipartiteGraph& graph) {
    const std::size_t nl = graph.left_count();
    const std::size_t nr = graph.right_count();
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    constexpr std::size_t none = Matching::unmatched;

    std::vector<std::size_t> right_of(nl, none), left_of(nr, none), dist(nl);

    auto bfs = [&] {
        std::deque<std::size_t> queue;
        for (std::size_t l = 0; l < nl; ++l) {
            if (right_of[l] == none) {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = inf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const auto l = queue.front();
            queue.pop_front();
            for (auto r : graph.neighbors(l)) {
                const auto next = left_of[r];
                if (next == none) {
                    found = true;
                } else if (dist[next] == inf) {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found;
    };

    // Iterative layered DFS; `cursor` remembers the next neighbour to try.
    std::vector<std::size_t> cursor(nl);
    auto augment = [&](std::size_t root) {
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const auto l = stack.back();
            const auto& nbrs = graph.neighbors(l);
            bool advanced = false;
            while (cursor[l] < nbrs.size()) {
                const auto r = nbrs[cursor[l]];
                const auto next = left_of[r];
                if (next == none) {
                    // Flip the path root..l, then r.
                    for (std::size_t i = stack.size(); i-- > 0;) {
                        const auto u = stack[i];
                        const auto target = graph.neighbors(u)[cursor[u]];
                        right_of[u] = target;
                        left_of[target] = u;
                    }
                    return true;
                }
                if (dist[next] == dist[l] + 1) {
                    stack.push_back(next);
                    advanced = true;
                    break;
                }
                ++cursor[l];
            }
            if (!advanced) {
                dist[l] = inf;
                stack.pop_back();
                if (!stack.empty()) ++cursor[stack.back()];
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(cursor.begin(), cursor.end(), 0);
        for (std::size_t l = 0; l < nl; ++l)
            if (right_of[l] == none) augment(l);
    }

    Matching m(nl, nr);
    for (std::size_t l = 0; l < nl; ++l)
        if (right_of[l] != none) m.match(l, right_of[l]);
    return m;
}

std::vector<std::size_t> neighborhood(const BipartiteGraph& graph, const std::vector<std::size_t>& left) {
    std::vector<bool> seen(graph.right_count(), false);
    for (auto l : left)
        for (auto r : graph.neighbors(l)) seen[r] = true;
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < seen.size(); ++r)
        if (seen[r]) out.push_back(r);
    return out;
}

std::optional<std::vector<std::size_t>> hall_violator(const BipartiteGraph& graph) {
    const auto m = maximum_matching(graph);
    if (m.is_left_perfect()) return std::nullopt;

    std::vector<bool> reached(graph.left_count(), false);
    std::deque<std::size_t> queue;
    for (std::size_t l = 0; l < graph.left_count(); ++l) {
        if (m.right_of(l) == Matching::unmatched) {
            reached[l] = true;
            queue.push_back(l);
        }
    }
    while (!queue.empty()) {
        const auto l = queue.front();
        queue.pop_front();
        for (auto r : graph.neighbors(l)) {
            // Maximality guarantees every reachable right vertex is matched.
            const auto next = m.left_of(r);
            if (next != Matching::unmatched && !reached[next]) {
                reached[next] = true;
                queue.push_back(next);
            }
        }
    }
    std::vector<std::size_t> w;
    for (std::size_t l = 0; l < reached.size(); ++l)
        if (reached[l]) w.push_back(l);
    return w;
}

Matching perfect_matching_regular(const BipartiteGraph& graph, std::size_t degree) {
    if (graph.left_count() != graph.right_count())
        throw Error(ErrorKind::NotRegular, "sides differ in size", {graph.left_count(), graph.right_count()});
    for (std::size_t l = 0; l < graph.left_count(); ++l) {
        if (graph.neighbors(l).size() != degree)
            throw Error(ErrorKind::NotRegular,
                        "left vertex " + std::to_string(l) + " has degree " + std::to_string(graph.neighbors(l).size()),
                        {l});
    }
    const auto deg = graph.right_degrees();
    for (std::size_t r = 0; r < deg.size(); ++r) {
        if (deg[r] != degree)
            throw Error(ErrorKind::NotRegular,
                        "right vertex " + std::to_string(r) + " has degree " + std::to_string(deg[r]), {r});
    }
    auto m = maximum_matching(graph);
    if (!m.is_perfect()) throw Error(ErrorKind::NotPerfect, "regular graph without perfect matching");
    return m;
}

}  // namespace incfree
