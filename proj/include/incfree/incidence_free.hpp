#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "incfree/design.hpp"
#include "incfree/error.hpp"
#include "incfree/pair_matching.hpp"

namespace incfree {

enum class SearchMode { Exact, Heuristic };

std::string_view to_string(SearchMode mode);

struct SearchConfig {
    std::chrono::milliseconds time_budget{std::chrono::seconds(120)};
    std::uint64_t node_budget = UINT64_MAX;
    bool use_bound_pruning = true;
    unsigned workers = 1;
    std::uint64_t seed = 1;
};

/// A verified pair plus how it was obtained. In exact mode the size is the
/// maximum over all equinumerous incidence-free pairs of the design.
struct PairCertificate {
    IncidenceFreePair pair;
    SearchMode mode = SearchMode::Heuristic;
    std::optional<std::size_t> upper_bound_used;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds wall_time{0};

    std::size_t size() const noexcept { return pair.size(); }
};

/// Raised when an exact search runs out of time or nodes; carries the best
/// pair found so far (heuristic mode).
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(PairCertificate best);
    const PairCertificate& best() const noexcept { return best_; }

private:
    PairCertificate best_;
};

/// sqrt(q) * (q - sqrt(q) + 1).
double haemers_bound(std::size_t q);
/// floor(haemers_bound(q)) computed in integers.
std::size_t haemers_bound_floor(std::size_t q);

/// chi of the flag Kneser graph as listed for q in {2,3,4,5,7,8,9,11,13}.
std::optional<std::size_t> table_chromatic_number(std::size_t q);
/// q^2 + q + 1 - table_chromatic_number(q).
std::optional<std::size_t> alpha_from_table(std::size_t q);

/// Branch-and-bound over point sets; the blocks avoiding all chosen points
/// are kept as a bitset. Planes use floor(haemers_bound) as a stopping bound
/// when cfg.use_bound_pruning is set. Throws BudgetExhausted.
PairCertificate max_pair_exact(const SymmetricDesign& design, const SearchConfig& cfg = {});

/// Randomised greedy with `restarts` runs; deterministic for a given seed.
PairCertificate greedy_pair(const SymmetricDesign& design, std::uint64_t seed, std::size_t restarts = 64);

/// A random valid pair of random size (possibly empty), for testing.
IncidenceFreePair random_pair(const SymmetricDesign& design, std::uint64_t seed);

}  // namespace incfree
