#include <doctest.h>

#include "incfree/constructions.hpp"
#include "incfree/error.hpp"
#include "incfree/incidence_free.hpp"

using namespace incfree;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("grid pair with default choices") {
    const auto d = build_pg2(5);
    const auto g = build_q5_grid(d, default_grid_choices(d));
    CHECK(g.pair.size() == 7);
    CHECK(g.survivors_before_secants == std::array<std::size_t, 3>{4, 4, 4});
    CHECK(g.survivors == std::array<std::size_t, 3>{3, 2, 2});
    CHECK_NOTHROW(check_pair(d, g.pair.points, g.pair.blocks));
    CHECK(q5_grid_pair(d) == g.pair);

    const auto m = construct_perfect_matching(RemovedContext(d, g.pair));
    CHECK(m.size() == 24);
}

TEST_CASE("grid pair with random choices") {
    const auto d = build_pg2(5);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CAPTURE(seed);
        const auto choices = random_grid_choices(d, seed);
        const auto g = build_q5_grid(d, choices);
        CHECK(g.survivors == std::array<std::size_t, 3>{3, 2, 2});
        CHECK(g.survivors_before_secants == std::array<std::size_t, 3>{4, 4, 4});
        CHECK_NOTHROW(check_pair(d, g.pair.points, g.pair.blocks));
        CHECK(g.pair.size() == 7);
        CHECK_FALSE(d.incident(choices.center, g.closing_line));
    }
}

TEST_CASE("grid construction rejects bad input") {
    CHECK(kind_of([] { default_grid_choices(build_pg2(4)); }) == ErrorKind::NotOrderFive);
    const auto d = build_pg2(5);
    const auto good = default_grid_choices(d);

    auto on_center = good;
    on_center.base_line = good.pencil[1];
    CHECK(kind_of([&] { build_q5_grid(d, on_center); }) == ErrorKind::InvalidChoices);

    auto repeated = good;
    repeated.pencil[2] = repeated.pencil[1];
    CHECK(kind_of([&] { build_q5_grid(d, repeated); }) == ErrorKind::InvalidChoices);

    auto same_secants = good;
    same_secants.second_secant = good.first_secant;
    CHECK(kind_of([&] { build_q5_grid(d, same_secants); }) == ErrorKind::InvalidChoices);

    auto secant_is_g = good;
    secant_is_g.first_secant = good.base_line;
    CHECK(kind_of([&] { build_q5_grid(d, secant_is_g); }) == ErrorKind::InvalidChoices);

    auto secant_through_p = good;
    secant_through_p.first_secant = good.pencil[0];
    CHECK(kind_of([&] { build_q5_grid(d, secant_through_p); }) == ErrorKind::InvalidChoices);
}

TEST_CASE("edge domination") {
    const auto fano = build_pg2(2);
    const auto alpha = max_pair_exact(fano).size();
    CHECK(edge_domination_number(fano) == 5);
    CHECK(edge_domination_number(fano) == fano.v() - alpha);

    CHECK(edge_domination_number(SymmetricDesign::from_strings({1, 1, 0}, {"1"})) == 1);
    CHECK(edge_domination_number(SymmetricDesign::from_strings({2, 1, 0}, {"10", "01"})) == 2);
    CHECK(edge_domination_number(BipartiteGraph(3, {{0, 1, 2}})) == 1);   // star
    CHECK(edge_domination_number(BipartiteGraph(2, {{0}, {0, 1}, {1}})) == 2);  // path with 4 edges
    CHECK(edge_domination_number(BipartiteGraph(0, 0)) == 0);

    CHECK(kind_of([] { edge_domination_number(build_pg2(3)); }) == ErrorKind::TooLarge);
    CHECK(kind_of([&] { edge_domination_number(fano, 10); }) == ErrorKind::BudgetExhausted);
}
