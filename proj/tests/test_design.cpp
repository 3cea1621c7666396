#include <doctest.h>

#include "incfree/design.hpp"
#include "incfree/error.hpp"
#include "incfree/galois_field.hpp"
#include "oracles.hpp"

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

TEST_CASE("prime power decomposition") {
    CHECK(prime_power_decomposition(2) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(prime_power_decomposition(8) == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(prime_power_decomposition(9) == std::pair<std::size_t, std::size_t>{3, 2});
    CHECK(prime_power_decomposition(6).first == 0);
    CHECK(prime_power_decomposition(1).first == 0);
    CHECK(prime_power_decomposition(12).first == 0);
}

TEST_CASE("GF(2) has characteristic two") {
    const GaloisField f(2);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.characteristic() == 2);
}

TEST_CASE("non prime powers are rejected") {
    CHECK(kind_of([] { GaloisField f(6); }) == ErrorKind::NotPrimePower);
    CHECK(kind_of([] { GaloisField f(0); }) == ErrorKind::NotPrimePower);
    CHECK(kind_of([] { GaloisField f(1); }) == ErrorKind::NotPrimePower);
    CHECK(kind_of([] { GaloisField f(2048); }) == ErrorKind::TooLarge);
}

TEST_CASE("field axioms hold for every order up to 16") {
    for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        CHECK(oracle::field_axioms_hold(GaloisField(q)));
    }
}

TEST_CASE("hard-coded moduli for small extension fields") {
    CHECK(GaloisField(4).modulus() == std::vector<std::size_t>{1, 1, 1});
    CHECK(GaloisField(8).modulus() == std::vector<std::size_t>{1, 1, 0, 1});
    CHECK(GaloisField(9).modulus() == std::vector<std::size_t>{1, 0, 1});
    // GF(9): x*x = -1 = 2 with x encoded as 3
    CHECK(GaloisField(9).mul(3, 3) == 2);
}

TEST_CASE("PG(2,q) parameters and axioms") {
    for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        CAPTURE(q);
        const auto d = build_pg2(q);
        CHECK(d.params() == DesignParameters{q * q + q + 1, q + 1, 1});
        CHECK(validate_design(d).passed());
        CHECK(d.lambda() * (d.v() - 1) == d.k() * (d.k() - 1));
        CHECK(d.is_plane());
        CHECK(d.order() == q);
    }
}

TEST_CASE("PG(2,4) passes an independent axiom scan") {
    const auto d = build_pg2(4);
    CHECK(oracle::is_symmetric_design(oracle::to_matrix(d), 5, 1));
}

TEST_CASE("PG(2,q) point order is lexicographic on normalised coordinates") {
    const auto d = build_pg2(3);
    REQUIRE(d.point_labels().size() == 13);
    CHECK(d.point_labels().front() == "(0,0,1)");
    CHECK(d.point_labels()[1] == "(0,1,0)");
    CHECK(d.point_labels().back() == "(2,2,1)");
    CHECK(d.block_labels().front() == "[0,0,1]");
}

TEST_CASE("a flipped bit breaks validation with a row-sum witness") {
    const auto fano = build_pg2(2);
    std::vector<Bitset> rows;
    for (std::size_t p = 0; p < 7; ++p) rows.push_back(fano.blocks_through(p));
    rows[3].flip(0);
    const SymmetricDesign broken(fano.params(), rows);
    const auto report = validate_design(broken);
    REQUIRE_FALSE(report.passed());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.kind == "row-sum" && v.witness == std::vector<std::size_t>{3}) found = true;
    CHECK(found);
}

TEST_CASE("shape mismatch is rejected at construction") {
    CHECK(kind_of([] { SymmetricDesign::from_strings({3, 1, 0}, {"100", "010"}); }) == ErrorKind::ShapeMismatch);
    CHECK(kind_of([] { SymmetricDesign::from_strings({2, 1, 0}, {"10", "011"}); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("complements are symmetric designs") {
    const auto fano = build_pg2(2);
    const auto biplane = complement_design(fano);
    CHECK(biplane.params() == DesignParameters{7, 4, 2});
    CHECK(validate_design(biplane).passed());
    CHECK(oracle::is_symmetric_design(oracle::to_matrix(biplane), 4, 2));
    CHECK(complement_design(biplane) == fano);

    const auto c13 = complement_design(build_pg2(3));
    CHECK(c13.params() == DesignParameters{13, 9, 6});
    CHECK(oracle::is_symmetric_design(oracle::to_matrix(c13), 9, 6));
}

TEST_CASE("degenerate complement") {
    // (2,1,0): v - 2k + lambda = 0
    const auto two = SymmetricDesign::from_strings({2, 1, 0}, {"10", "01"});
    CHECK(validate_design(two).passed());
    CHECK(kind_of([&] { complement_design(two); }) == ErrorKind::DegenerateComplement);
}

TEST_CASE("duals") {
    const auto fano = build_pg2(2);
    const auto dual = dual_design(fano);
    CHECK(dual.params() == fano.params());
    CHECK(validate_design(dual).passed());
    CHECK(dual_design(dual) == fano);

    const auto biplane11 = build_cyclic_design(11, {1, 3, 4, 5, 9});
    CHECK(biplane11.params() == DesignParameters{11, 5, 2});
    const auto d11 = dual_design(biplane11);
    CHECK(oracle::is_symmetric_design(oracle::to_matrix(d11), 5, 2));

    auto broken = SymmetricDesign::from_strings({2, 1, 0}, {"11", "00"});
    CHECK(kind_of([&] { dual_design(broken); }) == ErrorKind::InvalidDesign);
}

TEST_CASE("any two blocks meet in lambda points") {
    for (const auto& d : {build_pg2(3), build_cyclic_design(11, {1, 3, 4, 5, 9}), complement_design(build_pg2(2))}) {
        for (std::size_t a = 0; a < d.v(); ++a)
            for (std::size_t b = a + 1; b < d.v(); ++b) CHECK(d.points_on(a).count_and(d.points_on(b)) == d.lambda());
    }
}

TEST_CASE("cyclic designs reject non difference sets") {
    CHECK(kind_of([] { build_cyclic_design(11, {0, 1, 2, 3, 4}); }) == ErrorKind::InvalidDesign);
    CHECK(kind_of([] { build_cyclic_design(7, {0, 0, 1}); }) == ErrorKind::InvalidDesign);
}
