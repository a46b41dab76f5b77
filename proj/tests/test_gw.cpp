#include "catlab/gw.hpp"
#include "catlab/inversion.hpp"

#include <doctest.h>

#include <cmath>

using namespace catlab;

namespace {

OffspringDistribution binary_third() {
    // h_{1,0} = 2/3, h_{1,(2)} = 1/3: subcritical binary branching.
    std::vector<std::map<MultiIndex, Rat>> rows(1);
    rows[0][MultiIndex{2}] = Rat(1, 3);
    return OffspringDistribution::make(1, rows);
}

} // namespace

TEST_CASE("offspring validation") {
    std::vector<std::map<MultiIndex, Rat>> rows(1);
    rows[0][MultiIndex{2}] = Rat(2, 3);
    rows[0][MultiIndex{1}] = Rat(2, 3);
    CHECK_THROWS_AS(OffspringDistribution::make(1, rows), InvalidParameterError);

    rows[0].clear();
    rows[0][MultiIndex{2}] = Rat(1, 2);
    rows[0][MultiIndex(1)] = Rat(1, 3); // explicit leaf mass that does not fill the row
    CHECK_THROWS_AS(OffspringDistribution::make(1, rows), InvalidParameterError);

    OffspringDistribution ok = binary_third();
    CHECK(ok.leaf_mass(0) == Rat(2, 3));
    CHECK(ok.strictly_substochastic());
}

TEST_CASE("certain leaf") {
    std::vector<std::map<MultiIndex, Rat>> rows(1);
    rows[0][MultiIndex(1)] = Rat(1);
    OffspringDistribution offspring = OffspringDistribution::make(1, rows);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        GwSample s = sample_gw_multitype(offspring, 0, rng, 100);
        REQUIRE_FALSE(s.cap_exceeded);
        CHECK(s.tree.size() == 1);
        CHECK(s.tree.leaftype(1) == MultiIndex{1});
    }
}

TEST_CASE("unary chain always hits the cap") {
    std::vector<std::map<MultiIndex, Rat>> rows(1);
    rows[0][MultiIndex{1}] = Rat(1); // no leaf mass at all
    OffspringDistribution offspring = OffspringDistribution::make(1, rows);
    CHECK(offspring.leaf_mass(0) == 0);
    CHECK_FALSE(offspring.strictly_substochastic());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        CHECK(sample_gw_multitype(offspring, 0, rng, 50).cap_exceeded);
    }
}

TEST_CASE("children are ordered by ascending type") {
    std::vector<std::map<MultiIndex, Rat>> rows(2);
    rows[0][MultiIndex{0, 2}] = Rat(1); // root of type 1 always has two type-2 children
    rows[1][MultiIndex(2)] = Rat(1);    // type 2 is always a leaf
    OffspringDistribution offspring = OffspringDistribution::make(2, rows);
    Rng rng(3);
    GwSample s = sample_gw_multitype(offspring, 0, rng, 100);
    REQUIRE_FALSE(s.cap_exceeded);
    CHECK(s.tree.arity == std::vector<int>{2, 0, 0});
    CHECK(s.tree.types == std::vector<int>{0, 1, 1});
}

TEST_CASE("leaf-type frequencies match the exact law") {
    OffspringDistribution offspring = binary_third();
    GwLeafLawReport two =
        verify_gw_leaf_law(offspring, 0, MultiIndex{2}, 20000, 4242, 10000, 2);
    // One internal vertex: (2/3)^2 (1/3).
    CHECK(two.exact == Rat(4, 27));
    CHECK(std::abs(two.z_score) < 4.5);

    GwLeafLawReport three =
        verify_gw_leaf_law(offspring, 0, MultiIndex{3}, 20000, 4243, 10000, 2);
    // Two ordered shapes with two internal vertices: 2 (1/3)^2 (2/3)^3.
    CHECK(three.exact == Rat(16, 243));
    CHECK(std::abs(three.z_score) < 4.5);
}

TEST_CASE("leaf law is deterministic and worker-independent") {
    OffspringDistribution offspring = binary_third();
    GwLeafLawReport a = verify_gw_leaf_law(offspring, 0, MultiIndex{3}, 5000, 9, 10000, 1);
    GwLeafLawReport b = verify_gw_leaf_law(offspring, 0, MultiIndex{3}, 5000, 9, 10000, 3);
    CHECK(a.hits == b.hits);
    CHECK(a.cap_exceeded == b.cap_exceeded);
}

TEST_CASE("supercritical tables keep some mass at infinity") {
    std::vector<std::map<MultiIndex, Rat>> rows(1);
    rows[0][MultiIndex{3}] = Rat(3, 5); // mean 1.8 > 1
    OffspringDistribution offspring = OffspringDistribution::make(1, rows);
    std::uint64_t finite = 0;
    const std::uint64_t trials = 1500;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(31, t);
        if (!sample_gw_multitype(offspring, 0, rng, 8000).cap_exceeded) ++finite;
    }
    CHECK(finite < trials); // positive extinction deficit
    CHECK(finite > 0);
}
