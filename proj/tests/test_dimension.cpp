#include <doctest.h>
#include <fibredim/dimension.hpp>
#include <fibredim/random_gen.hpp>

#include <random>

#include "test_support.hpp"

using namespace fibredim;

TEST_CASE("DimensionValue conventions") {
    DimensionValue e = DimensionValue::empty();
    DimensionValue two = DimensionValue::finite(2);
    CHECK(e.is_empty());
    CHECK(DimensionValue::max(e, two) == two);
    CHECK(DimensionValue::max(e, e).is_empty());
    CHECK(DimensionValue::plus(e, two).is_empty());
    CHECK(DimensionValue::plus(two, two) == DimensionValue::finite(4));
    CHECK(e.to_string() == "empty");
    CHECK_THROWS_AS(e.value(), ValidationError);
    CHECK_THROWS_AS(DimensionValue::finite(-1), ValidationError);
}

TEST_CASE("dimension examples") {
    CoeffDomain q = CoeffDomain::rationals();
    CHECK(krull_dim_ideal({}, q, MonomialOrder::grevlex(2)) == DimensionValue::finite(2));

    CoeffDomain f2 = CoeffDomain::prime_field(2);
    std::vector<Polynomial> xy{ts::expr("x*y", {"x", "y"}, f2)};
    CHECK(krull_dim_ideal(xy, f2, MonomialOrder::grevlex(2)) == DimensionValue::finite(1));

    CoeffDomain f3 = CoeffDomain::prime_field(3);
    std::vector<Polynomial> unit{ts::expr("1", {}, f3)};
    CHECK(krull_dim_ideal(unit, f3, MonomialOrder::grevlex(0)).is_empty());
}

TEST_CASE("pruned search equals the exhaustive reference on random monomial sets") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 300; ++round) {
        int vars = static_cast<int>(rand_range(rng, 0, 6));
        int count = static_cast<int>(rand_range(rng, 0, 5));
        std::vector<Monomial> monos;
        for (int i = 0; i < count; ++i) {
            std::vector<unsigned> e(static_cast<size_t>(vars), 0);
            int degree = static_cast<int>(rand_range(rng, 1, 3));
            bool nonconstant = false;
            for (int d = 0; d < degree && vars > 0; ++d) {
                e[static_cast<size_t>(rand_range(rng, 0, vars - 1))] += 1;
                nonconstant = true;
            }
            if (nonconstant) monos.emplace_back(std::move(e));
        }
        CHECK(independent_set_dimension(monos, vars, SubsetSearch::pruned) ==
              independent_set_dimension(monos, vars, SubsetSearch::exhaustive));
    }
}

TEST_CASE("dimension is invariant under grevlex/lex recomputation (>=50 random ideals)") {
    std::mt19937_64 rng(321);
    int tested = 0;
    std::vector<CoeffDomain> domains = {CoeffDomain::rationals(), CoeffDomain::prime_field(3)};
    while (tested < 60) {
        const CoeffDomain& domain = domains[static_cast<size_t>(tested) % domains.size()];
        int vars = static_cast<int>(rand_range(rng, 1, 3));
        MonomialOrder grevlex = MonomialOrder::grevlex(vars);
        MonomialOrder lex = MonomialOrder::lex(vars);
        std::vector<Polynomial> gens;
        int count = static_cast<int>(rand_range(rng, 1, 3));
        for (int k = 0; k < count; ++k) {
            Polynomial p = random_polynomial(rng, domain, grevlex, 3, -5, 5, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        std::vector<Polynomial> lex_gens;
        for (const auto& g : gens) lex_gens.push_back(g.with_order(lex));
        CHECK(krull_dim_ideal(gens, domain, grevlex) == krull_dim_ideal(lex_gens, domain, lex));
        ++tested;
    }
}

TEST_CASE("dimension paths agree on explicit monomial ideals") {
    // k[x1..xn]/(monomial ideal): the optimized and exhaustive searches are
    // compared on hand-picked staircases.
    CoeffDomain q = CoeffDomain::rationals();
    std::vector<std::string> v{"x", "y", "z"};
    struct Case {
        std::vector<std::string> monomials;
        int expected;
    };
    for (const auto& c : std::vector<Case>{
             {{"x*y", "y*z"}, 2},      // {x, z} independent
             {{"x*y*z"}, 2},           // any two variables
             {{"x", "y", "z"}, 0},     // only the empty set
             {{"x^2", "y^3"}, 1},      // {z}
         }) {
        std::vector<Polynomial> gens;
        for (const auto& m : c.monomials) gens.push_back(ts::expr(m, v, q));
        CHECK(krull_dim_ideal(gens, q, MonomialOrder::grevlex(3), SubsetSearch::pruned) ==
              DimensionValue::finite(c.expected));
        CHECK(krull_dim_ideal(gens, q, MonomialOrder::grevlex(3), SubsetSearch::exhaustive) ==
              DimensionValue::finite(c.expected));
    }
}
