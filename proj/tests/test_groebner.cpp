#include <doctest.h>
#include <fibredim/dimension.hpp>
#include <fibredim/random_gen.hpp>

#include <random>

#include "test_support.hpp"

using namespace fibredim;

namespace {

std::vector<Polynomial> gens(const std::vector<std::string>& exprs,
                             const std::vector<std::string>& vars, const CoeffDomain& domain,
                             MonomialOrder::Kind kind = MonomialOrder::Kind::grevlex) {
    std::vector<Polynomial> out;
    for (const auto& e : exprs) out.push_back(ts::expr(e, vars, domain, kind));
    return out;
}

}  // namespace

TEST_CASE("field bases: frozen examples") {
    CoeffDomain q = CoeffDomain::rationals();
    std::vector<std::string> x{"x"};

    auto single = buchberger_field(gens({"x^2 - 1"}, x, q), MonomialOrder::grevlex(1));
    CHECK(ts::basis_strings(single, x) == std::multiset<std::string>{"x^2 - 1"});

    // {x - y, y - 1} under lex(x > y) reduces to {x - 1, y - 1}; confirmed by
    // the membership oracle in both directions.
    std::vector<std::string> xy{"x", "y"};
    auto lexgb = buchberger_field(gens({"x - y", "y - 1"}, xy, q, MonomialOrder::Kind::lex),
                                  MonomialOrder::lex(2));
    CHECK(ts::basis_strings(lexgb, xy) == std::multiset<std::string>{"x - 1", "y - 1"});
    for (const auto& e : gens({"x - 1", "y - 1", "x - y"}, xy, q, MonomialOrder::Kind::lex))
        CHECK(normal_form(e, lexgb).is_zero());

    auto unit = buchberger_field(gens({"x", "x - 1"}, x, q), MonomialOrder::grevlex(1));
    CHECK(ts::basis_strings(unit, x) == std::multiset<std::string>{"1"});
    CHECK(is_trivial(unit));
}

TEST_CASE("integer bases: frozen examples") {
    CoeffDomain z = CoeffDomain::integers();
    std::vector<std::string> x{"x"};

    auto gcd_basis = buchberger_integer(gens({"4", "6"}, {}, z), MonomialOrder::grevlex(0));
    CHECK(ts::basis_strings(gcd_basis, {}) == std::multiset<std::string>{"2"});

    // {2x, 3x} -> {x}; membership both ways.
    auto xonly = buchberger_integer(gens({"2*x", "3*x"}, x, z), MonomialOrder::grevlex(1));
    CHECK(ts::basis_strings(xonly, x) == std::multiset<std::string>{"x"});
    for (const auto& e : gens({"2*x", "3*x", "x"}, x, z)) CHECK(normal_form(e, xonly).is_zero());

    // {2, x - 1} is already strong: every S- and G-pair reduces to zero and
    // the tail -1 is not exactly divisible by 2.
    auto strong = buchberger_integer(gens({"2", "x - 1"}, x, z), MonomialOrder::grevlex(1));
    CHECK(ts::basis_strings(strong, x) == std::multiset<std::string>{"2", "x - 1"});
}

TEST_CASE("integer bases: harder hand-checked ideals") {
    CoeffDomain z = CoeffDomain::integers();
    std::vector<std::string> x{"x"};

    // 3(2x+1) - 2(3x+1) = 1: the whole ring
    auto unit = buchberger_integer(gens({"2*x + 1", "3*x + 1"}, x, z), MonomialOrder::grevlex(1));
    CHECK(is_trivial(unit));

    // (6, 10x): the GCD-polynomial of 6 and 10x contributes 2x
    auto mixed = buchberger_integer(gens({"6", "10*x"}, x, z), MonomialOrder::grevlex(1));
    CHECK(ts::basis_strings(mixed, x) == std::multiset<std::string>{"2*x", "6"});
    CHECK(normal_form(ts::expr("4*x", x, z), mixed).is_zero());
    CHECK_FALSE(normal_form(ts::expr("x", x, z), mixed).is_zero());
    CHECK_FALSE(normal_form(ts::expr("2", x, z), mixed).is_zero());

    // Z[x]/(x^2 - 2, 5x): 5x*x - 5(x^2 - 2) = 10 generates the contraction
    AlgebraPresentation a = ts::alg(
        R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["x^2 - 2", "5*x"]})");
    CHECK(characteristic(a) == 10);
}

TEST_CASE("field bases: a zero-dimensional system") {
    CoeffDomain q = CoeffDomain::rationals();
    std::vector<std::string> v{"x", "y", "z"};
    auto sys = gens({"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}, v, q);
    GroebnerBasis gb = buchberger_field(sys, MonomialOrder::grevlex(3));
    CHECK(ts::basis_is_sound(gb, sys));
    CHECK_FALSE(is_trivial(gb));
    std::vector<Monomial> lm;
    for (const auto& g : gb.elements) lm.push_back(g.leading_term().monomial);
    CHECK(independent_set_dimension(lm, 3) == 0);
}

TEST_CASE("normal form examples") {
    CoeffDomain q = CoeffDomain::rationals();
    CoeffDomain z = CoeffDomain::integers();
    std::vector<std::string> x{"x"};

    auto field_basis = buchberger_field(gens({"x - 1"}, x, q), MonomialOrder::grevlex(1));
    CHECK(normal_form(ts::expr("x - 1", x, q), field_basis).is_zero());
    CHECK(normal_form(ts::expr("x^2", x, q), field_basis).to_expression(x) == "1");

    auto two = buchberger_integer(gens({"2"}, x, z), MonomialOrder::grevlex(1));
    CHECK(normal_form(ts::expr("5", x, z), two).to_expression(x) == "1");
    CHECK(normal_form(ts::expr("2", x, z), two).is_zero());

    CHECK_THROWS_AS(normal_form(ts::expr("x", x, q), two), DomainMismatchError);
}

TEST_CASE("is_trivial detects unit constants") {
    CoeffDomain z = CoeffDomain::integers();
    CoeffDomain f2 = CoeffDomain::prime_field(2);
    std::vector<std::string> x{"x"};

    auto coprime = buchberger_integer(gens({"2", "3"}, {}, z), MonomialOrder::grevlex(0));
    CHECK(ts::basis_strings(coprime, {}) == std::multiset<std::string>{"1"});
    CHECK(is_trivial(coprime));

    auto nontrivial = buchberger_field(gens({"x"}, x, f2), MonomialOrder::grevlex(1));
    CHECK_FALSE(is_trivial(nontrivial));

    auto twoz = buchberger_integer(gens({"2"}, {}, z), MonomialOrder::grevlex(0));
    CHECK_FALSE(is_trivial(twoz));
}

TEST_CASE("buchberger_field rejects integer coefficients") {
    CoeffDomain z = CoeffDomain::integers();
    CHECK_THROWS_AS(buchberger_field(gens({"2*x"}, {"x"}, z), MonomialOrder::grevlex(1)),
                    DomainMismatchError);
}

TEST_CASE("characteristic: frozen examples with substitution oracle") {
    // Z[x]/(3x, x-2): substituting x = 2 sends the ideal onto (6), and the
    // normal forms of 2 and 3 are nonzero, so the characteristic is 6.
    AlgebraPresentation a =
        ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["3*x", "x - 2"]})");
    CHECK(characteristic(a) == 6);
    CoeffDomain z = CoeffDomain::integers();
    std::vector<std::string> x{"x"};
    auto gb = buchberger_integer(gens({"3*x", "x - 2"}, x, z), MonomialOrder::grevlex(1));
    CHECK_FALSE(normal_form(ts::expr("2", x, z), gb).is_zero());
    CHECK_FALSE(normal_form(ts::expr("3", x, z), gb).is_zero());
    CHECK(normal_form(ts::expr("6", x, z), gb).is_zero());

    CHECK(characteristic(
              ts::alg(R"({"base": {"kind": "Z"}, "vars": ["x"], "relations": ["x^2 - 2"]})")) == 0);
    CHECK(characteristic(ts::alg(R"({"base": {"kind": "Zmod", "n": 12}, "vars": ["x"]})")) == 12);
    CHECK(characteristic(
              ts::alg(R"({"base": {"kind": "Z"}, "vars": [], "relations": ["1"]})")) == 1);
    CHECK(characteristic(ts::alg(R"({"boolean_atoms": 4})")) == 2);
    CHECK_THROWS_AS(characteristic(ts::alg(R"({"base": {"kind": "Q"}, "vars": []})")),
                    ValidationError);
}

TEST_CASE("characteristic is zero exactly when no positive integer reduces to zero") {
    std::mt19937_64 rng(1001);
    RandomAlgebraOptions opts;
    opts.max_degree = 2;
    for (int i = 0; i < 60; ++i) {
        AlgebraPresentation a = random_affine_algebra(rng, BaseRing::integers(), opts);
        mpz_class c = characteristic(a);
        const auto& f = a.single();
        MonomialOrder order{MonomialOrder::Kind::grevlex, static_cast<int>(f.vars.size())};
        auto gb = buchberger_integer(f.relations, order);
        // candidate integers: divisors of any constant term that appears
        std::vector<mpz_class> candidates;
        for (const auto& r : f.relations)
            for (const auto& t : r.terms())
                if (t.monomial.is_unit()) {
                    mpz_class constant = t.coeff.integer();
                    if (constant < 0) constant = -constant;
                    if (constant > 0)
                        for (const auto& p : prime_divisors(constant)) candidates.push_back(p);
                }
        bool some_integer_vanishes = false;
        for (const auto& n : candidates) {
            Polynomial probe = Polynomial::constant(CoeffDomain::integers(), order, n);
            if (normal_form(probe, gb).is_zero()) some_integer_vanishes = true;
        }
        if (c == 0) {
            CHECK_FALSE(some_integer_vanishes);
        } else {
            Polynomial probe = Polynomial::constant(CoeffDomain::integers(), order, c);
            CHECK(normal_form(probe, gb).is_zero());
        }
    }
}

TEST_CASE("random bases are sound and decide membership (all domains)") {
    std::mt19937_64 rng(42);
    std::vector<CoeffDomain> domains = {CoeffDomain::rationals(), CoeffDomain::prime_field(2),
                                        CoeffDomain::prime_field(5), CoeffDomain::integers()};
    for (const auto& domain : domains) {
        for (int i = 0; i < 25; ++i) {
            MonomialOrder order{MonomialOrder::Kind::grevlex,
                                static_cast<int>(rand_range(rng, 0, 3))};
            std::vector<Polynomial> g;
            int count = static_cast<int>(rand_range(rng, 1, 3));
            for (int k = 0; k < count; ++k) {
                Polynomial p = random_polynomial(rng, domain, order, 2, -5, 5, 3);
                if (!p.is_zero()) g.push_back(p);
            }
            GroebnerBasis gb = groebner_basis(g, order);
            CHECK(ts::basis_is_sound(gb, g));

            // is_trivial agrees with membership of 1
            Polynomial one = Polynomial::constant(domain, order, 1);
            CHECK(is_trivial(gb) == normal_form(one, gb).is_zero());

            // random ideal combinations reduce to zero
            for (int probe = 0; probe < 10 && !g.empty(); ++probe) {
                Polynomial combo = Polynomial::zero(domain, order);
                for (const auto& gen : g) {
                    Polynomial multiplier = random_polynomial(rng, domain, order, 1, -3, 3, 2);
                    combo = combo + gen * multiplier;
                }
                CHECK(normal_form(combo, gb).is_zero());
            }
        }
    }
}

TEST_CASE("pair pruning does not change the reduced basis") {
    std::mt19937_64 rng(4242);
    CoeffDomain q = CoeffDomain::rationals();
    for (int i = 0; i < 30; ++i) {
        MonomialOrder order{MonomialOrder::Kind::grevlex, 3};
        std::vector<Polynomial> g;
        for (int k = 0; k < 3; ++k) {
            Polynomial p = random_polynomial(rng, q, order, 2, -4, 4, 3);
            if (!p.is_zero()) g.push_back(p);
        }
        auto plain = buchberger_field(g, order, {.pair_pruning = false});
        auto pruned = buchberger_field(g, order, {.pair_pruning = true});
        REQUIRE(plain.elements.size() == pruned.elements.size());
        for (size_t k = 0; k < plain.elements.size(); ++k)
            CHECK(plain.elements[k] == pruned.elements[k]);
    }
}

TEST_CASE("generator order does not change the output basis") {
    CoeffDomain q = CoeffDomain::rationals();
    std::vector<std::string> xyz{"x", "y", "z"};
    auto g1 = gens({"x*y - z", "y*z - 1", "x - z^2"}, xyz, q);
    auto g2 = g1;
    std::reverse(g2.begin(), g2.end());
    auto b1 = buchberger_field(g1, MonomialOrder::grevlex(3));
    auto b2 = buchberger_field(g2, MonomialOrder::grevlex(3));
    REQUIRE(b1.elements.size() == b2.elements.size());
    for (size_t i = 0; i < b1.elements.size(); ++i) CHECK(b1.elements[i] == b2.elements[i]);
}

TEST_CASE("debug dump prints one polynomial per line") {
    CoeffDomain z = CoeffDomain::integers();
    std::vector<std::string> x{"x"};
    auto gb = buchberger_integer(gens({"2", "x - 1"}, x, z), MonomialOrder::grevlex(1));
    CHECK(to_text(gb, x) == "2\nx - 1\n");
}
