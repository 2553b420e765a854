#include <doctest.h>
#include <fibredim/random_gen.hpp>

#include <random>

#include "test_support.hpp"

using namespace fibredim;

namespace {

Polynomial raw_normalize(std::vector<std::pair<std::string, long>> terms,
                         const std::vector<std::string>& vars, const CoeffDomain& domain) {
    // one entry per term: a monomial expression and an integer coefficient
    MonomialOrder order{MonomialOrder::Kind::grevlex, static_cast<int>(vars.size())};
    std::vector<Term> raw;
    for (auto& [mono_expr, c] : terms) {
        Polynomial m = parse_expression(mono_expr, vars, domain, order);
        raw.push_back({m.leading_term().monomial, Coefficient(domain, mpz_class(c))});
    }
    return Polynomial::normalized(std::move(raw), domain, order);
}

}  // namespace

TEST_CASE("normalize merges, drops zeros, is idempotent") {
    std::vector<std::string> vars{"x"};
    CoeffDomain z = CoeffDomain::integers();

    // x + x over Z -> 2x
    Polynomial merged = raw_normalize({{"x", 1}, {"x", 1}}, vars, z);
    CHECK(merged.to_expression(vars) == "2*x");

    // 3x^2 + x over F_3 -> x
    CoeffDomain f3 = CoeffDomain::prime_field(3);
    Polynomial dropped = raw_normalize({{"x^2", 3}, {"x", 1}}, vars, f3);
    CHECK(dropped.to_expression(vars) == "x");

    // empty list -> zero
    MonomialOrder o1{MonomialOrder::Kind::grevlex, 1};
    CHECK(Polynomial::normalized({}, z, o1).is_zero());
}

TEST_CASE("normalize rejects mixed domains and bad monomial lengths") {
    MonomialOrder o1{MonomialOrder::Kind::grevlex, 1};
    CoeffDomain z = CoeffDomain::integers();
    std::vector<Term> mixed;
    mixed.push_back({Monomial::unit(1), Coefficient(z, mpz_class(1))});
    mixed.push_back({Monomial::unit(1), Coefficient(CoeffDomain::rationals(), mpz_class(1))});
    CHECK_THROWS_AS(Polynomial::normalized(std::move(mixed), z, o1), DomainMismatchError);

    std::vector<Term> short_monomial;
    short_monomial.push_back({Monomial::unit(2), Coefficient(z, mpz_class(1))});
    CHECK_THROWS_AS(Polynomial::normalized(std::move(short_monomial), z, o1), ValidationError);
}

TEST_CASE("multiplication examples") {
    std::vector<std::string> vars{"x"};
    CoeffDomain q = CoeffDomain::rationals();
    Polynomial a = ts::expr("x + 1", vars, q);
    Polynomial b = ts::expr("x - 1", vars, q);
    CHECK((a * b).to_expression(vars) == "x^2 - 1");

    MonomialOrder o1{MonomialOrder::Kind::grevlex, 1};
    CHECK((a * Polynomial::zero(q, o1)).is_zero());

    CoeffDomain f2 = CoeffDomain::prime_field(2);
    Polynomial frob = ts::expr("(x + 1)^2", vars, f2);
    CHECK(frob.to_expression(vars) == "x^2 + 1");
}

TEST_CASE("normalize is idempotent and mul is a commutative ring op (randomized)") {
    std::mt19937_64 rng(20240817);
    for (const CoeffDomain& domain : {CoeffDomain::integers(), CoeffDomain::rationals(),
                                      CoeffDomain::prime_field(5)}) {
        for (int round = 0; round < 350; ++round) {
            MonomialOrder order{round % 2 == 0 ? MonomialOrder::Kind::grevlex
                                               : MonomialOrder::Kind::lex,
                                static_cast<int>(rand_range(rng, 0, 3))};
            Polynomial a = random_polynomial(rng, domain, order, 3, -6, 6, 4);
            Polynomial b = random_polynomial(rng, domain, order, 3, -6, 6, 4);
            Polynomial c = random_polynomial(rng, domain, order, 2, -6, 6, 3);

            CHECK(Polynomial::normalized(a.terms(), domain, order) == a);  // idempotent
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("orders rank terms as expected") {
    std::vector<std::string> vars{"x", "y"};
    CoeffDomain q = CoeffDomain::rationals();
    Polynomial grev = ts::expr("x^2 + x*y^2 + y", vars, q, MonomialOrder::Kind::grevlex);
    CHECK(grev.to_expression(vars) == "x*y^2 + x^2 + y");
    Polynomial lex = ts::expr("x^2 + x*y^2 + y", vars, q, MonomialOrder::Kind::lex);
    CHECK(lex.to_expression(vars) == "x^2 + x*y^2 + y");
}

TEST_CASE("embedding shifts variables") {
    std::vector<std::string> vars{"x"};
    CoeffDomain z = CoeffDomain::integers();
    Polynomial p = ts::expr("x^2 - 3", vars, z);
    Polynomial e = p.embedded(3, 1);
    CHECK(e.var_count() == 3);
    CHECK(e.to_expression({"a", "x", "b"}) == "x^2 - 3");
}
