#include "fibredim/random_gen.hpp"

namespace fibredim {

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Polynomial random_polynomial(std::mt19937_64& rng, const CoeffDomain& domain,
                             const MonomialOrder& order, unsigned max_degree, long coeff_min,
                             long coeff_max, int max_terms) {
    std::vector<Term> terms;
    int count = static_cast<int>(rand_range(rng, 1, max_terms));
    for (int t = 0; t < count; ++t) {
        std::vector<unsigned> exps(static_cast<size_t>(order.var_count), 0);
        unsigned degree = static_cast<unsigned>(rand_range(rng, 0, static_cast<long>(max_degree)));
        for (unsigned d = 0; d < degree && order.var_count > 0; ++d) {
            exps[static_cast<size_t>(rand_range(rng, 0, order.var_count - 1))] += 1;
        }
        long c = rand_range(rng, coeff_min, coeff_max);
        terms.push_back({Monomial(std::move(exps)), Coefficient(domain, mpz_class(c))});
    }
    return Polynomial::normalized(std::move(terms), domain, order);
}

AlgebraPresentation random_affine_algebra(std::mt19937_64& rng, const BaseRing& base,
                                          const RandomAlgebraOptions& options) {
    AffinePresentation f;
    f.base = base;
    int vars = static_cast<int>(rand_range(rng, 0, options.max_vars));
    for (int i = 0; i < vars; ++i) f.vars.push_back("x" + std::to_string(i));

    CoeffDomain domain = base.coefficient_domain();
    MonomialOrder order{options.order_kind, vars};
    int relations = static_cast<int>(rand_range(rng, 0, options.max_relations));
    for (int i = 0; i < relations; ++i) {
        Polynomial r = random_polynomial(rng, domain, order, options.max_degree, options.coeff_min,
                                         options.coeff_max, options.max_terms);
        if (!r.is_zero()) f.relations.push_back(std::move(r));
    }
    if (options.force_nonzero_characteristic && base.kind == BaseRing::Kind::integers) {
        f.relations.push_back(Polynomial::constant(domain, order, mpz_class(rand_range(rng, 2, 60))));
    }
    return AlgebraPresentation::affine(std::move(f));
}

}  // namespace fibredim
