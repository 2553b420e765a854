#pragma once

#include <random>

#include "fibredim/presentation.hpp"

namespace fibredim {

/// Seed-stable random instances for randomized suites. Draws go through
/// modulo reduction on the raw engine output, so a fixed seed reproduces the
/// same instances on any platform.
struct RandomAlgebraOptions {
    int max_vars = 3;
    int max_relations = 3;
    unsigned max_degree = 2;
    long coeff_min = -10;
    long coeff_max = 10;
    int max_terms = 3;
    /// Adds one constant relation in [2, 60], forcing a nonzero characteristic
    /// over base Z.
    bool force_nonzero_characteristic = false;
    MonomialOrder::Kind order_kind = MonomialOrder::Kind::grevlex;
};

long rand_range(std::mt19937_64& rng, long lo, long hi);

Polynomial random_polynomial(std::mt19937_64& rng, const CoeffDomain& domain,
                             const MonomialOrder& order, unsigned max_degree, long coeff_min,
                             long coeff_max, int max_terms);

AlgebraPresentation random_affine_algebra(std::mt19937_64& rng, const BaseRing& base,
                                          const RandomAlgebraOptions& options);

}  // namespace fibredim
