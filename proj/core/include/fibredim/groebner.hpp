#pragma once

#include <span>
#include <string>
#include <vector>

#include "fibredim/polynomial.hpp"
#include "fibredim/presentation.hpp"

namespace fibredim {

/// FieldReduced: the unique reduced basis (monic, pairwise reduced).
/// IntegerStrong: every ideal element's leading term is divisible, coefficient
/// included, by some basis leading term.
enum class BasisStrength { field_reduced, integer_strong };

struct GroebnerBasis {
    CoeffDomain domain;
    MonomialOrder order;
    std::vector<Polynomial> elements;
    BasisStrength strength = BasisStrength::field_reduced;
};

struct BuchbergerOptions {
    /// Chain-criterion pair pruning. Off by default; the output basis is
    /// identical either way.
    bool pair_pruning = false;
};

/// Reduced Groebner basis over F_p or Q. Deterministic for fixed input and
/// order. Rejects integer coefficients. The first form deduces the domain
/// from the generators (rationals when the list is empty).
GroebnerBasis buchberger_field(std::span<const Polynomial> gens, const MonomialOrder& order,
                               const BuchbergerOptions& options = {});
GroebnerBasis buchberger_field(std::span<const Polynomial> gens, const CoeffDomain& domain,
                               const MonomialOrder& order, const BuchbergerOptions& options = {});

/// Strong Groebner basis over Z via S- and GCD-polynomials. Leading
/// coefficients are normalized positive; tails are reduced by exact division
/// only, so membership is decided exactly by normal_form.
GroebnerBasis buchberger_integer(std::span<const Polynomial> gens, const MonomialOrder& order,
                                 const BuchbergerOptions& options = {});

/// Dispatch on the coefficient domain.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order,
                             const BuchbergerOptions& options = {});

/// Remainder of f with no term reducible by the basis. Field bases divide
/// leading coefficients exactly; the integer basis reduces each coefficient to
/// its least non-negative Euclidean residue, which is canonical on strong
/// bases. f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// True iff the ideal is the whole ring: the basis contains a unit constant.
bool is_trivial(const GroebnerBasis& gb);

/// Characteristic of a presentation over base Z or Z/n: the non-negative
/// generator of (lifted relations) ∩ Z, read off the strong basis constant.
/// 0 when no nonzero integer lies in the ideal; 1 iff the zero ring. Products
/// combine factor characteristics by lcm (0 absorbing).
mpz_class characteristic(const AlgebraPresentation& a);

/// Debug dump: one polynomial per line, terms in order.
std::string to_text(const GroebnerBasis& gb, const std::vector<std::string>& vars);

}  // namespace fibredim
