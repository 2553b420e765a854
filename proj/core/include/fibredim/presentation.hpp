#pragma once

#include <string>
#include <vector>

#include "fibredim/polynomial.hpp"

namespace fibredim {

/// Base ring of an algebra presentation: Z, Z/n (n >= 2), F_p, or Q.
struct BaseRing {
    enum class Kind { integers, modular, prime_field, rationals };

    Kind kind = Kind::integers;
    mpz_class modulus;  // Zmod: n >= 2; Fp: prime p

    static BaseRing integers() { return {Kind::integers, 0}; }
    static BaseRing rationals() { return {Kind::rationals, 0}; }
    static BaseRing modular(mpz_class n);
    static BaseRing prime_field(mpz_class p);

    /// Natural coefficient domain of relation polynomials: Z for Z and Z/n
    /// (relations are lifted), F_p for F_p, Q for Q.
    CoeffDomain coefficient_domain() const;

    bool operator==(const BaseRing& o) const {
        return kind == o.kind &&
               ((kind != Kind::modular && kind != Kind::prime_field) || modulus == o.modulus);
    }
    bool operator!=(const BaseRing& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// One affine factor: base[vars] / (relations).
struct AffinePresentation {
    BaseRing base;
    std::vector<std::string> vars;
    std::vector<Polynomial> relations;
};

/// The universal input object: an affine presentation or a finite product of
/// affine presentations over one base.
class AlgebraPresentation {
public:
    static AlgebraPresentation affine(AffinePresentation factor);
    static AlgebraPresentation product(std::vector<AffinePresentation> factors);

    bool is_product() const { return product_; }
    const std::vector<AffinePresentation>& factors() const { return factors_; }
    const AffinePresentation& single() const;
    const BaseRing& base() const { return factors_.front().base; }

    bool operator==(const AlgebraPresentation& rhs) const;
    bool operator!=(const AlgebraPresentation& rhs) const { return !(*this == rhs); }

private:
    AlgebraPresentation() = default;

    std::vector<AffinePresentation> factors_;
    bool product_ = false;
};

/// Tensor product of presentations over the shared base. Affine factors
/// concatenate (variables renamed apart on clashes, relations united);
/// products distribute pairwise.
AlgebraPresentation tensor_presentation(const AlgebraPresentation& a,
                                        const AlgebraPresentation& b);

/// Product of k copies of Z[]/(2) over base Z: the representable Boolean
/// rings F_2^k. Expansion target of the boolean_atoms DSL sugar.
AlgebraPresentation boolean_atoms(int k, MonomialOrder::Kind order_kind);

/// A[X] for a fresh variable name: tensor with base[X].
AlgebraPresentation adjoin_variable(const AlgebraPresentation& a, const std::string& name);

/// True when the presentation is exactly a boolean_atoms expansion (every
/// factor is Z[]/(2)); used to route tensor checks through the Boolean path.
bool is_boolean_atoms_presentation(const AlgebraPresentation& a);

}  // namespace fibredim
