#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibredim/dimension.hpp"
#include "fibredim/presentation.hpp"

namespace fibredim {

/// Point of the base spectrum: the generic point (zero ideal of Z or Q) or a
/// closed point (p) for a prime p. The zero ideal of F_p is encoded as the
/// closed point at p.
struct SpecPoint {
    enum class Kind { generic, closed };

    Kind kind = Kind::generic;
    mpz_class prime;  // closed points only

    static SpecPoint generic() { return {Kind::generic, 0}; }
    static SpecPoint closed(mpz_class p);

    bool is_generic() const { return kind == Kind::generic; }

    bool operator==(const SpecPoint& o) const {
        return kind == o.kind && (kind == Kind::generic || prime == o.prime);
    }
    bool operator!=(const SpecPoint& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// Throws ValidationError when the point is incompatible with the base
/// (generic only over Z and Q; closed p | n over Z/n; closed p over F_p).
void validate_point(const BaseRing& base, const SpecPoint& pt);

struct FibreComponent {
    std::vector<std::string> vars;
    std::vector<Polynomial> relations;  // coefficients in the fibre field
};

/// The residue-field scalar extension of a presentation at a base point: a
/// finitely presented algebra over F_p or Q, one component per source factor.
struct FibreRing {
    CoeffDomain field;
    std::vector<FibreComponent> components;
    SpecPoint point;
    MonomialOrder::Kind order_kind = MonomialOrder::Kind::grevlex;

    /// The only component; witness operations require an affine fibre.
    const FibreComponent& single() const;
    MonomialOrder component_order(size_t i) const;
};

/// Effective spectrum of the base with respect to an algebra. When `cofinite`
/// is set (base Z, characteristic zero only) the effective closed points are
/// all primes except `closed_points`; otherwise `closed_points` lists them.
struct EffectiveSpectrum {
    bool includes_generic = false;
    bool cofinite = false;
    std::vector<mpz_class> closed_points;  // sorted ascending

    bool is_empty() const { return !includes_generic && !cofinite && closed_points.empty(); }
    bool contains_closed(const mpz_class& p) const;

    bool operator==(const EffectiveSpectrum& o) const {
        return includes_generic == o.includes_generic && cofinite == o.cofinite &&
               closed_points == o.closed_points;
    }
    bool operator!=(const EffectiveSpectrum& o) const { return !(*this == o); }

    static EffectiveSpectrum intersect(const EffectiveSpectrum& a, const EffectiveSpectrum& b);
    static EffectiveSpectrum unite(const EffectiveSpectrum& a, const EffectiveSpectrum& b);
};

/// Generators of an ideal of a fibre ring, asserted prime by the caller.
struct PrimeWitness {
    std::vector<Polynomial> generators;  // in the fibre's variables and field
};

/// Witnesses asserted to be the minimal primes of a fibre ring.
struct ComponentList {
    std::vector<PrimeWitness> components;
};

FibreRing fibre_at(const AlgebraPresentation& a, const SpecPoint& pt);
bool is_effective(const AlgebraPresentation& a, const SpecPoint& pt);
EffectiveSpectrum effective_spectrum(const AlgebraPresentation& a);
DimensionValue effective_dim(const AlgebraPresentation& a);
DimensionValue effective_dim(const EffectiveSpectrum& spectrum, const BaseRing& base);

/// Krull dimension of the fibre: Empty iff the zero ring, otherwise the
/// independent-set dimension, maximized over components.
DimensionValue krull_dim_affine(const FibreRing& fr,
                                SubsetSearch mode = SubsetSearch::pruned);

DimensionValue dim_at(const AlgebraPresentation& a, const SpecPoint& pt);
DimensionValue fibre_dim(const AlgebraPresentation& a);
/// Transcendence degree of the fibre over its residue field; equals the Krull
/// dimension for these finitely generated algebras.
DimensionValue td_at(const AlgebraPresentation& a, const SpecPoint& pt);

/// Dimension of fibre/(extra); Empty when the quotient is the zero ring.
/// Requires an affine fibre.
DimensionValue fibre_quotient_dim(const FibreRing& fr, const std::vector<Polynomial>& extra);

/// Exact height of the witness prime under the asserted component list:
/// max over components q contained in P of dim(fr/q) - dim(fr/P). Exact when
/// the components are the true minimal primes (affine algebras are catenary).
DimensionValue height_at(const FibreRing& fr, const PrimeWitness& prime,
                         const ComponentList& comps);

struct AltitudeCheck {
    bool holds = false;
    DimensionValue height;
    DimensionValue td_quotient;   // dim of fibre/P
    DimensionValue td_localized;  // max over components inside P of dim(fibre/q)
};

/// Altitude-formula check at an effective point: height + td_quotient must
/// equal td_localized for the witnessed prime.
AltitudeCheck altitude_check(const AlgebraPresentation& a, const SpecPoint& pt,
                             const PrimeWitness& prime, const ComponentList& comps);
bool verify_af_at_prime(const AlgebraPresentation& a, const SpecPoint& pt,
                        const PrimeWitness& prime, const ComponentList& comps);

struct SeidenbergBounds {
    DimensionValue lower;  // fibre dimension
    DimensionValue upper;  // f + (1+f) * e
    std::optional<DimensionValue> dim_if_known;   // set exactly when e == 0 (or the zero ring)
    std::optional<DimensionValue> refined_lower;  // e + f, pure polynomial rings only
};

SeidenbergBounds seidenberg_bounds(const AlgebraPresentation& a);

struct WitnessData {
    SpecPoint point;
    PrimeWitness prime;
    ComponentList components;
};

/// Parse a witness file {"fibre": {"at": p} | "generic", "prime": [expr...],
/// "components": [[expr...]...]} against the algebra's fibre at that point.
WitnessData parse_witness(std::string_view text, const AlgebraPresentation& a,
                          MonomialOrder::Kind order_kind = MonomialOrder::Kind::grevlex);

/// Maximal effective primes, for reports: closed points when any exist,
/// otherwise the generic point if present.
struct MaximalPoints {
    bool generic_only = false;
    bool cofinite = false;
    std::vector<mpz_class> closed_points;
};
MaximalPoints maximal_effective_points(const EffectiveSpectrum& spectrum);

}  // namespace fibredim
