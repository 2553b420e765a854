#include "fibredim/spectra.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "fibredim/dsl.hpp"
#include "fibredim/numeric.hpp"

namespace fibredim {

SpecPoint SpecPoint::closed(mpz_class p) {
    if (!is_probable_prime(p))
        throw ValidationError("closed point " + p.get_str() + " is not prime");
    return {Kind::closed, std::move(p)};
}

std::string SpecPoint::to_string() const {
    return kind == Kind::generic ? "generic" : "(" + prime.get_str() + ")";
}

void validate_point(const BaseRing& base, const SpecPoint& pt) {
    switch (base.kind) {
        case BaseRing::Kind::integers:
            return;  // generic and every closed prime
        case BaseRing::Kind::rationals:
            if (!pt.is_generic())
                throw ValidationError("base Q has only the generic point");
            return;
        case BaseRing::Kind::modular:
            if (pt.is_generic() || base.modulus % pt.prime != 0)
                throw ValidationError("point " + pt.to_string() + " is not a prime divisor of " +
                                      base.modulus.get_str());
            return;
        case BaseRing::Kind::prime_field:
            if (pt.is_generic() || pt.prime != base.modulus)
                throw ValidationError("base " + base.to_string() + " has the single point (" +
                                      base.modulus.get_str() + ")");
            return;
    }
}

const FibreComponent& FibreRing::single() const {
    if (components.size() != 1)
        throw UnsupportedConfigError(
            "witness operations require an affine (single factor) fibre; this fibre is a product "
            "of " +
            std::to_string(components.size()) + " factors");
    return components.front();
}

MonomialOrder FibreRing::component_order(size_t i) const {
    return {order_kind, static_cast<int>(components.at(i).vars.size())};
}

bool EffectiveSpectrum::contains_closed(const mpz_class& p) const {
    bool listed = std::binary_search(closed_points.begin(), closed_points.end(), p);
    return cofinite ? !listed : listed;
}

namespace {

std::vector<mpz_class> sorted_unique(std::vector<mpz_class> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<mpz_class> set_union(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<mpz_class> set_intersection(const std::vector<mpz_class>& a,
                                        const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<mpz_class> set_difference(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

EffectiveSpectrum EffectiveSpectrum::intersect(const EffectiveSpectrum& a,
                                               const EffectiveSpectrum& b) {
    EffectiveSpectrum out;
    out.includes_generic = a.includes_generic && b.includes_generic;
    if (a.cofinite && b.cofinite) {
        out.cofinite = true;
        out.closed_points = set_union(a.closed_points, b.closed_points);
    } else if (a.cofinite) {
        out.closed_points = set_difference(b.closed_points, a.closed_points);
    } else if (b.cofinite) {
        out.closed_points = set_difference(a.closed_points, b.closed_points);
    } else {
        out.closed_points = set_intersection(a.closed_points, b.closed_points);
    }
    return out;
}

EffectiveSpectrum EffectiveSpectrum::unite(const EffectiveSpectrum& a, const EffectiveSpectrum& b) {
    EffectiveSpectrum out;
    out.includes_generic = a.includes_generic || b.includes_generic;
    if (a.cofinite && b.cofinite) {
        out.cofinite = true;
        out.closed_points = set_intersection(a.closed_points, b.closed_points);
    } else if (a.cofinite) {
        out.cofinite = true;
        out.closed_points = set_difference(a.closed_points, b.closed_points);
    } else if (b.cofinite) {
        out.cofinite = true;
        out.closed_points = set_difference(b.closed_points, a.closed_points);
    } else {
        out.closed_points = set_union(a.closed_points, b.closed_points);
    }
    return out;
}

namespace {

MonomialOrder::Kind deduce_order_kind(const AlgebraPresentation& a) {
    for (const auto& f : a.factors())
        for (const auto& r : f.relations) return r.order().kind;
    return MonomialOrder::Kind::grevlex;
}

FibreComponent fibre_component(const AffinePresentation& f, const SpecPoint& pt) {
    FibreComponent out;
    out.vars = f.vars;
    for (const auto& r : f.relations) {
        Polynomial image = [&]() {
            switch (f.base.kind) {
                case BaseRing::Kind::integers:
                case BaseRing::Kind::modular:
                    return pt.is_generic() ? r.over_rationals() : r.reduced_mod(pt.prime);
                case BaseRing::Kind::prime_field:
                case BaseRing::Kind::rationals:
                    return r;
            }
            throw ValidationError("unreachable");
        }();
        if (!image.is_zero()) out.relations.push_back(std::move(image));
    }
    return out;
}

GroebnerBasis component_basis(const FibreComponent& comp, const CoeffDomain& field,
                              MonomialOrder::Kind kind) {
    MonomialOrder order{kind, static_cast<int>(comp.vars.size())};
    return buchberger_field(comp.relations, field, order);
}

// Integer strong basis of one factor's lifted ideal (the Z/n modulus joins
// the relation list).
GroebnerBasis lifted_integer_basis(const AffinePresentation& f, MonomialOrder::Kind kind) {
    MonomialOrder order{kind, static_cast<int>(f.vars.size())};
    std::vector<Polynomial> gens = f.relations;
    if (f.base.kind == BaseRing::Kind::modular)
        gens.push_back(Polynomial::constant(CoeffDomain::integers(), order, f.base.modulus));
    return buchberger_integer(gens, order);
}

// Primes dividing some leading coefficient of the strong basis: away from
// these the reduced basis keeps its leading monomials, so the fibre matches
// the generic one in both effectivity and dimension.
std::vector<mpz_class> sieve_candidates(const GroebnerBasis& zgb) {
    std::vector<mpz_class> primes;
    for (const auto& g : zgb.elements) {
        mpz_class lc = g.leading_term().coeff.integer();
        if (lc < 0) lc = -lc;
        for (const auto& p : prime_divisors(lc)) primes.push_back(p);
    }
    return sorted_unique(std::move(primes));
}

EffectiveSpectrum effective_spectrum_affine(const AffinePresentation& f,
                                            MonomialOrder::Kind kind) {
    EffectiveSpectrum out;
    AlgebraPresentation wrapped = AlgebraPresentation::affine(f);
    switch (f.base.kind) {
        case BaseRing::Kind::rationals:
            out.includes_generic = is_effective(wrapped, SpecPoint::generic());
            return out;
        case BaseRing::Kind::prime_field: {
            SpecPoint pt = SpecPoint::closed(f.base.modulus);
            if (is_effective(wrapped, pt)) out.closed_points.push_back(f.base.modulus);
            return out;
        }
        case BaseRing::Kind::modular: {
            for (const auto& p : prime_divisors(f.base.modulus)) {
                if (is_effective(wrapped, SpecPoint::closed(p))) out.closed_points.push_back(p);
            }
            return out;
        }
        case BaseRing::Kind::integers: {
            GroebnerBasis zgb = lifted_integer_basis(f, kind);
            mpz_class character = 0;
            for (const auto& g : zgb.elements) {
                if (g.is_constant() && !g.is_zero()) {
                    character = g.leading_term().coeff.integer();
                    break;
                }
            }
            if (character == 1) return out;  // zero ring
            if (character != 0) {
                for (const auto& p : prime_divisors(character)) {
                    if (is_effective(wrapped, SpecPoint::closed(p))) out.closed_points.push_back(p);
                }
                return out;
            }
            out.includes_generic = true;
            out.cofinite = true;
            for (const auto& p : sieve_candidates(zgb)) {
                if (!is_effective(wrapped, SpecPoint::closed(p))) out.closed_points.push_back(p);
            }
            return out;
        }
    }
    throw ValidationError("unreachable");
}

}  // namespace

FibreRing fibre_at(const AlgebraPresentation& a, const SpecPoint& pt) {
    validate_point(a.base(), pt);
    FibreRing fr;
    fr.point = pt;
    fr.order_kind = deduce_order_kind(a);
    if (pt.is_generic())
        fr.field = CoeffDomain::rationals();
    else
        fr.field = CoeffDomain::prime_field(pt.prime);
    for (const auto& f : a.factors()) fr.components.push_back(fibre_component(f, pt));
    return fr;
}

bool is_effective(const AlgebraPresentation& a, const SpecPoint& pt) {
    FibreRing fr = fibre_at(a, pt);
    for (size_t i = 0; i < fr.components.size(); ++i) {
        if (!is_trivial(component_basis(fr.components[i], fr.field, fr.order_kind))) return true;
    }
    return false;
}

EffectiveSpectrum effective_spectrum(const AlgebraPresentation& a) {
    MonomialOrder::Kind kind = deduce_order_kind(a);
    EffectiveSpectrum out;
    bool first = true;
    for (const auto& f : a.factors()) {
        EffectiveSpectrum s = effective_spectrum_affine(f, kind);
        out = first ? s : EffectiveSpectrum::unite(out, s);
        first = false;
    }
    return out;
}

DimensionValue effective_dim(const EffectiveSpectrum& spectrum, const BaseRing& base) {
    if (spectrum.is_empty()) return DimensionValue::empty();
    if (base.kind == BaseRing::Kind::integers) {
        if (spectrum.cofinite) return DimensionValue::finite(1);
        if (spectrum.includes_generic && !spectrum.closed_points.empty())
            return DimensionValue::finite(1);
    }
    return DimensionValue::finite(0);
}

DimensionValue effective_dim(const AlgebraPresentation& a) {
    return effective_dim(effective_spectrum(a), a.base());
}

DimensionValue krull_dim_affine(const FibreRing& fr, SubsetSearch mode) {
    DimensionValue best = DimensionValue::empty();
    for (size_t i = 0; i < fr.components.size(); ++i) {
        const FibreComponent& comp = fr.components[i];
        best = DimensionValue::max(
            best, krull_dim_ideal(comp.relations, fr.field, fr.component_order(i), mode));
    }
    return best;
}

DimensionValue dim_at(const AlgebraPresentation& a, const SpecPoint& pt) {
    return krull_dim_affine(fibre_at(a, pt));
}

namespace {

DimensionValue fibre_dim_affine(const AffinePresentation& f, MonomialOrder::Kind kind) {
    AlgebraPresentation wrapped = AlgebraPresentation::affine(f);
    switch (f.base.kind) {
        case BaseRing::Kind::rationals:
            return dim_at(wrapped, SpecPoint::generic());
        case BaseRing::Kind::prime_field:
            return dim_at(wrapped, SpecPoint::closed(f.base.modulus));
        case BaseRing::Kind::modular: {
            DimensionValue best = DimensionValue::empty();
            for (const auto& p : prime_divisors(f.base.modulus))
                best = DimensionValue::max(best, dim_at(wrapped, SpecPoint::closed(p)));
            return best;
        }
        case BaseRing::Kind::integers: {
            GroebnerBasis zgb = lifted_integer_basis(f, kind);
            mpz_class character = 0;
            for (const auto& g : zgb.elements) {
                if (g.is_constant() && !g.is_zero()) {
                    character = g.leading_term().coeff.integer();
                    break;
                }
            }
            if (character == 1) return DimensionValue::empty();
            if (character != 0) {
                DimensionValue best = DimensionValue::empty();
                for (const auto& p : prime_divisors(character))
                    best = DimensionValue::max(best, dim_at(wrapped, SpecPoint::closed(p)));
                return best;
            }
            // Characteristic zero: the supremum is attained at the generic
            // point or at a sieve candidate; other fibres share the generic
            // leading monomials.
            DimensionValue best = dim_at(wrapped, SpecPoint::generic());
            for (const auto& p : sieve_candidates(zgb))
                best = DimensionValue::max(best, dim_at(wrapped, SpecPoint::closed(p)));
            return best;
        }
    }
    throw ValidationError("unreachable");
}

}  // namespace

DimensionValue fibre_dim(const AlgebraPresentation& a) {
    MonomialOrder::Kind kind = deduce_order_kind(a);
    DimensionValue best = DimensionValue::empty();
    for (const auto& f : a.factors())
        best = DimensionValue::max(best, fibre_dim_affine(f, kind));
    return best;
}

DimensionValue td_at(const AlgebraPresentation& a, const SpecPoint& pt) { return dim_at(a, pt); }

namespace {

// Dimension of fibre/(extra generators); Empty means the quotient is trivial.
DimensionValue quotient_dim(const FibreRing& fr, const std::vector<Polynomial>& extra) {
    const FibreComponent& comp = fr.single();
    std::vector<Polynomial> gens = comp.relations;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return krull_dim_ideal(gens, fr.field, fr.component_order(0));
}

GroebnerBasis quotient_basis(const FibreRing& fr, const std::vector<Polynomial>& extra) {
    const FibreComponent& comp = fr.single();
    std::vector<Polynomial> gens = comp.relations;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return buchberger_field(gens, fr.field, fr.component_order(0));
}

// q ⊆ P, decided by normal forms of q's generators against P's basis.
bool contained_in(const PrimeWitness& q, const GroebnerBasis& p_basis) {
    for (const auto& g : q.generators)
        if (!normal_form(g, p_basis).is_zero()) return false;
    return true;
}

void validate_components(const FibreRing& fr, const ComponentList& comps) {
    std::vector<GroebnerBasis> bases;
    for (const auto& q : comps.components) {
        GroebnerBasis b = quotient_basis(fr, q.generators);
        if (is_trivial(b))
            throw InconsistentWitnessError("a listed component is not a proper ideal of the fibre");
        bases.push_back(std::move(b));
    }
    for (size_t i = 0; i < comps.components.size(); ++i) {
        for (size_t j = 0; j < comps.components.size(); ++j) {
            if (i == j) continue;
            if (contained_in(comps.components[i], bases[j]))
                throw InconsistentWitnessError(
                    "listed components are not pairwise incomparable (component " +
                    std::to_string(i) + " lies inside component " + std::to_string(j) + ")");
        }
    }
}

}  // namespace

DimensionValue fibre_quotient_dim(const FibreRing& fr, const std::vector<Polynomial>& extra) {
    return quotient_dim(fr, extra);
}

DimensionValue height_at(const FibreRing& fr, const PrimeWitness& prime,
                         const ComponentList& comps) {
    GroebnerBasis p_basis = quotient_basis(fr, prime.generators);
    if (is_trivial(p_basis))
        throw InconsistentWitnessError("the witness ideal is not proper in the fibre");
    validate_components(fr, comps);
    DimensionValue dim_p = quotient_dim(fr, prime.generators);
    DimensionValue best = DimensionValue::empty();
    for (const auto& q : comps.components) {
        if (!contained_in(q, p_basis)) continue;
        DimensionValue dim_q = quotient_dim(fr, q.generators);
        best = DimensionValue::max(best, DimensionValue::finite(dim_q.value() - dim_p.value()));
    }
    if (best.is_empty())
        throw InconsistentWitnessError("the witness prime contains none of the listed components");
    return best;
}

AltitudeCheck altitude_check(const AlgebraPresentation& a, const SpecPoint& pt,
                             const PrimeWitness& prime, const ComponentList& comps) {
    FibreRing fr = fibre_at(a, pt);
    if (krull_dim_affine(fr).is_empty())
        throw InconsistentWitnessError("the fibre at " + pt.to_string() +
                                       " is the zero ring; no proper witness exists");
    AltitudeCheck out;
    out.height = height_at(fr, prime, comps);
    out.td_quotient = quotient_dim(fr, prime.generators);
    GroebnerBasis p_basis = quotient_basis(fr, prime.generators);
    for (const auto& q : comps.components) {
        if (!contained_in(q, p_basis)) continue;
        out.td_localized = DimensionValue::max(out.td_localized, quotient_dim(fr, q.generators));
    }
    out.holds = DimensionValue::plus(out.height, out.td_quotient) == out.td_localized;
    return out;
}

bool verify_af_at_prime(const AlgebraPresentation& a, const SpecPoint& pt,
                        const PrimeWitness& prime, const ComponentList& comps) {
    return altitude_check(a, pt, prime, comps).holds;
}

SeidenbergBounds seidenberg_bounds(const AlgebraPresentation& a) {
    SeidenbergBounds out;
    EffectiveSpectrum spectrum = effective_spectrum(a);
    DimensionValue e = effective_dim(spectrum, a.base());
    DimensionValue f = fibre_dim(a);
    out.lower = f;
    if (e.is_empty() || f.is_empty()) {
        out.upper = DimensionValue::empty();
        out.dim_if_known = DimensionValue::empty();  // zero ring
        return out;
    }
    out.upper = DimensionValue::finite(f.value() + (1 + f.value()) * e.value());
    if (e.value() == 0) out.dim_if_known = f;
    // Pure polynomial rings over the base: base chains lift along the
    // going-down extension, so e + f is also a lower bound.
    bool pure_polynomial = !a.is_product() && a.factors().size() == 1 &&
                           a.factors().front().relations.empty();
    if (pure_polynomial) out.refined_lower = DimensionValue::finite(e.value() + f.value());
    return out;
}

WitnessData parse_witness(std::string_view text, const AlgebraPresentation& a,
                          MonomialOrder::Kind order_kind) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("witness JSON syntax error: ") + e.what(), 1, 1);
    }
    if (!doc.is_object() || !doc.contains("fibre") || !doc.contains("prime") ||
        !doc.contains("components"))
        throw ValidationError("witness file needs 'fibre', 'prime' and 'components'");

    WitnessData out;
    const auto& fj = doc.at("fibre");
    if (fj.is_string() && fj.get<std::string>() == "generic") {
        out.point = SpecPoint::generic();
    } else if (fj.is_object() && fj.contains("at")) {
        const auto& at = fj.at("at");
        mpz_class p = at.is_string() ? mpz_class(at.get<std::string>(), 10)
                                     : mpz_class(std::to_string(at.get<long long>()));
        out.point = SpecPoint::closed(std::move(p));
    } else {
        throw ValidationError("witness 'fibre' must be \"generic\" or {\"at\": p}");
    }
    validate_point(a.base(), out.point);

    FibreRing fr = fibre_at(a, out.point);
    const FibreComponent& comp = fr.single();
    MonomialOrder order{order_kind, static_cast<int>(comp.vars.size())};

    auto parse_gens = [&](const nlohmann::json& arr) {
        if (!arr.is_array()) throw ValidationError("witness generators must be an array");
        std::vector<Polynomial> gens;
        for (const auto& e : arr)
            gens.push_back(parse_expression(e.get<std::string>(), comp.vars, fr.field, order));
        return gens;
    };
    out.prime.generators = parse_gens(doc.at("prime"));
    for (const auto& comp_gens : doc.at("components"))
        out.components.components.push_back({parse_gens(comp_gens)});
    return out;
}

MaximalPoints maximal_effective_points(const EffectiveSpectrum& spectrum) {
    MaximalPoints out;
    if (spectrum.is_empty()) return out;
    if (spectrum.cofinite || !spectrum.closed_points.empty()) {
        out.cofinite = spectrum.cofinite;
        out.closed_points = spectrum.closed_points;
        return out;
    }
    out.generic_only = true;
    return out;
}

}  // namespace fibredim
