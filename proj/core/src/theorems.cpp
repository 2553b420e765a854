#include "fibredim/theorems.hpp"

#include <algorithm>
#include <random>

#include "fibredim/dsl.hpp"
#include "fibredim/numeric.hpp"

namespace fibredim {

std::string to_string(FormulaPath path) {
    switch (path) {
        case FormulaPath::fibrewise: return "fibrewise";
        case FormulaPath::common_point_max: return "common-point-max";
        case FormulaPath::zero_dim_factor: return "zero-dim-factor";
        case FormulaPath::nonzero_characteristic: return "nonzero-char";
        case FormulaPath::boolean_factor: return "boolean";
    }
    return "?";
}

namespace {

bool integer_like_base(const BaseRing& base) {
    return base.kind == BaseRing::Kind::integers || base.kind == BaseRing::Kind::modular;
}

// Nonzero-ness decided directly on the presentation's own ideals.
bool direct_nonzero(const AlgebraPresentation& a) {
    for (const auto& f : a.factors()) {
        if (integer_like_base(f.base)) {
            MonomialOrder order{MonomialOrder::Kind::grevlex, static_cast<int>(f.vars.size())};
            std::vector<Polynomial> gens = f.relations;
            if (f.base.kind == BaseRing::Kind::modular)
                gens.push_back(Polynomial::constant(CoeffDomain::integers(), order, f.base.modulus));
            if (!is_trivial(buchberger_integer(gens, order))) return true;
        } else {
            MonomialOrder order{MonomialOrder::Kind::grevlex, static_cast<int>(f.vars.size())};
            if (!is_trivial(buchberger_field(f.relations, f.base.coefficient_domain(), order)))
                return true;
        }
    }
    return false;
}

// Closed points named by either spectrum; for cofinite spectra these are the
// excluded primes, the only finite data in play.
std::vector<mpz_class> closed_points_in_play(const EffectiveSpectrum& sa,
                                             const EffectiveSpectrum& sb) {
    std::vector<mpz_class> pts = sa.closed_points;
    pts.insert(pts.end(), sb.closed_points.begin(), sb.closed_points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<SpecPoint> enumerate_points(const EffectiveSpectrum& spectrum) {
    if (spectrum.cofinite)
        throw UnsupportedConfigError(
            "the common effective spectrum is cofinite and cannot be enumerated");
    std::vector<SpecPoint> pts;
    if (spectrum.includes_generic) pts.push_back(SpecPoint::generic());
    for (const auto& p : spectrum.closed_points) pts.push_back(SpecPoint::closed(p));
    return pts;
}

void require_vanishing_effective_dim(const AlgebraPresentation& a,
                                     const AlgebraPresentation& b) {
    if (a.base() != b.base())
        throw ValidationError("tensor operands must share a base ring: " + a.base().to_string() +
                              " vs " + b.base().to_string());
    if (a.base().kind != BaseRing::Kind::integers) return;
    if (characteristic(a) == 0 && characteristic(b) == 0)
        throw UnsupportedConfigError(
            "unsupported configuration: over base Z both factors have characteristic zero, so the "
            "tensor's effective dimension need not vanish and its absolute dimension is not "
            "computed; per-point dimensions remain available");
}

TensorDimReport build_report(const AlgebraPresentation& a, const AlgebraPresentation& b,
                             FormulaPath path) {
    EffectiveSpectrum sa = effective_spectrum(a);
    EffectiveSpectrum sb = effective_spectrum(b);
    EffectiveSpectrum common = EffectiveSpectrum::intersect(sa, sb);

    AlgebraPresentation joint = tensor_presentation(a, b);

    TensorDimReport report;
    report.path = path;
    for (const SpecPoint& pt : enumerate_points(common)) {
        PointComparison cmp;
        cmp.point = pt;
        cmp.dim_left = dim_at(a, pt);
        cmp.dim_right = dim_at(b, pt);
        cmp.formula = DimensionValue::plus(cmp.dim_left, cmp.dim_right);
        cmp.oracle = dim_at(joint, pt);
        report.formula_dim = DimensionValue::max(report.formula_dim, cmp.formula);
        report.points.push_back(std::move(cmp));
    }
    report.oracle_dim = fibre_dim(joint);

    if (effective_spectrum(joint) != common)
        throw std::logic_error(
            "internal: the tensor presentation's effective spectrum differs from the spectra "
            "intersection");

    report.agree = report.formula_dim == report.oracle_dim;
    for (const auto& cmp : report.points)
        report.agree = report.agree && cmp.formula == cmp.oracle;
    return report;
}

}  // namespace

bool is_triplet(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.base() != b.base())
        throw ValidationError("is_triplet requires a shared base ring");
    bool via_spectra =
        !EffectiveSpectrum::intersect(effective_spectrum(a), effective_spectrum(b)).is_empty();
    bool via_tensor = direct_nonzero(tensor_presentation(a, b));
    if (via_spectra != via_tensor)
        throw std::logic_error("internal: spectra intersection and direct tensor check disagree");
    return via_tensor;
}

EffectiveSpectrum effective_spectrum_tensor(const AlgebraPresentation& a,
                                            const AlgebraPresentation& b) {
    if (a.base() != b.base())
        throw ValidationError("effective_spectrum_tensor requires a shared base ring");
    EffectiveSpectrum sa = effective_spectrum(a);
    EffectiveSpectrum sb = effective_spectrum(b);
    EffectiveSpectrum common = EffectiveSpectrum::intersect(sa, sb);

    AlgebraPresentation joint = tensor_presentation(a, b);
    for (const auto& p : closed_points_in_play(sa, sb)) {
        SpecPoint pt = SpecPoint::closed(p);
        if (is_effective(joint, pt) != common.contains_closed(p))
            throw std::logic_error("internal: direct fibre test disagrees with the intersection at " +
                                   pt.to_string());
    }
    if (sa.includes_generic && sb.includes_generic) {
        if (!is_effective(joint, SpecPoint::generic()) || !common.includes_generic)
            throw std::logic_error("internal: generic fibre test disagrees with the intersection");
    }
    return common;
}

DimensionValue d_value(const DValueRequest& request) {
    if (request.d < 0 || request.s < request.d)
        throw ValidationError("d_value requires 0 <= d <= s");
    if (request.mode == DValueRequest::Mode::closed_form_affine) {
        DimensionValue dim = krull_dim_affine(request.fibre);
        if (dim.is_empty())
            throw ValidationError("d_value closed form is undefined on the zero fibre");
        return DimensionValue::finite(request.d + dim.value());
    }
    DimensionValue best = DimensionValue::empty();
    for (const auto& witness : request.witnesses) {
        DimensionValue ht = height_at(request.fibre, witness, request.components);
        DimensionValue quotient = fibre_quotient_dim(request.fibre, witness.generators);
        long capped = std::min(request.s, request.d + quotient.value());
        best = DimensionValue::max(best, DimensionValue::finite(ht.value() + capped));
    }
    return best;
}

DimensionValue dim_tensor_at(const AlgebraPresentation& a, const AlgebraPresentation& b,
                             const SpecPoint& pt) {
    if (a.base() != b.base())
        throw ValidationError("dim_tensor_at requires a shared base ring");
    DimensionValue left = dim_at(a, pt);
    DimensionValue right = dim_at(b, pt);
    return DimensionValue::plus(left, right);
}

TensorDimReport dim_tensor(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    require_vanishing_effective_dim(a, b);
    FormulaPath path = a.base().kind == BaseRing::Kind::integers
                           ? FormulaPath::nonzero_characteristic
                           : FormulaPath::common_point_max;
    return build_report(a, b, path);
}

TensorDimReport dim_tensor_zero_dim(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    require_vanishing_effective_dim(a, b);
    DimensionValue fd = fibre_dim(a);
    if (fd.is_empty() || fd.value() != 0)
        throw UnsupportedConfigError(
            "the zero-dimensional path requires the left factor to have fibre dimension 0; got " +
            fd.to_string());
    TensorDimReport report = build_report(a, b, FormulaPath::zero_dim_factor);
    // With d = 0 every point contributes dim of B's fibre; the left factor
    // adds nothing, so the generic path must give the same numbers.
    for (const auto& cmp : report.points) {
        if (cmp.formula != DimensionValue::plus(DimensionValue::finite(0), cmp.dim_right))
            throw std::logic_error("internal: zero-dimensional path deviates from the generic path");
    }
    return report;
}

TensorDimReport boolean_dim(int k, const AlgebraPresentation& b) {
    if (b.base().kind != BaseRing::Kind::integers)
        throw ValidationError("boolean_dim requires the right factor over base Z");
    AlgebraPresentation atoms = boolean_atoms(k, MonomialOrder::Kind::grevlex);
    if (!is_effective(b, SpecPoint::closed(2)))
        throw UnsupportedConfigError(
            "not a triplet: B/2B is the zero ring, so the Boolean tensor product is zero");
    TensorDimReport report = build_report(atoms, b, FormulaPath::boolean_factor);
    // The formula value is dim(B/2B) on the nose.
    DimensionValue at_two = dim_at(b, SpecPoint::closed(2));
    if (report.formula_dim != at_two)
        throw std::logic_error("internal: Boolean path deviates from dim of B's fibre at 2");
    return report;
}

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

// Random element of the ideal generated by gens: a small random polynomial
// combination. Returns the zero polynomial for empty generator lists.
Polynomial random_ideal_element(std::mt19937_64& rng, const std::vector<Polynomial>& gens,
                                const CoeffDomain& domain, const MonomialOrder& order) {
    Polynomial acc = Polynomial::zero(domain, order);
    for (const auto& g : gens) {
        long c = static_cast<long>(rand_below(rng, 7)) - 3;
        int v = order.var_count == 0 ? -1 : static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(order.var_count + 1))) - 1;
        Monomial m = v < 0 ? Monomial::unit(order.var_count)
                           : Monomial::variable(order.var_count, v);
        acc = acc + g.times_term(Coefficient(domain, mpz_class(c)), m);
    }
    return acc;
}

}  // namespace

CrossCheckReport cross_check(const AlgebraPresentation& a, const AlgebraPresentation& b,
                             const CrossCheckOptions& options) {
    CrossCheckReport out;
    out.seed = options.seed;
    out.instances = {render_compact(a), render_compact(b)};

    TensorDimReport report = dim_tensor(a, b);
    out.failures = report.agree ? 0 : 1;

    // Membership probes: images of each side's fibre ideal land in the
    // tensor fibre's ideal.
    if (!a.is_product() && !b.is_product() && options.membership_probes > 0) {
        std::mt19937_64 rng(options.seed);
        AlgebraPresentation joint = tensor_presentation(a, b);
        int na = static_cast<int>(a.single().vars.size());
        int total = static_cast<int>(joint.single().vars.size());
        for (const auto& cmp : report.points) {
            FibreRing fa = fibre_at(a, cmp.point);
            FibreRing fb = fibre_at(b, cmp.point);
            FibreRing ft = fibre_at(joint, cmp.point);
            GroebnerBasis joint_gb =
                buchberger_field(ft.single().relations, ft.field, ft.component_order(0));
            for (int i = 0; i < options.membership_probes; ++i) {
                const bool left = (i % 2 == 0);
                const FibreComponent& comp = left ? fa.single() : fb.single();
                MonomialOrder order{ft.order_kind, static_cast<int>(comp.vars.size())};
                Polynomial sample = random_ideal_element(rng, comp.relations, ft.field, order);
                Polynomial embedded = sample.embedded(total, left ? 0 : na);
                ++out.probes_run;
                if (!normal_form(embedded, joint_gb).is_zero()) ++out.failures;
            }
        }
    }

    out.reports.push_back(std::move(report));
    return out;
}

}  // namespace fibredim
