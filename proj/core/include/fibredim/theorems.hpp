#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibredim/spectra.hpp"

namespace fibredim {

/// Mechanism used to evaluate a tensor dimension.
enum class FormulaPath {
    fibrewise,               // per-point dimension of the tensor fibre
    common_point_max,        // max over the common effective points (field / Z/n bases)
    zero_dim_factor,         // left factor has fibre dimension zero
    nonzero_characteristic,  // base Z with a nonzero characteristic in play
    boolean_factor,          // left factor is a Boolean atom product
};
std::string to_string(FormulaPath path);

/// Side-by-side values at one common effective point: the two factor
/// dimensions, the formula value (their sum), and the oracle value computed
/// on the concatenated presentation.
struct PointComparison {
    SpecPoint point;
    DimensionValue dim_left;
    DimensionValue dim_right;
    DimensionValue formula;
    DimensionValue oracle;
};

struct TensorDimReport {
    FormulaPath path = FormulaPath::common_point_max;
    std::vector<PointComparison> points;
    DimensionValue formula_dim;
    DimensionValue oracle_dim;
    bool agree = false;
};

/// True iff A (x) B is nonzero over the shared base; computed both as
/// non-emptiness of the effective-spectra intersection and directly on the
/// tensor presentation, which must agree.
bool is_triplet(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Intersection of the effective spectra, verified against direct fibre
/// tests of the tensor presentation at every closed point in play.
EffectiveSpectrum effective_spectrum_tensor(const AlgebraPresentation& a,
                                            const AlgebraPresentation& b);

/// Wadsworth-style invariant of a fibre: the supremum over primes P of
/// ht(P) + min(s, d + dim(fibre/P)), using that extending a prime to a
/// polynomial ring over a Noetherian ring preserves its height.
///
/// Closed form: for a nonzero finitely presented fibre the supremum is
/// attained at a maximal ideal of maximal height (each affine component is
/// catenary and d <= s caps nothing there), giving exactly d + dim(fibre).
/// Witness mode evaluates the literal supremum over caller witnesses, a
/// certified lower bound.
struct DValueRequest {
    enum class Mode { closed_form_affine, witness_restricted };

    long s = 0;
    long d = 0;  // invariant: 0 <= d <= s
    FibreRing fibre;
    Mode mode = Mode::closed_form_affine;
    std::vector<PrimeWitness> witnesses;  // witness mode only
    ComponentList components;
};
DimensionValue d_value(const DValueRequest& request);

/// Formula-side dimension of the tensor fibre at one point: Empty unless the
/// point is effective for both factors, else dim_at(A,pt) + dim_at(B,pt).
DimensionValue dim_tensor_at(const AlgebraPresentation& a, const AlgebraPresentation& b,
                             const SpecPoint& pt);

/// Overall tensor dimension with oracle comparison. Requires a base for which
/// the tensor's effective dimension vanishes: a field, Z/n, or Z with at
/// least one factor of nonzero characteristic.
TensorDimReport dim_tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Same, for a left factor of fibre dimension zero; asserts agreement with
/// the generic path.
TensorDimReport dim_tensor_zero_dim(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// dim(F_2^k (x) B) over Z: the formula value is dim of B's fibre at 2, the
/// oracle expands the atom product against B. Requires B over base Z with
/// B/2B nonzero.
TensorDimReport boolean_dim(int k, const AlgebraPresentation& b);

struct CrossCheckOptions {
    std::uint64_t seed = 0;
    int membership_probes = 4;  // per common point; affine pairs only
};

struct CrossCheckReport {
    std::uint64_t seed = 0;
    std::vector<std::string> instances;
    std::vector<TensorDimReport> reports;
    int probes_run = 0;
    int failures = 0;
};

/// Two-pipeline comparison for one pair: the formula side never touches the
/// joint presentation, the oracle side is the concatenated presentation
/// reduced fibrewise. Seeded membership probes push random elements of each
/// factor's fibre ideal through the tensor fibre and expect normal form zero.
CrossCheckReport cross_check(const AlgebraPresentation& a, const AlgebraPresentation& b,
                             const CrossCheckOptions& options = {});

}  // namespace fibredim
