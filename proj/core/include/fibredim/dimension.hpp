#pragma once

#include <optional>
#include <span>
#include <string>

#include "fibredim/groebner.hpp"

namespace fibredim {

/// Codomain of every dimension/height/transcendence-degree operation: Empty
/// (the zero ring / empty supremum) or a non-negative integer.
class DimensionValue {
public:
    /// Default-constructed values are Empty.
    DimensionValue() = default;

    static DimensionValue empty() { return DimensionValue(); }
    static DimensionValue finite(long v);

    bool is_empty() const { return !value_.has_value(); }
    long value() const;

    bool operator==(const DimensionValue& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const DimensionValue& rhs) const { return !(*this == rhs); }

    /// Empty counts as the minimum (the empty supremum absorbs into the max).
    static DimensionValue max(const DimensionValue& a, const DimensionValue& b);
    /// Empty absorbs (the sum of dimensions of a zero factor is Empty).
    static DimensionValue plus(const DimensionValue& a, const DimensionValue& b);

    std::string to_string() const;

private:
    explicit DimensionValue(long v) : value_(v) {}

    std::optional<long> value_;
};

enum class SubsetSearch {
    pruned,      // depth-first with monotonicity pruning and a cardinality bound
    exhaustive,  // all 2^n subsets; the desk-scale reference path
};

/// Largest cardinality of a variable subset S such that no leading monomial is
/// supported entirely inside S. Requires var_count <= 30 and no constant
/// monomial in `leading`.
int independent_set_dimension(std::span<const Monomial> leading, int var_count,
                              SubsetSearch mode = SubsetSearch::pruned);

/// Krull dimension of k[vars]/(relations) for a field coefficient domain,
/// via the reduced basis' leading monomials. Empty iff the ideal is trivial.
/// Order-independent.
DimensionValue krull_dim_ideal(std::span<const Polynomial> relations, const CoeffDomain& domain,
                               const MonomialOrder& order,
                               SubsetSearch mode = SubsetSearch::pruned);

}  // namespace fibredim
